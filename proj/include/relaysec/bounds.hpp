#ifndef RELAYSEC_BOUNDS_HPP
#define RELAYSEC_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "relaysec/params.hpp"

namespace relaysec {

// Closed-form performance bounds for the top-k relay selection protocol
// with cooperative jamming. The formulas have restricted validity at some
// parameter combinations; inapplicable evaluations come back as
// std::nullopt rather than NaN. All logs are natural.

namespace detail {

inline double log_binomial(int n, int i) {
    return std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0);
}

// Exact for n <= 62 (fits in uint64), log-gamma above.
inline double binomial(int n, int i) {
    if (i < 0 || i > n) return 0.0;
    if (n <= 62) {
        std::uint64_t c = 1;
        i = std::min(i, n - i);
        for (int j = 1; j <= i; ++j) {
            const std::uint64_t f = static_cast<std::uint64_t>(n - i + j);
            c = c / j * f + c % j * f / j;
        }
        return static_cast<double>(c);
    }
    return std::exp(log_binomial(n, i));
}

}  // namespace detail

// Psi = exp(-2*gamma_r*(n-1)*(1-e^-tau)*tau), the aggregate per-relay
// reliability factor.
inline double psi(int n, double tau, double gamma_r) {
    if (n < 1) throw std::invalid_argument("n: must be >= 1");
    if (tau < 0.0) throw std::invalid_argument("tau: must be >= 0");
    if (!(gamma_r > 0.0)) throw std::invalid_argument("gamma_r: must be > 0");
    return std::exp(-2.0 * gamma_r * (n - 1) * (-std::expm1(-tau)) * tau);
}

// Transmission-outage upper bound 2X - X^2 with
// X = (1/k) * sum_{j=1..k} P[Binomial(n, 1-Psi) >= n-j+1],
// evaluated from a given Psi.
inline double transmission_outage_bound_from_psi(int n, int k, double psi_value) {
    if (k < 1 || k > n) throw std::invalid_argument("k: must satisfy 1 <= k <= n");
    if (psi_value >= 1.0) return 0.0;
    if (psi_value <= 0.0) return 1.0;

    // Binomial(n, 1-Psi) pmf; log space avoids overflow for large n.
    std::vector<double> pmf(static_cast<std::size_t>(n) + 1);
    if (n <= 62) {
        for (int i = 0; i <= n; ++i) {
            pmf[i] = detail::binomial(n, i) * std::pow(1.0 - psi_value, i) *
                     std::pow(psi_value, n - i);
        }
    } else {
        const double lq = std::log1p(-psi_value);
        const double lp = std::log(psi_value);
        for (int i = 0; i <= n; ++i) {
            pmf[i] = std::exp(detail::log_binomial(n, i) + i * lq + (n - i) * lp);
        }
    }

    double x = 0.0;
    double tail = 0.0;  // P[Binomial >= n-j+1], grown one term per j
    for (int j = 1; j <= k; ++j) {
        tail += pmf[n - j + 1];
        x += tail;
    }
    x /= k;
    return std::clamp(2.0 * x - x * x, 0.0, 1.0);
}

inline double transmission_outage_bound(int n, int k, double tau, double gamma_r) {
    return transmission_outage_bound_from_psi(n, k, psi(n, tau, gamma_r));
}

struct SecrecyBound {
    double value = 0.0;
    // Y = m*(1+gamma_e)^-((n-1)(1-e^-tau)) past 1 means the union bound
    // carries no information; the value is clamped and flagged.
    bool vacuous = false;
};

// Secrecy-outage upper bound 2Y - Y^2 with
// Y = m * (1/(1+gamma_e))^((n-1)(1-e^-tau)). m may be fractional.
inline SecrecyBound secrecy_outage_bound(int n, double m, double tau, double gamma_e) {
    if (n < 1) throw std::invalid_argument("n: must be >= 1");
    if (m < 0.0) throw std::invalid_argument("m: must be >= 0");
    const double y =
        m * std::pow(1.0 / (1.0 + gamma_e), (n - 1) * (-std::expm1(-tau)));
    SecrecyBound b;
    b.vacuous = y > 1.0;
    b.value = b.vacuous ? 1.0 : std::clamp(2.0 * y - y * y, 0.0, 1.0);
    return b;
}

namespace detail {

// B = [C(k, floor(k/2)) * (1 + k*sqrt(1-epsilon_t))]^(1/k) - 1. The
// reliability constraint is only expressible when B lies in (0,1).
inline double reliability_log_argument(int k, double epsilon_t) {
    const double base = 1.0 + k * std::sqrt(1.0 - epsilon_t);
    if (k <= 62) {
        return std::pow(binomial(k, k / 2) * base, 1.0 / k) - 1.0;
    }
    return std::expm1((log_binomial(k, k / 2) + std::log(base)) / k);
}

}  // namespace detail

// Largest tau meeting the reliability target epsilon_t. Undefined when the
// bound's log argument leaves (0,1), which happens for many (k, epsilon_t).
inline std::optional<double> tau_upper(int n, int k, double gamma_r, double epsilon_t) {
    if (n < 2) throw std::invalid_argument("n: must be >= 2");
    if (k < 1 || k > n) throw std::invalid_argument("k: must satisfy 1 <= k <= n");
    const double b = detail::reliability_log_argument(k, epsilon_t);
    if (!(b > 0.0 && b < 1.0)) return std::nullopt;
    return std::sqrt(-std::log(b) / (2.0 * gamma_r * (n - 1)));
}

// Smallest tau meeting the secrecy target epsilon_s; 0 when secrecy is free,
// undefined when no finite tau suffices.
inline std::optional<double> tau_lower(int n, double m, double gamma_e, double epsilon_s) {
    if (n < 2) throw std::invalid_argument("n: must be >= 2");
    if (!(m > 0.0)) throw std::invalid_argument("m: must be > 0");
    const double a = 1.0 + std::log((1.0 - std::sqrt(1.0 - epsilon_s)) / m) /
                               ((n - 1) * std::log1p(gamma_e));
    if (a <= 0.0) return std::nullopt;
    return std::max(0.0, -std::log(a));
}

// Maximum number of tolerable eavesdroppers at tau = tau_upper. Integral
// valued; kept as double because the ratio can be astronomically large.
inline std::optional<double> max_eavesdroppers(int n, int k, double gamma_r,
                                               double gamma_e, double epsilon_t,
                                               double epsilon_s) {
    if (n < 2) throw std::invalid_argument("n: must be >= 2");
    if (k < 1 || k > n) throw std::invalid_argument("k: must satisfy 1 <= k <= n");
    const double b = detail::reliability_log_argument(k, epsilon_t);
    if (!(b > 0.0 && b < 1.0)) return std::nullopt;
    const double exponent = std::sqrt(-(n - 1) * std::log(b) / (2.0 * gamma_r));
    const double denom = std::pow(1.0 + gamma_e, -exponent);
    return std::floor((1.0 - std::sqrt(1.0 - epsilon_s)) / denom);
}

struct BoundsReport {
    double psi = 1.0;
    double p_out_t_bound = 0.0;
    double p_out_s_bound = 0.0;
    bool s_bound_vacuous = false;
    std::optional<double> tau_max;
    std::optional<double> tau_min;
    std::optional<double> m_max;
    bool feasible = false;                // tau window exists
    std::optional<bool> tau_in_window;    // configured tau inside [tau_min, tau_max]
    std::vector<std::string> diagnostics;

    std::string diagnostics_joined() const {
        std::string s;
        for (const auto& d : diagnostics) {
            if (!s.empty()) s += ';';
            s += d;
        }
        return s;
    }
};

// Evaluates every bound at the configured parameters and checks whether a
// tau window [tau_min, tau_max] exists.
inline BoundsReport feasibility(const SystemParams& p) {
    validate(p);
    BoundsReport r;
    r.psi = psi(p.n, p.tau, p.gamma_r);
    r.p_out_t_bound = transmission_outage_bound_from_psi(p.n, p.k, r.psi);
    const SecrecyBound sb = secrecy_outage_bound(p.n, p.m, p.tau, p.gamma_e);
    r.p_out_s_bound = sb.value;
    r.s_bound_vacuous = sb.vacuous;
    if (sb.vacuous) r.diagnostics.push_back("secrecy-bound-vacuous");

    if (p.n >= 2) {
        r.tau_max = tau_upper(p.n, p.k, p.gamma_r, p.epsilon_t);
        if (!r.tau_max) r.diagnostics.push_back("tau_max-inapplicable");
        if (p.m == 0) {
            r.tau_min = 0.0;  // no eavesdroppers, secrecy holds for any tau
        } else {
            r.tau_min = tau_lower(p.n, p.m, p.gamma_e, p.epsilon_s);
            if (!r.tau_min) r.diagnostics.push_back("tau_min-inapplicable");
        }
        r.m_max = max_eavesdroppers(p.n, p.k, p.gamma_r, p.gamma_e, p.epsilon_t,
                                    p.epsilon_s);
    } else {
        r.diagnostics.push_back("tau-window-requires-n>=2");
    }

    r.feasible = r.tau_min && r.tau_max && *r.tau_min <= *r.tau_max;
    if (r.feasible) {
        r.tau_in_window = *r.tau_min <= p.tau && p.tau <= *r.tau_max;
        if (!*r.tau_in_window) r.diagnostics.push_back("tau-outside-window");
    }
    return r;
}

}  // namespace relaysec

#endif
