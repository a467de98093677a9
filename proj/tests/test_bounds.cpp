#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <optional>

#include "relaysec/bounds.hpp"

using namespace relaysec;

namespace {

// Independent long-double re-evaluations used as oracles for the
// double-precision implementation.
long double psi_ref(int n, long double tau, long double gamma_r) {
    return std::exp(-2.0L * gamma_r * (n - 1) * (1.0L - std::exp(-tau)) * tau);
}

long double tau_upper_k1_ref(int n, long double gamma_r, long double epsilon_t) {
    return std::sqrt(-std::log(std::sqrt(1.0L - epsilon_t)) /
                     (2.0L * gamma_r * (n - 1)));
}

}  // namespace

TEST_CASE("psi closed-form values") {
    CHECK(psi(5, 0.0, 1.0) == 1.0);
    CHECK(psi(1, 3.7, 2.0) == 1.0);
    const double ref = static_cast<double>(psi_ref(5, 0.5L, 1.0L));
    CHECK(psi(5, 0.5, 1.0) == Catch::Approx(ref).epsilon(1e-12));
    CHECK(psi(5, 0.5, 1.0) == Catch::Approx(0.2072401).epsilon(1e-6));
}

TEST_CASE("psi strictly decreasing in tau for n >= 2") {
    for (int n : {2, 5, 20}) {
        double prev = psi(n, 0.001, 1.5);
        for (double tau = 0.1; tau <= 3.0; tau += 0.1) {
            const double cur = psi(n, tau, 1.5);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("transmission outage bound hand-evaluated cases") {
    CHECK(transmission_outage_bound(5, 2, 0.0, 1.0) == 0.0);
    CHECK(transmission_outage_bound(1, 1, 2.0, 1.0) == 0.0);
    // n=2, k=1, Psi=0.5: X = C(2,2)*(0.5)^2 = 0.25, bound = 0.5 - 0.0625
    CHECK(transmission_outage_bound_from_psi(2, 1, 0.5) ==
          Catch::Approx(0.4375).epsilon(1e-12));
    // n=3, k=2, Psi=0.6: X = ((1-psi)^3 + ((1-psi)^3 + 3(1-psi)^2 psi))/2
    const long double q = 0.4L;
    const long double x =
        (q * q * q + (q * q * q + 3.0L * q * q * 0.6L)) / 2.0L;
    const double ref = static_cast<double>(2.0L * x - x * x);
    CHECK(transmission_outage_bound_from_psi(3, 2, 0.6) ==
          Catch::Approx(ref).epsilon(1e-12));
}

TEST_CASE("transmission outage bound non-decreasing in k") {
    for (double tau : {0.2, 0.5, 1.0}) {
        for (int n : {3, 8, 30}) {
            double prev = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double b = transmission_outage_bound(n, k, tau, 0.5);
                CHECK(b >= prev - 1e-15);
                prev = b;
            }
        }
    }
}

TEST_CASE("transmission outage bound stable for very large n") {
    for (int n : {100, 1000, 10000}) {
        const double b = transmission_outage_bound(n, n, 0.05, 0.1);
        CHECK(std::isfinite(b));
        CHECK(b >= 0.0);
        CHECK(b <= 1.0);
    }
}

TEST_CASE("secrecy outage bound cases") {
    CHECK(secrecy_outage_bound(5, 0.0, 0.3, 1.0).value == 0.0);
    const SecrecyBound at_zero_tau = secrecy_outage_bound(5, 1.0, 0.0, 1.0);
    CHECK(at_zero_tau.value == Catch::Approx(1.0));
    // n=2, m=1, gamma_e=1, tau=50: Y = 0.5, bound 0.75
    CHECK(secrecy_outage_bound(2, 1.0, 50.0, 1.0).value ==
          Catch::Approx(0.75).epsilon(1e-12));
    const SecrecyBound vac = secrecy_outage_bound(2, 5.0, 0.1, 1.0);
    CHECK(vac.vacuous);
    CHECK(vac.value == 1.0);
}

TEST_CASE("tau_upper matches the k=1 closed form to 1e-12") {
    for (int n : {2, 5, 17, 100}) {
        for (double et : {0.05, 0.1, 0.5, 0.9}) {
            for (double gr : {0.5, 1.0, 2.0}) {
                const auto general = tau_upper(n, 1, gr, et);
                REQUIRE(general.has_value());
                const double ref = static_cast<double>(
                    tau_upper_k1_ref(n, static_cast<long double>(gr),
                                     static_cast<long double>(et)));
                CHECK(*general == Catch::Approx(ref).epsilon(1e-12));
            }
        }
    }
    const auto v = tau_upper(5, 1, 1.0, 0.1);
    CHECK(*v == Catch::Approx(0.0811482).epsilon(1e-5));
}

TEST_CASE("tau_upper undefined when the log argument leaves (0,1)") {
    CHECK_FALSE(tau_upper(5, 2, 1.0, 0.5).has_value());
    CHECK_FALSE(tau_upper(10, 10, 1.0, 0.1).has_value());
}

TEST_CASE("tau_lower arithmetic and domain") {
    const auto v = tau_lower(10, 1.0, 1.0, 0.1);
    REQUIRE(v.has_value());
    const long double a =
        1.0L + std::log((1.0L - std::sqrt(0.9L)) / 1.0L) / (9.0L * std::log(2.0L));
    CHECK(*v == Catch::Approx(static_cast<double>(-std::log(a))).epsilon(1e-12));
    CHECK(*v == Catch::Approx(0.6463).margin(1e-4));

    CHECK_FALSE(tau_lower(5, 1.0, 1.0, 0.1).has_value());

    // m below 1 - sqrt(1-eps_s) makes secrecy free: the negative log is
    // floored at 0.
    const auto free_tau = tau_lower(10, 0.04, 1.0, 0.1);
    REQUIRE(free_tau.has_value());
    CHECK(*free_tau == 0.0);
}

TEST_CASE("max eavesdroppers at the tau_upper operating point") {
    const auto small = max_eavesdroppers(5, 1, 1.0, 1.0, 0.1, 0.1);
    REQUIRE(small.has_value());
    CHECK(*small == 0.0);
    const auto large = max_eavesdroppers(1000, 1, 1.0, 1.0, 0.1, 0.1);
    REQUIRE(large.has_value());
    CHECK(*large == 1.0);
    CHECK_FALSE(max_eavesdroppers(5, 2, 1.0, 1.0, 0.5, 0.1).has_value());
}

TEST_CASE("max eavesdroppers monotone from k=1 and in n") {
    // Larger candidate sets cost tolerable eavesdroppers relative to the
    // optimal-selection case k=1. (Between k=2 and k=3 the bound's log
    // argument is not monotone, so only the comparison against k=1 holds
    // in general.)
    for (int n : {50, 200, 1000}) {
        const auto best = max_eavesdroppers(n, 1, 1.0, 1.0, 0.9, 0.5);
        REQUIRE(best.has_value());
        for (int k : {2, 3}) {
            const auto m = max_eavesdroppers(n, k, 1.0, 1.0, 0.9, 0.5);
            if (m) CHECK(*m <= *best);
        }
    }
    std::optional<double> prev;
    for (int n : {10, 100, 1000, 10000}) {
        const auto m = max_eavesdroppers(n, 1, 1.0, 1.0, 0.1, 0.1);
        REQUIRE(m.has_value());
        if (prev) CHECK(*m >= *prev);
        prev = m;
    }
}

TEST_CASE("secrecy bound at tau_lower(m_max) meets the secrecy target") {
    for (int n : {200, 1000, 5000}) {
        for (int k : {1, 2}) {
            for (double es : {0.1, 0.5}) {
                const auto mm = max_eavesdroppers(n, k, 1.0, 1.0, 0.1, es);
                if (!mm || *mm < 1.0) continue;
                const auto tmin = tau_lower(n, *mm, 1.0, es);
                if (!tmin) continue;
                const SecrecyBound b = secrecy_outage_bound(n, *mm, *tmin, 1.0);
                CHECK(b.value <= es + 1e-9);
            }
        }
    }
}

TEST_CASE("feasibility report composition") {
    SystemParams p;
    p.n = 10;
    p.m = 1;
    p.k = 1;
    p.tau = 0.3;
    p.gamma_r = 1.0;
    p.gamma_e = 1.0;
    p.epsilon_t = 0.1;
    p.epsilon_s = 0.1;
    const BoundsReport r = feasibility(p);
    REQUIRE(r.tau_max.has_value());
    REQUIRE(r.tau_min.has_value());
    CHECK(*r.tau_max == Catch::Approx(0.054100).margin(1e-5));
    CHECK(*r.tau_min == Catch::Approx(0.6463).margin(1e-4));
    CHECK_FALSE(r.feasible);

    p.m = 0;
    const BoundsReport no_eaves = feasibility(p);
    REQUIRE(no_eaves.tau_min.has_value());
    CHECK(*no_eaves.tau_min == 0.0);
    CHECK(no_eaves.feasible == no_eaves.tau_max.has_value());

    // near-1 epsilon_t widens the window
    p.m = 1;
    p.epsilon_t = 0.99;
    const BoundsReport wide = feasibility(p);
    REQUIRE(wide.tau_max.has_value());
    CHECK(*wide.tau_max > *r.tau_max);
}
