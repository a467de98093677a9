#ifndef RELAYSEC_PARAMS_HPP
#define RELAYSEC_PARAMS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace relaysec {

// Protocol and channel scalars shared by the simulator and the bound
// calculator.
struct SystemParams {
    int n = 5;              // number of relay nodes
    int m = 2;              // number of eavesdroppers
    int k = 2;              // candidate relay set size, 1 <= k <= n
    double tau = 0.3;       // jammer-selection gain threshold
    double gamma_r = 1.0;   // legitimate SINR threshold
    double gamma_e = 1.0;   // eavesdropper SINR threshold
    double es = 1.0;        // common transmit power
    double n0 = 1.0;        // noise parameter; SINR denominator constant is n0/2
    double epsilon_t = 0.1; // transmission-outage target
    double epsilon_s = 0.1; // secrecy-outage target
};

inline void validate(const SystemParams& p) {
    auto fail = [](const std::string& field, const std::string& what) {
        throw std::invalid_argument(field + ": " + what);
    };
    if (p.n < 1) fail("n", "must be a positive integer");
    if (p.m < 0) fail("m", "must be non-negative");
    if (p.k < 1 || p.k > p.n) fail("k", "must satisfy 1 <= k <= n");
    if (!(p.tau >= 0.0) || !std::isfinite(p.tau)) fail("tau", "must be finite and >= 0");
    if (!(p.gamma_r > 0.0) || !std::isfinite(p.gamma_r)) fail("gamma_r", "must be finite and > 0");
    if (!(p.gamma_e > 0.0) || !std::isfinite(p.gamma_e)) fail("gamma_e", "must be finite and > 0");
    if (!(p.es > 0.0) || !std::isfinite(p.es)) fail("es", "must be finite and > 0");
    if (!(p.n0 > 0.0) || !std::isfinite(p.n0)) fail("n0", "must be finite and > 0");
    if (!(p.epsilon_t > 0.0 && p.epsilon_t < 1.0)) fail("epsilon_t", "must lie in (0,1)");
    if (!(p.epsilon_s > 0.0 && p.epsilon_s < 1.0)) fail("epsilon_s", "must lie in (0,1)");
}

}  // namespace relaysec

#endif
