#ifndef RELAYSEC_CHANNEL_HPP
#define RELAYSEC_CHANNEL_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "relaysec/params.hpp"
#include "relaysec/rng.hpp"

namespace relaysec {

// One realization of all squared fading gains needed for a two-hop trial.
// Every entry is marginally Exp(1). g_rr is symmetric with zero diagonal.
// The eavesdropper-side matrices are drawn separately per hop because the
// two hops are distinct packet transmissions.
struct ChannelState {
    int n = 0;
    int m = 0;
    std::vector<double> g_sr;     // |h_{S,Rj}|^2, length n
    std::vector<double> g_rd;     // |h_{Rj,D}|^2, length n
    std::vector<double> g_rr;     // |h_{Ri,Rj}|^2, n*n row-major
    std::vector<double> g_se;     // |h_{S,Ek}|^2, length m (hop 1)
    std::vector<double> g_re_h1;  // |h_{Rj,Ek}|^2 in hop 1, n*m row-major
    std::vector<double> g_re_h2;  // |h_{Rj,Ek}|^2 in hop 2, n*m row-major

    double rr(int i, int j) const { return g_rr[static_cast<std::size_t>(i) * n + j]; }
    double re1(int j, int e) const { return g_re_h1[static_cast<std::size_t>(j) * m + e]; }
    double re2(int j, int e) const { return g_re_h2[static_cast<std::size_t>(j) * m + e]; }

    void resize(int n_, int m_) {
        n = n_;
        m = m_;
        g_sr.resize(n);
        g_rd.resize(n);
        g_rr.assign(static_cast<std::size_t>(n) * n, 0.0);
        g_se.resize(m);
        g_re_h1.resize(static_cast<std::size_t>(n) * m);
        g_re_h2.resize(static_cast<std::size_t>(n) * m);
    }
};

// Draw order is fixed: g_sr, g_rd, then the upper triangle of g_rr
// (mirrored to keep the matrix symmetric).
inline void sample_legitimate_gains(ChannelState& ch, RandomStream& rng) {
    for (double& g : ch.g_sr) g = sample_exponential(rng);
    for (double& g : ch.g_rd) g = sample_exponential(rng);
    for (int i = 0; i < ch.n; ++i) {
        ch.g_rr[static_cast<std::size_t>(i) * ch.n + i] = 0.0;
        for (int j = i + 1; j < ch.n; ++j) {
            const double g = sample_exponential(rng);
            ch.g_rr[static_cast<std::size_t>(i) * ch.n + j] = g;
            ch.g_rr[static_cast<std::size_t>(j) * ch.n + i] = g;
        }
    }
}

inline void sample_eavesdropper_gains(ChannelState& ch, RandomStream& rng) {
    for (double& g : ch.g_se) g = sample_exponential(rng);
    for (double& g : ch.g_re_h1) g = sample_exponential(rng);
    for (double& g : ch.g_re_h2) g = sample_exponential(rng);
}

inline ChannelState sample_channel_state(const SystemParams& params, RandomStream& rng) {
    validate(params);
    ChannelState ch;
    ch.resize(params.n, params.m);
    sample_legitimate_gains(ch, rng);
    sample_eavesdropper_gains(ch, rng);
    return ch;
}

// SINR with the aggregate jamming gain already summed.
inline double sinr_with_total_jam_gain(double signal_gain, double jam_gain_sum,
                                       double es, double n0) {
    return es * signal_gain / (es * jam_gain_sum + 0.5 * n0);
}

// SINR of a link: E_s*g / (sum_j E_s*g_j + N0/2). Noise enters only as the
// deterministic constant N0/2.
inline double sinr(double signal_gain, std::span<const double> jam_gains,
                   double es, double n0) {
    double jam_sum = 0.0;
    for (double g : jam_gains) jam_sum += g;
    return sinr_with_total_jam_gain(signal_gain, jam_sum, es, n0);
}

}  // namespace relaysec

#endif
