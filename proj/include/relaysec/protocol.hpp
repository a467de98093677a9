#ifndef RELAYSEC_PROTOCOL_HPP
#define RELAYSEC_PROTOCOL_HPP

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "relaysec/channel.hpp"
#include "relaysec/params.hpp"
#include "relaysec/rng.hpp"

namespace relaysec {

// Record of one two-hop transmission. Both hops are always classified;
// hop 1 already exposed the packet to the eavesdroppers even if it failed.
struct TrialOutcome {
    int selected = -1;             // message relay index, 0-based
    std::vector<int> candidates;   // k indices, ascending
    bool hop1_ok = false;          // SINR at the relay >= gamma_r
    bool hop2_ok = false;          // SINR at the destination >= gamma_r
    std::vector<bool> eaves_hop1;  // per eavesdropper, SINR >= gamma_e on hop 1
    std::vector<bool> eaves_hop2;
    int jam1_size = 0;             // |R1|
    int jam2_size = 0;             // |R2|

    bool transmission_outage() const { return !(hop1_ok && hop2_ok); }

    bool secrecy_outage() const {
        for (bool b : eaves_hop1)
            if (b) return true;
        for (bool b : eaves_hop2)
            if (b) return true;
        return false;
    }
};

// The k relays with the largest min(g_sr[j], g_rd[j]). Ties break toward
// the smaller index; the result is in ascending index order.
inline void candidate_set(std::span<const double> g_sr, std::span<const double> g_rd,
                          int k, std::vector<int>& out) {
    const int n = static_cast<int>(g_sr.size());
    if (static_cast<int>(g_rd.size()) != n) {
        throw std::invalid_argument("candidate_set: gain vectors differ in length");
    }
    if (k < 1 || k > n) {
        throw std::invalid_argument("k: must satisfy 1 <= k <= n");
    }
    out.resize(n);
    std::iota(out.begin(), out.end(), 0);
    auto key = [&](int j) { return std::min(g_sr[j], g_rd[j]); };
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        const double ka = key(a), kb = key(b);
        if (ka != kb) return ka > kb;
        return a < b;
    });
    out.resize(k);
    std::sort(out.begin(), out.end());
}

inline std::vector<int> candidate_set(std::span<const double> g_sr,
                                      std::span<const double> g_rd, int k) {
    std::vector<int> out;
    candidate_set(g_sr, g_rd, k, out);
    return out;
}

// Uniform draw over the candidate set.
inline int select_relay(const std::vector<int>& candidates, RandomStream& rng) {
    if (candidates.empty()) {
        throw std::logic_error("select_relay: empty candidate set");
    }
    return candidates[rng.uniform_index(candidates.size())];
}

// R1 = { j != j* : |h_{Rj,Rj*}|^2 < tau }, strict inequality.
inline std::vector<int> jammer_set_hop1(const ChannelState& ch, int j_star, double tau) {
    std::vector<int> out;
    for (int j = 0; j < ch.n; ++j) {
        if (j != j_star && ch.rr(j, j_star) < tau) out.push_back(j);
    }
    return out;
}

// R2 = { j != j* : |h_{Rj,D}|^2 < tau }.
inline std::vector<int> jammer_set_hop2(std::span<const double> g_rd, int j_star, double tau) {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(g_rd.size()); ++j) {
        if (j != j_star && g_rd[j] < tau) out.push_back(j);
    }
    return out;
}

// One two-hop transmission: candidate selection, random relay pick, both
// hops with concurrent jamming, outcome classification. Reuses the
// capacity of `out` so steady-state calls do not allocate.
inline void run_trial(const SystemParams& p, const ChannelState& ch,
                      RandomStream& rng, TrialOutcome& out) {
    if (ch.n != p.n || ch.m != p.m) {
        throw std::invalid_argument("run_trial: channel state dimensions do not match params");
    }
    candidate_set(ch.g_sr, ch.g_rd, p.k, out.candidates);
    out.selected = select_relay(out.candidates, rng);
    const int js = out.selected;

    // Hop 1: S -> Rj*, jammers R1 interfere at Rj* and at every eavesdropper.
    double jam1_at_relay = 0.0;
    out.jam1_size = 0;
    for (int j = 0; j < p.n; ++j) {
        if (j != js && ch.rr(j, js) < p.tau) {
            jam1_at_relay += ch.rr(j, js);
            ++out.jam1_size;
        }
    }
    out.hop1_ok =
        sinr_with_total_jam_gain(ch.g_sr[js], jam1_at_relay, p.es, p.n0) >= p.gamma_r;

    // Hop 2: Rj* -> D, jammers R2. The interference power at D from relay j
    // rides on the same |h_{Rj,D}|^2 used for membership.
    double jam2_at_dest = 0.0;
    out.jam2_size = 0;
    for (int j = 0; j < p.n; ++j) {
        if (j != js && ch.g_rd[j] < p.tau) {
            jam2_at_dest += ch.g_rd[j];
            ++out.jam2_size;
        }
    }
    out.hop2_ok =
        sinr_with_total_jam_gain(ch.g_rd[js], jam2_at_dest, p.es, p.n0) >= p.gamma_r;

    out.eaves_hop1.assign(p.m, false);
    out.eaves_hop2.assign(p.m, false);
    for (int e = 0; e < p.m; ++e) {
        double jam_h1 = 0.0;
        double jam_h2 = 0.0;
        for (int j = 0; j < p.n; ++j) {
            if (j == js) continue;
            if (ch.rr(j, js) < p.tau) jam_h1 += ch.re1(j, e);
            if (ch.g_rd[j] < p.tau) jam_h2 += ch.re2(j, e);
        }
        out.eaves_hop1[e] =
            sinr_with_total_jam_gain(ch.g_se[e], jam_h1, p.es, p.n0) >= p.gamma_e;
        out.eaves_hop2[e] =
            sinr_with_total_jam_gain(ch.re2(js, e), jam_h2, p.es, p.n0) >= p.gamma_e;
    }
}

inline TrialOutcome run_trial(const SystemParams& p, const ChannelState& ch,
                              RandomStream& rng) {
    TrialOutcome out;
    run_trial(p, ch, rng, out);
    return out;
}

}  // namespace relaysec

#endif
