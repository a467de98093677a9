#ifndef RELAYSEC_MONTECARLO_HPP
#define RELAYSEC_MONTECARLO_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include <boost/math/special_functions/erf.hpp>

#include "relaysec/channel.hpp"
#include "relaysec/params.hpp"
#include "relaysec/protocol.hpp"
#include "relaysec/rng.hpp"

namespace relaysec {

struct SimConfig {
    std::uint64_t trials = 100000;
    // Consecutive trials sharing one draw of the legitimate gains
    // (g_sr, g_rd, g_rr); eavesdropper-side gains redraw every trial.
    // block_length = 1 is the fully ergodic case.
    std::uint64_t block_length = 1;
    std::uint64_t seed = 1;
    unsigned workers = 1;  // parallelism hint, must not affect results
};

inline void validate(const SimConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials: must be >= 1");
    if (cfg.block_length < 1) throw std::invalid_argument("block_length: must be >= 1");
    if (cfg.workers < 1) throw std::invalid_argument("workers: must be >= 1");
}

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct SimResult {
    double p_out_t_hat = 0.0;  // empirical transmission outage probability
    double p_out_s_hat = 0.0;  // empirical secrecy outage probability
    Interval ci_t;             // 95% Wilson score intervals
    Interval ci_s;
    std::vector<std::uint64_t> selection_counts;  // per relay
    double jain_index = 0.0;
    double mean_jam1 = 0.0;
    double mean_jam2 = 0.0;
};

inline Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                double confidence) {
    if (trials == 0) throw std::invalid_argument("trials: must be >= 1");
    if (successes > trials) throw std::invalid_argument("successes: must be <= trials");
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::invalid_argument("confidence: must lie in (0,1)");
    }
    const double z = std::sqrt(2.0) * boost::math::erf_inv(confidence);
    const double nd = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / nd;
    const double z2n = z * z / nd;
    const double denom = 1.0 + z2n;
    const double center = (phat + z2n / 2.0) / denom;
    const double half =
        (z / denom) * std::sqrt(phat * (1.0 - phat) / nd + z2n / (4.0 * nd));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

// Jain's fairness index, (sum x)^2 / (n * sum x^2). 1 for perfect balance,
// 1/n for total concentration.
inline double jain_fairness(std::span<const double> counts) {
    if (counts.empty()) throw std::invalid_argument("counts: must be non-empty");
    double s = 0.0, s2 = 0.0;
    for (double x : counts) {
        if (x < 0.0) throw std::invalid_argument("counts: entries must be non-negative");
        s += x;
        s2 += x * x;
    }
    if (s2 == 0.0) throw std::invalid_argument("counts: at least one entry must be positive");
    return s * s / (static_cast<double>(counts.size()) * s2);
}

namespace detail {

// All accumulators are integer counts so the merge across workers is exact
// and order-insensitive.
struct TrialAccumulator {
    std::uint64_t t_outages = 0;
    std::uint64_t s_outages = 0;
    std::uint64_t jam1_total = 0;
    std::uint64_t jam2_total = 0;
    std::vector<std::uint64_t> selection_counts;

    explicit TrialAccumulator(int n) : selection_counts(n, 0) {}

    void merge(const TrialAccumulator& other) {
        t_outages += other.t_outages;
        s_outages += other.s_outages;
        jam1_total += other.jam1_total;
        jam2_total += other.jam2_total;
        for (std::size_t i = 0; i < selection_counts.size(); ++i) {
            selection_counts[i] += other.selection_counts[i];
        }
    }
};

// Runs the blocks {first_block, first_block + stride, ...}. Each block owns
// an independent substream keyed by (master seed, block index), so the
// result does not depend on how blocks are distributed over workers.
inline void run_blocks(const SystemParams& p, const SimConfig& cfg,
                       std::uint64_t first_block, std::uint64_t stride,
                       std::uint64_t num_blocks, TrialAccumulator& acc) {
    ChannelState ch;
    ch.resize(p.n, p.m);
    TrialOutcome out;
    for (std::uint64_t b = first_block; b < num_blocks; b += stride) {
        RandomStream rng(substream_seed(cfg.seed, b));
        sample_legitimate_gains(ch, rng);
        sample_eavesdropper_gains(ch, rng);
        const std::uint64_t start = b * cfg.block_length;
        const std::uint64_t end = std::min(cfg.trials, start + cfg.block_length);
        for (std::uint64_t t = start; t < end; ++t) {
            if (t != start) sample_eavesdropper_gains(ch, rng);
            run_trial(p, ch, rng, out);
            acc.t_outages += out.transmission_outage() ? 1 : 0;
            acc.s_outages += out.secrecy_outage() ? 1 : 0;
            acc.jam1_total += static_cast<std::uint64_t>(out.jam1_size);
            acc.jam2_total += static_cast<std::uint64_t>(out.jam2_size);
            ++acc.selection_counts[out.selected];
        }
    }
}

}  // namespace detail

// Monte Carlo estimate of the transmission- and secrecy-outage
// probabilities under the block-fading schedule in cfg. The result is a
// pure function of (params, cfg); cfg.workers only changes the wall time.
inline SimResult run_simulation(const SystemParams& p, const SimConfig& cfg) {
    validate(p);
    validate(cfg);
    const std::uint64_t num_blocks =
        (cfg.trials + cfg.block_length - 1) / cfg.block_length;
    const unsigned workers = static_cast<unsigned>(
        std::min<std::uint64_t>(cfg.workers, num_blocks));

    std::vector<detail::TrialAccumulator> partials(workers,
                                                   detail::TrialAccumulator(p.n));
    if (workers == 1) {
        detail::run_blocks(p, cfg, 0, 1, num_blocks, partials[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(detail::run_blocks, std::cref(p), std::cref(cfg), w,
                              workers, num_blocks, std::ref(partials[w]));
        }
        for (auto& th : pool) th.join();
    }

    detail::TrialAccumulator total(p.n);
    for (const auto& part : partials) total.merge(part);

    SimResult r;
    const double nt = static_cast<double>(cfg.trials);
    r.p_out_t_hat = static_cast<double>(total.t_outages) / nt;
    r.p_out_s_hat = static_cast<double>(total.s_outages) / nt;
    r.ci_t = wilson_interval(total.t_outages, cfg.trials, 0.95);
    r.ci_s = wilson_interval(total.s_outages, cfg.trials, 0.95);
    r.selection_counts = total.selection_counts;
    std::vector<double> counts(r.selection_counts.begin(), r.selection_counts.end());
    r.jain_index = jain_fairness(counts);
    r.mean_jam1 = static_cast<double>(total.jam1_total) / nt;
    r.mean_jam2 = static_cast<double>(total.jam2_total) / nt;
    return r;
}

}  // namespace relaysec

#endif
