#ifndef RELAYSEC_RNG_HPP
#define RELAYSEC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace relaysec {

// SplitMix64 finalizer, used to derive independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seed for the stream of work unit `index` under a master seed.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index));
}

// Deterministic random stream. std::mt19937_64 output is specified by the
// standard; the uniform mapping is done here explicitly because
// std::uniform_real_distribution is not bit-stable across library
// implementations.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform on (0, 1], 53-bit resolution. Never returns 0.
    double uniform_open_closed() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound), unbiased by rejection.
    std::uint64_t uniform_index(std::uint64_t bound) {
        if (bound == 0) {
            throw std::invalid_argument("uniform_index: bound must be positive");
        }
        const std::uint64_t threshold = (0ULL - bound) % bound;  // 2^64 mod bound
        std::uint64_t x = engine_();
        while (x < threshold) {
            x = engine_();
        }
        return x % bound;
    }

private:
    std::mt19937_64 engine_;
};

// Exp(1) via inverse CDF; u must lie in (0, 1].
inline double exponential_from_uniform(double u) {
    return -std::log(u);
}

inline double sample_exponential(RandomStream& rng) {
    return exponential_from_uniform(rng.uniform_open_closed());
}

}  // namespace relaysec

#endif
