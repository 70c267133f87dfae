#ifndef ICSI_RNG_HPP
#define ICSI_RNG_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace icsi::rng {

/// splitmix64 step, used both as a mixer and to seed streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** stream seeded through splitmix64. Streams are derived from
/// a base seed plus an arbitrary list of stream keys, so independent
/// substreams (per restart, per trial, per codeword) can be created without
/// coordination. All sampling helpers are hand-rolled so results are
/// identical across platforms and standard libraries.
class Stream {
public:
    explicit Stream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64(sm);
    }

    /// Derive a child stream from (seed, key0, key1, ...).
    static Stream derive(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
        std::uint64_t acc = seed;
        for (std::uint64_t k : keys) {
            acc = splitmix64(acc);
            acc ^= k + 0x9e3779b97f4a7c15ULL + (acc << 6) + (acc >> 2);
        }
        return Stream(acc);
    }

    std::uint64_t next_u64() {
        auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t next_below(std::uint64_t n) {
        // Lemire-style rejection to avoid modulo bias.
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            std::uint64_t t = (0 - n) % n;
            while (lo < t) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool bernoulli(double p) { return next_double() < p; }

    /// Sample an index from a probability vector by CDF walk.
    int categorical(std::span<const double> probs) {
        double u = next_double();
        double acc = 0.0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(probs.size()) - 1;
    }

    /// Symmetric triangular-ish perturbation in [-scale, scale].
    double perturbation(double scale) { return (2.0 * next_double() - 1.0) * scale; }

    /// Exponential(1) variate, used for Dirichlet-style random PMFs.
    double exponential();

    /// Random point on the probability simplex of the given size.
    std::vector<double> random_pmf(int size);

private:
    std::uint64_t state_[4]{};
};

} // namespace icsi::rng

#endif
