// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 beamsim contributors

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace beamsim {

/// Stateless 64-bit mixer, used to derive independent per-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for substream `stream` of a master seed. Distinct streams are
/// statistically independent, so parallel workers can draw without sharing
/// generator state.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream + 0x51ed2701a3c5e4d7ULL));
}

/// mt19937_64 with explicit variate transforms. The std:: distribution
/// adaptors are implementation-defined, which would break byte-identical
/// reruns across toolchains; the transforms here are fixed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    /// Unbiased integer in [0, n). n must be nonzero.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t nn = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % nn;
        std::uint64_t u;
        do {
            u = engine_();
        } while (u >= limit);
        return static_cast<std::size_t>(u % nn);
    }

    /// Knuth multiplication method, chunked so exp(-mean) never underflows.
    int poisson(double mean) {
        int total = 0;
        while (mean > 30.0) {
            total += poisson_small(30.0);
            mean -= 30.0;
        }
        return total + poisson_small(mean);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_index(i)]);
        }
    }

  private:
    int poisson_small(double mean) {
        if (mean <= 0.0)
            return 0;
        const double limit = std::exp(-mean);
        int k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > limit);
        return k - 1;
    }

    std::mt19937_64 engine_;
};

} // namespace beamsim
