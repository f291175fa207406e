#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace avwc {

/// Deterministic random source. Wraps std::mt19937_64 (whose output stream
/// is fixed by the standard) and derives all variates itself, so identical
/// seeds give identical results on every platform and compiler.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Rejection sampling, unbiased.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t bound = n;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return static_cast<std::size_t>(x % bound);
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Flat Dirichlet sample (uniform on the k-simplex): normalized
    /// exponentials.
    std::vector<double> dirichlet(std::size_t k) {
        std::vector<double> v(k);
        double sum = 0.0;
        for (auto& x : v) {
            x = -std::log(1.0 - uniform());
            sum += x;
        }
        for (auto& x : v) x /= sum;
        return v;
    }

    /// Derives an independent stream for a sub-task. SplitMix64 finalizer
    /// over (seed, tags) so streams do not depend on draw history.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t tag_a, std::uint64_t tag_b = 0) {
        auto mix = [](std::uint64_t x) {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        };
        return mix(mix(mix(seed) ^ tag_a) ^ tag_b);
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace avwc
