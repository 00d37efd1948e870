#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

namespace hcn {

/// Seeded random source whose output is identical across standard libraries.
///
/// The std distributions are implementation-defined, so the draws used by the
/// simulator are derived from raw mt19937_64 output here instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer on [0, n); n must be positive.
    std::size_t index(std::size_t n);

    /// Exponential with the given mean.
    double exponential(double mean);

    /// Standard normal (Box-Muller, one variate per call).
    double normal();

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::span<T> values)
    {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::size_t j = index(i);
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Derives an independent stream seed from a base seed and a path of tags,
/// e.g. derive_seed(sweep_seed, {point, trial}).
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags);

}  // namespace hcn
