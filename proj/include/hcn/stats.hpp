#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace hcn::stats {

double mean(std::span<const double> values);

/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double sample_std(std::span<const double> values);

/// Spearman rank correlation with average ranks for ties. Returns 0 when
/// either side is constant. Throws std::invalid_argument on length mismatch
/// or fewer than two points.
double spearman(std::span<const double> x, std::span<const double> y);

/// Paired bootstrap: fraction of `resamples` resampled means of (a - b) that
/// are strictly positive.
double bootstrap_positive_fraction(std::span<const double> a, std::span<const double> b,
                                   std::size_t resamples, std::uint64_t seed);

}  // namespace hcn::stats
