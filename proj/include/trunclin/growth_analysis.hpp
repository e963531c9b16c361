#pragma once

// Growth-function bounds for the truncated classifier class T and for its
// composition with the worst-case loss, T~, plus a sampling census of the
// sign patterns actually realized on a fixed point set.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trunclin/core_truncation.hpp"

namespace trunclin {

/// A possibly astronomically large count, carried in log space. `value` is
/// +inf when exp(log_value) does not fit in a double.
struct GrowthBound {
  double log_value = 0.0;
  double value = 0.0;
};

/// (e n (C(d,2k) + C(d,2)) / d)^d. Requires n > d + 1 and 0 < 2k < d.
GrowthBound growth_bound_T(std::uint64_t n, std::size_t d, std::size_t k);
/// 1 + growth_bound_T(n, d, k).
GrowthBound growth_bound_Ttilde(std::uint64_t n, std::size_t d, std::size_t k);

struct GrowthReport {
  std::uint64_t n = 0;
  std::size_t d = 0;
  std::size_t k = 0;
  /// Absent when the bound's preconditions (n > d + 1, k > 0) do not hold.
  std::optional<GrowthBound> bound_T;
  std::optional<GrowthBound> bound_Ttilde;
  /// Distinct (sign <w, x_i>_k)_i patterns seen. A lower bound on the growth
  /// function at these points; sampling never overcounts.
  std::uint64_t observed_patterns_T = 0;
  /// Distinct robust-loss patterns; only filled when labels were supplied.
  std::optional<std::uint64_t> observed_patterns_Ttilde;
  std::uint64_t trials = 0;
  std::uint64_t sampler_seed = 0;
};

/// Draws `trials` weight vectors (dense Gaussian, Gaussian with coordinates
/// zeroed at random, or ±1 lattice points; one kind per trial) and counts
/// distinct pattern vectors over the rows of `xs`. Trial t uses the stream
/// derive_seed(seed, t), so a longer run only adds patterns.
GrowthReport census_patterns(std::span<const std::vector<double>> xs, std::optional<std::span<const int>> ys,
                             const TruncationConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                             unsigned threads = 1);

/// The weight vector used by census trial `trial`.
WeightVector census_weight(std::size_t d, std::uint64_t seed, std::uint64_t trial);

}  // namespace trunclin
