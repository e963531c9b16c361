#pragma once

// Exact worst-case 0-1 loss of a truncated linear classifier under an
// adversary that may rewrite up to k coordinates of the input.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "trunclin/core_truncation.hpp"
#include "trunclin/dataset.hpp"

namespace trunclin {

/// Outer bounds on {<w, x'>_k : ||x' - x||_0 <= k}. `lo` is the sum of the
/// d - 2k smallest entries of u = w ⊙ x and `hi` the sum of the d - 2k
/// largest. A flag is set when the bound is known to be attained.
struct RobustRange {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_attained = false;
  bool hi_attained = false;
};

struct RobustEvaluation {
  double clean_value = 0.0;
  int clean_sign = 1;
  double lo = 0.0;
  double hi = 0.0;
  bool lo_attained = false;
  bool hi_attained = false;
  std::size_t support_size = 0;
  bool misclassified = false;
  /// Present exactly when `misclassified`.
  std::optional<std::vector<double>> witness;
};

RobustRange robust_range(const WeightVector& w, std::span<const double> x, const TruncationConfig& cfg);

/// Exact adversarial 0-1 loss. With A_w the support of w:
///   |A_w| <= k : the truncated product is identically 0, so the loss is [y == -1];
///   otherwise  : [sign(<w,x>_k) != y] OR [sign(lo) != sign(hi)].
bool robust_misclassified(const WeightVector& w, std::span<const double> x, int y, const TruncationConfig& cfg);
/// Same, reusing an already sorted product vector p = w ⊙ x.
bool robust_misclassified(const WeightVector& w, const ProductVector& p, int y, const TruncationConfig& cfg);

/// A perturbation x' with ||x' - x||_0 <= k whose prediction differs from y,
/// or nullopt when (x, y) is robustly correct. Every returned vector has been
/// re-checked by direct evaluation; InternalInconsistency signals a bug.
std::optional<std::vector<double>> worst_case_witness(const WeightVector& w, std::span<const double> x, int y,
                                                      const TruncationConfig& cfg);

/// All of the above in one pass.
RobustEvaluation evaluate_robust(const WeightVector& w, std::span<const double> x, int y,
                                 const TruncationConfig& cfg);

/// True when ||a - b||_0 <= k and sign(<w, b>_k) != y.
bool is_valid_witness(const WeightVector& w, std::span<const double> x, std::span<const double> candidate, int y,
                      const TruncationConfig& cfg);

// ---------------------------------------------------------------------------
// Brute-force reference oracle.
//
// Enumerates every subset S of the support with |S| <= k and, for each
// coordinate in S, every u-value in {u_min - 1, u_max + 1, -w_i^2}. Because
// the truncated sum is coordinate-wise monotone, pushing a coordinate below
// (above) every untouched entry realizes the extreme for that S, so the
// enumeration finds the true minimum and maximum over the ball.

inline constexpr std::size_t kBruteForceMaxDim = 10;

struct BruteForceRange {
  double lo = 0.0;
  double hi = 0.0;
};

BruteForceRange brute_force_range(const WeightVector& w, std::span<const double> x, const TruncationConfig& cfg,
                                  std::size_t max_dim = kBruteForceMaxDim);

bool brute_force_robust(const WeightVector& w, std::span<const double> x, int y, const TruncationConfig& cfg,
                        std::size_t max_dim = kBruteForceMaxDim);

/// Mean of robust_misclassified over the dataset. `threads` > 1 splits the
/// rows across workers; the integer count makes the result independent of the
/// split.
double empirical_robust_loss(const WeightVector& w, const Dataset& data, const TruncationConfig& cfg,
                             unsigned threads = 1);

}  // namespace trunclin
