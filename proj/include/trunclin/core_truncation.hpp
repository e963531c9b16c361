#pragma once

// Order statistics, truncated sums and the truncated inner product.
//
// Conventions used throughout the library:
//   * indices are 0-based;
//   * sorting is stable and non-decreasing, so equal values keep ascending
//     coordinate order;
//   * sums of order statistics are accumulated in sorted order.

#include <cstddef>
#include <span>
#include <vector>

namespace trunclin {

/// Feature dimension d and adversary budget k. Valid when d >= 1 and either
/// k == 0 (plain inner product) or 2k < d.
class TruncationConfig {
 public:
  /// Throws ValidationError when (d, k) is not a valid pair.
  TruncationConfig(std::size_t d, std::size_t k);

  std::size_t d() const noexcept { return d_; }
  std::size_t k() const noexcept { return k_; }
  /// Number of order statistics that survive truncation, d - 2k.
  std::size_t kept() const noexcept { return d_ - 2 * k_; }

  /// Stricter check used by the bound calculators and the CLI: 0 < 2k < d.
  void require_positive_budget() const;

  friend bool operator==(const TruncationConfig&, const TruncationConfig&) = default;

 private:
  std::size_t d_;
  std::size_t k_;
};

/// Parameter vector of a truncated linear classifier.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Indices with w_i != 0, recomputed on every call.
  std::vector<std::size_t> support() const;
  std::size_t support_size() const;

 private:
  std::vector<double> values_;
};

/// u = w ⊙ x together with its canonical sorting permutation.
struct ProductVector {
  std::vector<double> values;
  std::vector<std::size_t> sorted_index;

  ProductVector(const WeightVector& w, std::span<const double> x);
  explicit ProductVector(std::vector<double> u);

  /// i-th smallest value, 0-based.
  double order_statistic(std::size_t i) const { return values[sorted_index[i]]; }
  /// Sum of the order statistics at sorted positions [first, last).
  double order_statistic_sum(std::size_t first, std::size_t last) const;
};

/// +1 when a >= 0 (including +inf), -1 otherwise. Throws InvalidNumber on NaN.
int sign(double a);

/// Stable non-decreasing ordering of u. Throws InvalidNumber on NaN.
std::vector<std::size_t> sorted_order(std::span<const double> u);

std::vector<double> hadamard(std::span<const double> w, std::span<const double> x);

/// Sum of the middle d - 2k order statistics.
double tsum(std::span<const double> u, const TruncationConfig& cfg);
/// Sum of the d - 2k smallest order statistics.
double lower_sum(std::span<const double> u, const TruncationConfig& cfg);
/// Sum of the d - 2k largest order statistics.
double upper_sum(std::span<const double> u, const TruncationConfig& cfg);

/// <w, x>_k = tsum(w ⊙ x).
double trunc_inner(const WeightVector& w, std::span<const double> x, const TruncationConfig& cfg);

/// Throws DimensionMismatch unless `n == cfg.d()`.
void check_dimension(std::size_t n, const TruncationConfig& cfg, const char* what);

}  // namespace trunclin
