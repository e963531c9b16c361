#pragma once

// Generalization bound for adversarially trained truncated linear
// classifiers, plus the Massart step it is built from. Logarithms are natural.

#include <cstddef>
#include <cstdint>

namespace trunclin {

/// c = 2 sqrt(2 + 2 ln 2), computed on first use.
double universal_constant();

/// m = C(d,2k) + C(d,2).
double code_size(std::size_t d, std::size_t k);

struct BoundReport {
  std::uint64_t n = 0;
  std::size_t d = 0;
  std::size_t k = 0;
  double delta = 0.0;
  double c = 0.0;
  /// c * sqrt(d * ln(e n m / d) / n)
  double complexity_term = 0.0;
  /// 5 * sqrt(2 ln(8 / delta) / n)
  double confidence_term = 0.0;
  double total = 0.0;
};

/// Requires n > d + 1, 0 < delta < 1 and 0 < 2k < d; each violation raises a
/// ValidationError naming the offending argument.
BoundReport theorem1_bound(std::uint64_t n, std::size_t d, std::size_t k, double delta);

/// sqrt(2 log_growth / n).
double massart_bound(double log_growth, std::uint64_t n);

/// Smallest n > d + 1 with theorem1_bound(n, d, k, delta).total <= epsilon.
/// Doubling then bisection; the answer is checked against its neighbour.
std::uint64_t sample_complexity(double epsilon, double delta, std::size_t d, std::size_t k);

}  // namespace trunclin
