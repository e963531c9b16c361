#include "trunclin/bounds.hpp"

#include <cmath>
#include <string>

#include "trunclin/combinatorics.hpp"
#include "trunclin/errors.hpp"

namespace trunclin {
namespace {

void check_dims(std::size_t d, std::size_t k) {
  if (k == 0) throw ValidationError("k must be positive (the bound assumes 0 < k < d/2)");
  if (2 * k >= d) throw ValidationError("k=" + std::to_string(k) + " must satisfy 2k < d=" + std::to_string(d));
}

void check_n(std::uint64_t n, std::size_t d) {
  if (n <= d + 1) {
    throw ValidationError("n=" + std::to_string(n) + " must exceed d+1=" + std::to_string(d + 1));
  }
}

}  // namespace

double universal_constant() {
  static const double c = 2.0 * std::sqrt(2.0 + 2.0 * std::log(2.0));
  return c;
}

double code_size(std::size_t d, std::size_t k) {
  double alphas = 0.0;
  try {
    alphas = static_cast<double>(binomial(d, 2 * k));
  } catch (const ValidationError&) {
    alphas = std::exp(log_binomial(d, 2 * k));
  }
  return alphas + static_cast<double>(binomial(d, 2));
}

BoundReport theorem1_bound(std::uint64_t n, std::size_t d, std::size_t k, double delta) {
  check_dims(d, k);
  check_n(n, d);
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0, 1)");

  const double nd = static_cast<double>(n);
  const double dd = static_cast<double>(d);
  const double m = code_size(d, k);
  const double log_growth = 1.0 + std::log(nd) + std::log(m) - std::log(dd);  // ln(e n m / d)

  BoundReport r;
  r.n = n;
  r.d = d;
  r.k = k;
  r.delta = delta;
  r.c = universal_constant();
  r.complexity_term = r.c * std::sqrt(dd * log_growth / nd);
  r.confidence_term = 5.0 * std::sqrt(2.0 * std::log(8.0 / delta) / nd);
  r.total = r.complexity_term + r.confidence_term;
  return r;
}

double massart_bound(double log_growth, std::uint64_t n) {
  if (!(log_growth >= 0.0)) throw ValidationError("log growth must be non-negative");
  if (n == 0) throw ValidationError("n must be at least 1");
  return std::sqrt(2.0 * log_growth / static_cast<double>(n));
}

std::uint64_t sample_complexity(double epsilon, double delta, std::size_t d, std::size_t k) {
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be positive");
  auto total = [&](std::uint64_t n) { return theorem1_bound(n, d, k, delta).total; };

  std::uint64_t lo = d + 2;
  if (total(lo) <= epsilon) return lo;
  std::uint64_t hi = lo;
  while (total(hi) > epsilon) {
    lo = hi;
    hi *= 2;
  }
  // total(lo) > epsilon >= total(hi)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (total(mid) <= epsilon ? hi : lo) = mid;
  }
  if (!(total(hi) <= epsilon && total(hi - 1) > epsilon)) {
    throw InternalInconsistency("sample complexity search is not at a crossing");
  }
  return hi;
}

}  // namespace trunclin
