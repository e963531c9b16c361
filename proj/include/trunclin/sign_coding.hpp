#pragma once

// Sign coding of truncated sums.
//
// The sign of any sum of d - 2k order statistics of u = w ⊙ x is a function
// of the signs of C(d,2k) + C(d,2) ordinary inner products <w, x ⊙ v>:
//   alpha vectors: indicators of every (d - 2k)-subset of [d], lexicographic;
//   beta vectors : +1 at a, -1 at b for every pair a < b, lexicographic.
// The beta signs give the ordering of u, the ordering maps a set of sorted
// positions J to coordinates, and the alpha sign for those coordinates is the
// answer.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "trunclin/core_truncation.hpp"

namespace trunclin {

/// Immutable description of the alpha/beta basis for one (d, k).
class CodeBasis {
 public:
  explicit CodeBasis(const TruncationConfig& cfg);

  const TruncationConfig& config() const noexcept { return cfg_; }
  std::size_t alpha_count() const noexcept { return alpha_count_; }
  std::size_t beta_count() const noexcept { return beta_count_; }
  /// m = C(d,2k) + C(d,2), the number of columns of one code row.
  std::size_t size() const noexcept { return alpha_count_ + beta_count_; }

  /// Coordinates of the i-th alpha subset, ascending.
  std::vector<std::size_t> alpha_subset(std::size_t i) const;
  std::vector<int> alpha_vector(std::size_t i) const;
  /// Coordinates (a, b), a < b, of the j-th beta vector.
  std::pair<std::size_t, std::size_t> beta_pair(std::size_t j) const;
  std::vector<int> beta_vector(std::size_t j) const;

  /// Position of the alpha vector indicating `subset` (ascending coordinates).
  std::size_t alpha_index(std::span<const std::size_t> subset) const;
  std::size_t beta_index(std::size_t a, std::size_t b) const;

 private:
  TruncationConfig cfg_;
  std::size_t alpha_count_;
  std::size_t beta_count_;
};

/// One row of the coding matrix M(w) for a single input x.
struct SignCode {
  std::vector<int> alpha_signs;
  std::vector<int> beta_signs;

  friend bool operator==(const SignCode&, const SignCode&) = default;
};

SignCode encode(const CodeBasis& basis, const WeightVector& w, std::span<const double> x);
SignCode encode(const WeightVector& w, std::span<const double> x, const TruncationConfig& cfg);

/// Coordinates of u listed from smallest to largest, rebuilt from the beta
/// signs alone. Ties come out larger-index-first: a +1 beta sign for a < b
/// only says u_a >= u_b. Throws MalformedCode when the comparisons are cyclic.
std::vector<std::size_t> recover_order(const CodeBasis& basis, const SignCode& code);

/// sign(sum_{j in J} u_(j)) read off the code. `positions` are 0-based sorted
/// positions, |J| = d - 2k.
int decode(const CodeBasis& basis, const SignCode& code, std::span<const std::size_t> positions);

/// sign(<w, x>_k) computed through encode + decode with J = {k, ..., d-k-1}.
int trunc_sign_via_code(const WeightVector& w, std::span<const double> x, const TruncationConfig& cfg);

/// The three position sets needed by the robust loss: the middle block, the
/// d - 2k smallest and the d - 2k largest.
std::vector<std::size_t> middle_positions(const TruncationConfig& cfg);
std::vector<std::size_t> lower_positions(const TruncationConfig& cfg);
std::vector<std::size_t> upper_positions(const TruncationConfig& cfg);

}  // namespace trunclin
