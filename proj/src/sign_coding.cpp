#include "trunclin/sign_coding.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "trunclin/combinatorics.hpp"
#include "trunclin/errors.hpp"

namespace trunclin {
namespace {

// Larger bases are not useful to materialize or inspect.
constexpr std::uint64_t kMaxBasisSize = 50'000'000;

std::vector<std::size_t> iota_positions(std::size_t first, std::size_t count) {
  std::vector<std::size_t> v(count);
  std::iota(v.begin(), v.end(), first);
  return v;
}

}  // namespace

CodeBasis::CodeBasis(const TruncationConfig& cfg) : cfg_(cfg) {
  const std::uint64_t alphas = binomial(cfg.d(), 2 * cfg.k());
  const std::uint64_t betas = binomial(cfg.d(), 2);
  if (alphas + betas > kMaxBasisSize) {
    throw ValidationError("sign-code basis for d=" + std::to_string(cfg.d()) + ", k=" + std::to_string(cfg.k()) +
                          " is too large to materialize");
  }
  alpha_count_ = static_cast<std::size_t>(alphas);
  beta_count_ = static_cast<std::size_t>(betas);
}

std::vector<std::size_t> CodeBasis::alpha_subset(std::size_t i) const {
  return lex_unrank(i, cfg_.d(), cfg_.kept());
}

std::vector<int> CodeBasis::alpha_vector(std::size_t i) const {
  std::vector<int> v(cfg_.d(), 0);
  for (std::size_t c : alpha_subset(i)) v[c] = 1;
  return v;
}

std::pair<std::size_t, std::size_t> CodeBasis::beta_pair(std::size_t j) const {
  const auto ab = lex_unrank(j, cfg_.d(), 2);
  return {ab[0], ab[1]};
}

std::vector<int> CodeBasis::beta_vector(std::size_t j) const {
  std::vector<int> v(cfg_.d(), 0);
  const auto [a, b] = beta_pair(j);
  v[a] = 1;
  v[b] = -1;
  return v;
}

std::size_t CodeBasis::alpha_index(std::span<const std::size_t> subset) const {
  return static_cast<std::size_t>(lex_rank(subset, cfg_.d()));
}

std::size_t CodeBasis::beta_index(std::size_t a, std::size_t b) const {
  // pairs starting below a, then offset within a's block
  const std::size_t d = cfg_.d();
  return a * (2 * d - a - 1) / 2 + (b - a - 1);
}

SignCode encode(const CodeBasis& basis, const WeightVector& w, std::span<const double> x) {
  const TruncationConfig& cfg = basis.config();
  check_dimension(w.size(), cfg, "w");
  check_dimension(x.size(), cfg, "x");
  const std::size_t d = cfg.d();

  SignCode code;
  code.alpha_signs.reserve(basis.alpha_count());
  code.beta_signs.reserve(basis.beta_count());

  // <w, x ⊙ alpha>, summed in coordinate order
  std::vector<std::size_t> subset = iota_positions(0, cfg.kept());
  do {
    double s = 0.0;
    for (std::size_t c : subset) s += w[c] * x[c];
    code.alpha_signs.push_back(sign(s));
  } while (next_combination(subset, d));

  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) code.beta_signs.push_back(sign(w[a] * x[a] - w[b] * x[b]));
  }
  return code;
}

SignCode encode(const WeightVector& w, std::span<const double> x, const TruncationConfig& cfg) {
  return encode(CodeBasis(cfg), w, x);
}

std::vector<std::size_t> recover_order(const CodeBasis& basis, const SignCode& code) {
  const std::size_t d = basis.config().d();
  if (code.beta_signs.size() != basis.beta_count()) {
    throw MalformedCode("expected " + std::to_string(basis.beta_count()) + " beta signs, got " +
                        std::to_string(code.beta_signs.size()));
  }
  // rank(i) = number of coordinates placed before i
  std::vector<std::size_t> rank(d, 0);
  std::size_t j = 0;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b, ++j) {
      const int s = code.beta_signs[j];
      if (s == -1) {
        ++rank[b];  // u_a < u_b
      } else if (s == 1) {
        ++rank[a];  // u_a >= u_b
      } else {
        throw MalformedCode("beta sign " + std::to_string(j) + " is not +1 or -1");
      }
    }
  }
  std::vector<std::size_t> order(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (order[rank[i]] != d) throw MalformedCode("beta signs do not describe a total order");
    order[rank[i]] = i;
  }
  return order;
}

int decode(const CodeBasis& basis, const SignCode& code, std::span<const std::size_t> positions) {
  const TruncationConfig& cfg = basis.config();
  const std::size_t d = cfg.d();
  if (code.alpha_signs.size() != basis.alpha_count()) {
    throw MalformedCode("expected " + std::to_string(basis.alpha_count()) + " alpha signs, got " +
                        std::to_string(code.alpha_signs.size()));
  }
  if (positions.size() != cfg.kept()) {
    throw ValidationError("position set must have d - 2k = " + std::to_string(cfg.kept()) + " elements");
  }
  std::vector<bool> seen(d, false);
  for (std::size_t p : positions) {
    if (p >= d || seen[p]) throw ValidationError("positions must be distinct and below d");
    seen[p] = true;
  }

  const auto order = recover_order(basis, code);
  std::vector<std::size_t> coords;
  coords.reserve(positions.size());
  for (std::size_t p : positions) coords.push_back(order[p]);
  std::sort(coords.begin(), coords.end());

  const int s = code.alpha_signs[basis.alpha_index(coords)];
  if (s != 1 && s != -1) throw MalformedCode("alpha sign is not +1 or -1");
  return s;
}

std::vector<std::size_t> middle_positions(const TruncationConfig& cfg) { return iota_positions(cfg.k(), cfg.kept()); }
std::vector<std::size_t> lower_positions(const TruncationConfig& cfg) { return iota_positions(0, cfg.kept()); }
std::vector<std::size_t> upper_positions(const TruncationConfig& cfg) { return iota_positions(2 * cfg.k(), cfg.kept()); }

int trunc_sign_via_code(const WeightVector& w, std::span<const double> x, const TruncationConfig& cfg) {
  const CodeBasis basis(cfg);
  return decode(basis, encode(basis, w, x), middle_positions(cfg));
}

}  // namespace trunclin
