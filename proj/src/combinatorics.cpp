#include "trunclin/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "trunclin/errors.hpp"

namespace trunclin {

std::uint64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    // result * (n - r + i) / i stays integral at every step; divide by the gcd
    // first so the intermediate product overflows as late as possible.
    std::uint64_t num = n - r + i;
    std::uint64_t den = i;
    const std::uint64_t g = std::gcd(result, den);
    result /= g;
    den /= g;
    num /= den;
    if (result > UINT64_MAX / num) {
      throw ValidationError("C(" + std::to_string(n) + "," + std::to_string(r) + ") overflows 64 bits");
    }
    result *= num;
  }
  return result;
}

double log_binomial(std::size_t n, std::size_t r) {
  if (r > n) return -INFINITY;
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(r) + 1.0) -
         std::lgamma(static_cast<double>(n - r) + 1.0);
}

bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
  const std::size_t r = combo.size();
  std::size_t i = r;
  while (i > 0) {
    --i;
    if (combo[i] < n - r + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t lex_rank(std::span<const std::size_t> combo, std::size_t n) {
  const std::size_t r = combo.size();
  std::uint64_t rank = 0;
  std::size_t next = 0;
  for (std::size_t i = 0; i < r; ++i) {
    // every combination with the same prefix and a smaller value here comes first
    for (std::size_t v = next; v < combo[i]; ++v) rank += binomial(n - 1 - v, r - 1 - i);
    next = combo[i] + 1;
  }
  return rank;
}

std::vector<std::size_t> lex_unrank(std::uint64_t rank, std::size_t n, std::size_t r) {
  std::vector<std::size_t> combo;
  combo.reserve(r);
  std::size_t v = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (;; ++v) {
      const std::uint64_t block = binomial(n - 1 - v, r - 1 - i);
      if (rank < block) break;
      rank -= block;
    }
    combo.push_back(v++);
  }
  return combo;
}

}  // namespace trunclin
