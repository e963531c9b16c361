#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace trunclin {

/// C(n, r) exactly. Throws ValidationError on uint64 overflow.
std::uint64_t binomial(std::size_t n, std::size_t r);

/// ln C(n, r), valid for any size.
double log_binomial(std::size_t n, std::size_t r);

/// Advance `combo` (strictly increasing, values in [0, n)) to its lexicographic
/// successor. Returns false when `combo` was the last combination.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n);

/// Position of a strictly increasing combination of [0, n) in lexicographic
/// order (combinatorial number system). O(n) with no allocation.
std::uint64_t lex_rank(std::span<const std::size_t> combo, std::size_t n);

/// Inverse of lex_rank.
std::vector<std::size_t> lex_unrank(std::uint64_t rank, std::size_t n, std::size_t r);

}  // namespace trunclin
