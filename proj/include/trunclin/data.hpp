#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "trunclin/dataset.hpp"

namespace trunclin {

/// y ~ Unif{-1, +1}, x = y * mu + sqrt(sigma_diag) ⊙ g with g standard normal.
struct GaussianMixtureConfig {
  std::vector<double> mu;
  /// Per-coordinate variances, all > 0.
  std::vector<double> sigma_diag;
  std::size_t n = 0;
  std::uint64_t seed = 0;

  void validate() const;
};

Dataset sample_mixture(const GaussianMixtureConfig& cfg);

// CSV layout: header `x1,...,xd,y`, one sample per line, LF endings, labels
// written as -1 / 1, features in shortest round-trip decimal form.

void write_dataset(const Dataset& data, std::ostream& out);
void write_dataset(const Dataset& data, const std::filesystem::path& path);

/// Errors name the offending line (the header is line 1).
Dataset read_dataset(std::istream& in);
Dataset read_dataset(const std::filesystem::path& path);

}  // namespace trunclin
