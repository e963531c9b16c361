#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace trunclin {

/// Throws InvalidLabel unless y is -1 or +1.
void check_label(int y);

/// Labelled feature vectors stored row-major. Every label is -1 or +1 and
/// every row has exactly `dim()` features.
class Dataset {
 public:
  explicit Dataset(std::size_t d = 0) : d_(d) {}

  /// Appends one sample; validates the row length and the label.
  void add(std::span<const double> x, int y);

  std::size_t dim() const noexcept { return d_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  std::span<const double> x(std::size_t i) const { return {features_.data() + i * d_, d_}; }
  int y(std::size_t i) const { return labels_[i]; }
  std::span<const int> labels() const noexcept { return labels_; }
  std::span<const double> features() const noexcept { return features_; }

  /// Fraction of samples labelled -1.
  double negative_fraction() const;

  /// Copy with a constant 1 appended to every feature vector.
  Dataset with_bias() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::size_t d_;
  std::vector<double> features_;
  std::vector<int> labels_;
};

}  // namespace trunclin
