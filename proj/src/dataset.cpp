#include "trunclin/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trunclin/errors.hpp"

namespace trunclin {

void check_label(int y) {
  if (y != -1 && y != 1) throw InvalidLabel("label must be -1 or 1, got " + std::to_string(y));
}

void Dataset::add(std::span<const double> x, int y) {
  if (x.size() != d_) {
    throw DimensionMismatch("sample has " + std::to_string(x.size()) + " features, dataset has d=" +
                            std::to_string(d_));
  }
  check_label(y);
  for (double v : x) {
    if (std::isnan(v)) throw InvalidNumber("sample contains NaN");
  }
  features_.insert(features_.end(), x.begin(), x.end());
  labels_.push_back(y);
}

double Dataset::negative_fraction() const {
  if (labels_.empty()) return 0.0;
  const auto neg = std::count(labels_.begin(), labels_.end(), -1);
  return static_cast<double>(neg) / static_cast<double>(labels_.size());
}

Dataset Dataset::with_bias() const {
  Dataset out(d_ + 1);
  std::vector<double> row(d_ + 1, 1.0);
  for (std::size_t i = 0; i < size(); ++i) {
    const auto xi = x(i);
    std::copy(xi.begin(), xi.end(), row.begin());
    out.add(row, labels_[i]);
  }
  return out;
}

}  // namespace trunclin
