#include "trunclin/core_truncation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "trunclin/errors.hpp"

namespace trunclin {

TruncationConfig::TruncationConfig(std::size_t d, std::size_t k) : d_(d), k_(k) {
  if (d == 0) throw ValidationError("dimension d must be at least 1");
  if (k != 0 && 2 * k >= d) {
    throw ValidationError("budget k=" + std::to_string(k) + " requires 2k < d=" + std::to_string(d));
  }
}

void TruncationConfig::require_positive_budget() const {
  if (k_ == 0) throw ValidationError("budget k must be positive");
}

WeightVector::WeightVector(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (std::isnan(v)) throw InvalidNumber("weight vector contains NaN");
  }
}

std::vector<std::size_t> WeightVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != 0.0) out.push_back(i);
  }
  return out;
}

std::size_t WeightVector::support_size() const {
  return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [](double v) { return v != 0.0; }));
}

int sign(double a) {
  if (std::isnan(a)) throw InvalidNumber("sign of NaN is undefined");
  return a >= 0.0 ? 1 : -1;
}

std::vector<std::size_t> sorted_order(std::span<const double> u) {
  for (double v : u) {
    if (std::isnan(v)) throw InvalidNumber("cannot order a vector containing NaN");
  }
  std::vector<std::size_t> idx(u.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
  return idx;
}

std::vector<double> hadamard(std::span<const double> w, std::span<const double> x) {
  if (w.size() != x.size()) {
    throw DimensionMismatch("w has " + std::to_string(w.size()) + " entries, x has " + std::to_string(x.size()));
  }
  std::vector<double> u(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) u[i] = w[i] * x[i];
  return u;
}

ProductVector::ProductVector(const WeightVector& w, std::span<const double> x)
    : ProductVector(hadamard(w.values(), x)) {}

ProductVector::ProductVector(std::vector<double> u) : values(std::move(u)), sorted_index(sorted_order(values)) {}

double ProductVector::order_statistic_sum(std::size_t first, std::size_t last) const {
  double s = 0.0;
  for (std::size_t i = first; i < last; ++i) s += values[sorted_index[i]];
  return s;
}

void check_dimension(std::size_t n, const TruncationConfig& cfg, const char* what) {
  if (n != cfg.d()) {
    throw DimensionMismatch(std::string(what) + " has " + std::to_string(n) + " entries, expected d=" +
                            std::to_string(cfg.d()));
  }
}

double tsum(std::span<const double> u, const TruncationConfig& cfg) {
  check_dimension(u.size(), cfg, "u");
  const ProductVector p(std::vector<double>(u.begin(), u.end()));
  return p.order_statistic_sum(cfg.k(), cfg.d() - cfg.k());
}

double lower_sum(std::span<const double> u, const TruncationConfig& cfg) {
  check_dimension(u.size(), cfg, "u");
  const ProductVector p(std::vector<double>(u.begin(), u.end()));
  return p.order_statistic_sum(0, cfg.kept());
}

double upper_sum(std::span<const double> u, const TruncationConfig& cfg) {
  check_dimension(u.size(), cfg, "u");
  const ProductVector p(std::vector<double>(u.begin(), u.end()));
  return p.order_statistic_sum(2 * cfg.k(), cfg.d());
}

double trunc_inner(const WeightVector& w, std::span<const double> x, const TruncationConfig& cfg) {
  check_dimension(w.size(), cfg, "w");
  check_dimension(x.size(), cfg, "x");
  const ProductVector p(w, x);
  return p.order_statistic_sum(cfg.k(), cfg.d() - cfg.k());
}

}  // namespace trunclin
