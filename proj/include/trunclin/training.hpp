#pragma once

// Adversarial training of a truncated linear classifier.
//
// The exact objective (mean worst-case 0-1 loss) is piecewise constant, so the
// optimizer descends a hinge surrogate built on the closed-form worst-case
// margin and keeps whichever iterate has the lowest *exact* robust loss.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trunclin/core_truncation.hpp"
#include "trunclin/dataset.hpp"

namespace trunclin {

struct TrainConfig {
  std::size_t epochs = 100;
  /// Step at epoch t is initial_step / sqrt(t).
  double initial_step = 1.0;
  std::size_t restarts = 1;
  std::uint64_t seed = 0;
  /// Radius of the l2 ball w is projected onto after every update.
  std::optional<double> l2_cap;
  /// Append a constant-1 coordinate (itself perturbable and truncatable).
  bool bias = false;
  /// Restarts run on up to this many threads.
  unsigned threads = 1;

  void validate() const;
};

struct TrajectoryPoint {
  std::size_t restart = 0;
  std::size_t epoch = 0;
  double surrogate_loss = 0.0;
  double exact_robust_loss = 0.0;
};

/// A trained classifier. `w` has d + 1 entries when `bias` is set.
struct Model {
  std::size_t d = 0;
  std::size_t k = 0;
  WeightVector w;
  bool bias = false;

  /// Configuration for w itself, i.e. (d + bias, k).
  TruncationConfig weight_config() const { return {w.size(), k}; }
  /// Applies the bias augmentation, if any, and checks the dimension.
  Dataset prepare(const Dataset& data) const;
};

struct TrainReport {
  Model model;
  double best_empirical_robust_loss = 0.0;
  std::vector<TrajectoryPoint> loss_trajectory;
  std::size_t restarts_used = 0;
  std::vector<std::string> warnings;
};

/// lower_sum(w ⊙ x) for y = +1 and -upper_sum(w ⊙ x) for y = -1. When w has
/// more than k nonzeros, a positive margin certifies robust correctness.
double robust_margin(const WeightVector& w, std::span<const double> x, int y, const TruncationConfig& cfg);

/// Subgradient of robust_margin with respect to w. The active set is the
/// d - 2k smallest (y = +1) or largest (y = -1) entries of w ⊙ x under the
/// canonical tie-broken order.
std::vector<double> margin_subgradient(const WeightVector& w, std::span<const double> x, int y,
                                       const TruncationConfig& cfg);

/// (1/n) Σ max(0, 1 - robust_margin(w, x_i, y_i)).
double hinge_surrogate(const WeightVector& w, const Dataset& data, const TruncationConfig& cfg);

/// `cfg` describes the raw features (d = data.dim()).
TrainReport train(const Dataset& data, const TruncationConfig& cfg, const TrainConfig& tc);

/// Robust error on held-out data; same value as empirical_robust_loss.
double eval_robust_error(const WeightVector& w, const Dataset& data, const TruncationConfig& cfg);
double eval_robust_error(const Model& model, const Dataset& data);

}  // namespace trunclin
