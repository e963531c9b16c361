#pragma once

// Generalization-gap experiment: for each training size n and trial, draw a
// fresh train/test split from a Gaussian mixture, train, and compare the
// measured gap with the bound.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "trunclin/core_truncation.hpp"
#include "trunclin/data.hpp"
#include "trunclin/training.hpp"

namespace trunclin {

struct ExperimentRow {
  std::size_t n = 0;
  std::size_t trial = 0;
  double train_loss = 0.0;
  double test_loss = 0.0;
  double gap = 0.0;  // test_loss - train_loss
  double bound = 0.0;
  std::vector<double> w;
};

struct ExperimentSummary {
  std::size_t n = 0;
  double median_train_loss = 0.0;
  double median_test_loss = 0.0;
  double median_gap = 0.0;
  double max_gap = 0.0;
  double bound = 0.0;
};

struct ExperimentReport {
  std::size_t d = 0;
  std::size_t k = 0;
  double delta = 0.05;
  std::size_t n_test = 0;
  std::size_t trials = 0;
  /// Sorted by (n, trial).
  std::vector<ExperimentRow> rows;
  /// One entry per n, in grid order.
  std::vector<ExperimentSummary> summary;
};

/// `mix.n` is ignored; sizes come from `n_grid` and `n_test`. Training and
/// test sets for each (n, trial) use independent generator streams derived
/// from `mix.seed`, and the trainer seed is derived from `tc.seed`.
ExperimentReport generalization_experiment(const GaussianMixtureConfig& mix, const TruncationConfig& cfg,
                                           const TrainConfig& tc, const std::vector<std::size_t>& n_grid,
                                           std::size_t n_test, std::size_t trials, double delta = 0.05,
                                           unsigned threads = 1);

double median(std::vector<double> values);

}  // namespace trunclin
