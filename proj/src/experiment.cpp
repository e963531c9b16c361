#include "trunclin/experiment.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "trunclin/bounds.hpp"
#include "trunclin/errors.hpp"
#include "trunclin/random.hpp"
#include "trunclin/robust_oracle.hpp"

namespace trunclin {

double median(std::vector<double> values) {
  if (values.empty()) throw ValidationError("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  return values.size() % 2 == 1 ? values[m] : 0.5 * (values[m - 1] + values[m]);
}

ExperimentReport generalization_experiment(const GaussianMixtureConfig& mix, const TruncationConfig& cfg,
                                           const TrainConfig& tc, const std::vector<std::size_t>& n_grid,
                                           std::size_t n_test, std::size_t trials, double delta,
                                           unsigned threads) {
  mix.validate();
  tc.validate();
  cfg.require_positive_budget();
  check_dimension(mix.mu.size(), cfg, "mixture mean");
  if (n_grid.empty()) throw ValidationError("n grid is empty");
  if (n_test == 0) throw ValidationError("n_test must be positive");
  if (trials == 0) throw ValidationError("trials must be positive");
  for (std::size_t n : n_grid) {
    if (n <= cfg.d() + 1) throw ValidationError("every n in the grid must exceed d+1, got " + std::to_string(n));
  }

  ExperimentReport report;
  report.d = cfg.d();
  report.k = cfg.k();
  report.delta = delta;
  report.n_test = n_test;
  report.trials = trials;
  report.rows.resize(n_grid.size() * trials);

  auto run_cell = [&](std::size_t cell) {
    const std::size_t gi = cell / trials;
    const std::size_t trial = cell % trials;
    const std::size_t n = n_grid[gi];

    GaussianMixtureConfig train_mix = mix;
    train_mix.n = n;
    train_mix.seed = derive_seed(mix.seed, 2 * cell);
    GaussianMixtureConfig test_mix = mix;
    test_mix.n = n_test;
    test_mix.seed = derive_seed(mix.seed, 2 * cell + 1);
    const Dataset train_set = sample_mixture(train_mix);
    const Dataset test_set = sample_mixture(test_mix);

    TrainConfig run_tc = tc;
    run_tc.seed = derive_seed(tc.seed, cell);
    run_tc.threads = 1;
    const TrainReport tr = train(train_set, cfg, run_tc);

    ExperimentRow& row = report.rows[cell];
    row.n = n;
    row.trial = trial;
    row.train_loss = tr.best_empirical_robust_loss;
    row.test_loss = eval_robust_error(tr.model, test_set);
    row.gap = row.test_loss - row.train_loss;
    row.bound = theorem1_bound(n, cfg.d(), cfg.k(), delta).total;
    row.w.assign(tr.model.w.values().begin(), tr.model.w.values().end());
  };

  const std::size_t cells = report.rows.size();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, cells));
  if (workers == 1) {
    for (std::size_t c = 0; c < cells; ++c) run_cell(c);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t c = t; c < cells; c += workers) run_cell(c);
      });
    }
  }

  // rows are laid out by (grid index, trial); present them sorted by (n, trial)
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    return a.n != b.n ? a.n < b.n : a.trial < b.trial;
  });

  for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
    const std::size_t n = n_grid[gi];
    std::vector<double> train_l, test_l, gaps;
    for (const auto& row : report.rows) {
      if (row.n != n) continue;
      train_l.push_back(row.train_loss);
      test_l.push_back(row.test_loss);
      gaps.push_back(row.gap);
    }
    ExperimentSummary s;
    s.n = n;
    s.median_train_loss = median(train_l);
    s.median_test_loss = median(test_l);
    s.median_gap = median(gaps);
    s.max_gap = *std::max_element(gaps.begin(), gaps.end());
    s.bound = theorem1_bound(n, cfg.d(), cfg.k(), delta).total;
    report.summary.push_back(s);
  }
  return report;
}

}  // namespace trunclin
