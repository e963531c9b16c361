#include "trunclin/training.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "trunclin/errors.hpp"
#include "trunclin/random.hpp"
#include "trunclin/robust_oracle.hpp"

namespace trunclin {
namespace {

struct RestartResult {
  std::vector<double> w;
  double loss = std::numeric_limits<double>::infinity();
  std::vector<TrajectoryPoint> trajectory;
};

void project_l2(std::vector<double>& w, std::optional<double> cap) {
  if (!cap) return;
  const double norm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
  if (norm > *cap) {
    for (double& v : w) v *= *cap / norm;
  }
}

RestartResult run_restart(const Dataset& data, const TruncationConfig& cfg, const TrainConfig& tc,
                          std::size_t restart) {
  Rng rng(derive_seed(tc.seed, restart));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> w(cfg.d());
  for (double& v : w) v = gauss(rng);
  project_l2(w, tc.l2_cap);

  RestartResult best;
  auto record = [&](std::size_t epoch) {
    const WeightVector wv(w);
    const double exact = empirical_robust_loss(wv, data, cfg);
    best.trajectory.push_back({restart, epoch, hinge_surrogate(wv, data, cfg), exact});
    if (exact < best.loss) {
      best.loss = exact;
      best.w = w;
    }
  };
  record(0);

  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t epoch = 1; epoch <= tc.epochs && best.loss > 0.0; ++epoch) {
    const double step = tc.initial_step / std::sqrt(static_cast<double>(epoch));
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i : order) {
      const WeightVector wv(w);
      if (robust_margin(wv, data.x(i), data.y(i), cfg) >= 1.0) continue;
      const auto g = margin_subgradient(wv, data.x(i), data.y(i), cfg);
      for (std::size_t j = 0; j < w.size(); ++j) w[j] += step * g[j];
      project_l2(w, tc.l2_cap);
    }
    record(epoch);
  }
  return best;
}

bool all_features_zero(const Dataset& data) {
  const auto f = data.features();
  return std::all_of(f.begin(), f.end(), [](double v) { return v == 0.0; });
}

}  // namespace

void TrainConfig::validate() const {
  if (epochs < 1) throw ValidationError("epochs must be at least 1");
  if (restarts < 1) throw ValidationError("restarts must be at least 1");
  if (!(initial_step > 0.0)) throw ValidationError("initial step must be positive");
  if (l2_cap && !(*l2_cap > 0.0)) throw ValidationError("l2 cap must be positive");
}

Dataset Model::prepare(const Dataset& data) const {
  if (data.dim() != d) {
    throw DimensionMismatch("dataset has d=" + std::to_string(data.dim()) + ", model expects d=" + std::to_string(d));
  }
  return bias ? data.with_bias() : data;
}

double robust_margin(const WeightVector& w, std::span<const double> x, int y, const TruncationConfig& cfg) {
  check_label(y);
  check_dimension(w.size(), cfg, "w");
  check_dimension(x.size(), cfg, "x");
  const ProductVector p(w, x);
  return y == 1 ? p.order_statistic_sum(0, cfg.kept()) : -p.order_statistic_sum(2 * cfg.k(), cfg.d());
}

std::vector<double> margin_subgradient(const WeightVector& w, std::span<const double> x, int y,
                                       const TruncationConfig& cfg) {
  check_label(y);
  check_dimension(w.size(), cfg, "w");
  check_dimension(x.size(), cfg, "x");
  const ProductVector p(w, x);
  std::vector<double> g(cfg.d(), 0.0);
  const std::size_t first = y == 1 ? 0 : 2 * cfg.k();
  for (std::size_t pos = first; pos < first + cfg.kept(); ++pos) {
    const std::size_t i = p.sorted_index[pos];
    g[i] = y * x[i];
  }
  return g;
}

double hinge_surrogate(const WeightVector& w, const Dataset& data, const TruncationConfig& cfg) {
  if (data.empty()) throw ValidationError("surrogate loss of an empty dataset");
  double total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    total += std::max(0.0, 1.0 - robust_margin(w, data.x(i), data.y(i), cfg));
  }
  return total / static_cast<double>(data.size());
}

TrainReport train(const Dataset& data, const TruncationConfig& cfg, const TrainConfig& tc) {
  tc.validate();
  if (data.empty()) throw ValidationError("cannot train on an empty dataset");
  check_dimension(data.dim(), cfg, "dataset");

  const Dataset prepared = tc.bias ? data.with_bias() : data;
  const TruncationConfig model_cfg(prepared.dim(), cfg.k());

  TrainReport report;
  report.model.d = data.dim();
  report.model.k = cfg.k();
  report.model.bias = tc.bias;
  report.restarts_used = tc.restarts;

  if (all_features_zero(data)) {
    report.warnings.push_back("all feature vectors are zero; returning the zero weight vector");
    report.model.w = WeightVector(std::vector<double>(model_cfg.d(), 0.0));
    report.best_empirical_robust_loss = empirical_robust_loss(report.model.w, prepared, model_cfg);
    report.restarts_used = 0;
    return report;
  }

  std::vector<RestartResult> results(tc.restarts);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(tc.threads, tc.restarts));
  if (workers == 1) {
    for (std::size_t r = 0; r < tc.restarts; ++r) results[r] = run_restart(prepared, model_cfg, tc, r);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t r = t; r < tc.restarts; r += workers) results[r] = run_restart(prepared, model_cfg, tc, r);
      });
    }
  }

  // lowest loss wins; ties go to the lowest restart index
  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    if (results[r].loss < results[best].loss) best = r;
  }
  for (auto& r : results) {
    report.loss_trajectory.insert(report.loss_trajectory.end(), r.trajectory.begin(), r.trajectory.end());
  }
  report.model.w = WeightVector(results[best].w);
  report.best_empirical_robust_loss = empirical_robust_loss(report.model.w, prepared, model_cfg);
  if (report.best_empirical_robust_loss != results[best].loss) {
    throw InternalInconsistency("re-evaluated training loss differs from the tracked best");
  }
  return report;
}

double eval_robust_error(const WeightVector& w, const Dataset& data, const TruncationConfig& cfg) {
  return empirical_robust_loss(w, data, cfg);
}

double eval_robust_error(const Model& model, const Dataset& data) {
  return empirical_robust_loss(model.w, model.prepare(data), model.weight_config());
}

}  // namespace trunclin
