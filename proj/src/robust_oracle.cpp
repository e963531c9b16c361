#include "trunclin/robust_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <thread>

#include "trunclin/combinatorics.hpp"
#include "trunclin/errors.hpp"

namespace trunclin {
namespace {

struct Counts {
  std::size_t support = 0;
  std::size_t nonneg_support = 0;   // |{i : u_i >= 0, w_i != 0}|
  std::size_t nonpos_support = 0;   // |{i : u_i <= 0, w_i != 0}|
};

Counts count_support(const WeightVector& w, const ProductVector& p) {
  Counts c;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0.0) continue;
    ++c.support;
    if (p.values[i] >= 0.0) ++c.nonneg_support;
    if (p.values[i] <= 0.0) ++c.nonpos_support;
  }
  return c;
}

RobustRange range_from(const ProductVector& p, const Counts& c, const TruncationConfig& cfg) {
  const std::size_t d = cfg.d();
  const std::size_t k = cfg.k();
  const bool full = c.support == d;
  RobustRange r;
  r.lo = p.order_statistic_sum(0, cfg.kept());
  r.hi = p.order_statistic_sum(2 * k, d);
  r.lo_attained = full || c.nonneg_support >= k;
  r.hi_attained = full || c.nonpos_support >= k;
  return r;
}

bool misclassified_from(const ProductVector& p, const RobustRange& r, const Counts& c, int y,
                        const TruncationConfig& cfg) {
  if (c.support <= cfg.k()) return y == -1;
  const double clean = p.order_statistic_sum(cfg.k(), cfg.d() - cfg.k());
  return sign(clean) != y || sign(r.lo) != sign(r.hi);
}

void check_inputs(const WeightVector& w, std::span<const double> x, const TruncationConfig& cfg) {
  check_dimension(w.size(), cfg, "w");
  check_dimension(x.size(), cfg, "x");
}

std::size_t hamming(std::span<const double> a, std::span<const double> b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] != b[i];
  return n;
}

// Closed-form construction. Pushing the prediction to -1 (y = +1):
//   * lower extreme attained: move the k support coordinates carrying the
//     largest u-values to u_(1) - 1; the survivors are then u_(1..d-2k);
//   * otherwise fewer than k support coordinates have u_i >= 0: send them to
//     u'_i = -w_i^2, leaving more than k strictly negative entries and zeros.
// Pushing to +1 (y = -1) mirrors both cases.
std::vector<double> construct_witness(const WeightVector& w, std::span<const double> x, const ProductVector& p,
                                      const RobustRange& r, int y, const TruncationConfig& cfg) {
  const std::size_t d = cfg.d();
  const std::size_t k = cfg.k();
  std::vector<double> out(x.begin(), x.end());
  const bool push_down = y == 1;
  const bool attained = push_down ? r.lo_attained : r.hi_attained;

  if (attained) {
    const double target = push_down ? p.order_statistic(0) - 1.0 : p.order_statistic(d - 1) + 1.0;
    std::size_t moved = 0;
    for (std::size_t pos = 0; pos < d && moved < k; ++pos) {
      const std::size_t i = push_down ? p.sorted_index[d - 1 - pos] : p.sorted_index[pos];
      if (w[i] == 0.0) continue;
      out[i] = target / w[i];
      ++moved;
    }
  } else {
    for (std::size_t i = 0; i < d; ++i) {
      if (w[i] == 0.0) continue;
      if (push_down && p.values[i] >= 0.0) out[i] = -w[i];
      if (!push_down && p.values[i] <= 0.0) out[i] = w[i];
    }
  }
  return out;
}

// Enumerates S ⊆ support, |S| <= k, and per-coordinate u-values from
// {u_min - 1, u_max + 1, -w_i^2}, calling visit(coords, values) with the
// perturbation. Stops early when visit returns true.
bool enumerate_ball(const WeightVector& w, std::span<const double> u, std::size_t k,
                    const std::function<bool(std::span<const std::size_t>, std::span<const double>)>& visit) {
  const auto support = w.support();
  const double u_min = *std::min_element(u.begin(), u.end());
  const double u_max = *std::max_element(u.begin(), u.end());
  if (visit({}, {})) return true;
  const std::size_t max_size = std::min(k, support.size());
  for (std::size_t s = 1; s <= max_size; ++s) {
    std::vector<std::size_t> pick(s);
    for (std::size_t j = 0; j < s; ++j) pick[j] = j;
    std::vector<std::size_t> coords(s);
    std::vector<double> values(s);
    do {
      for (std::size_t j = 0; j < s; ++j) coords[j] = support[pick[j]];
      std::size_t assignments = 1;
      for (std::size_t j = 0; j < s; ++j) assignments *= 3;
      for (std::size_t a = 0; a < assignments; ++a) {
        std::size_t code = a;
        for (std::size_t j = 0; j < s; ++j) {
          const double wi = w[coords[j]];
          switch (code % 3) {
            case 0: values[j] = u_min - 1.0; break;
            case 1: values[j] = u_max + 1.0; break;
            default: values[j] = -wi * wi; break;
          }
          code /= 3;
        }
        if (visit(coords, values)) return true;
      }
    } while (next_combination(pick, support.size()));
  }
  return false;
}

// Sort-and-sum, kept separate from ProductVector on purpose so the oracle
// does not share code paths with the closed form it checks.
double naive_tsum(std::vector<double> v, std::size_t k) {
  std::sort(v.begin(), v.end());
  double s = 0.0;
  for (std::size_t i = k; i + k < v.size(); ++i) s += v[i];
  return s;
}

void check_brute_force_dim(const TruncationConfig& cfg, std::size_t max_dim) {
  if (cfg.d() > max_dim) {
    throw ValidationError("brute force limited to d <= " + std::to_string(max_dim) + ", got d=" +
                          std::to_string(cfg.d()));
  }
}

std::optional<std::vector<double>> exhaustive_witness(const WeightVector& w, std::span<const double> x, int y,
                                                      const TruncationConfig& cfg) {
  if (cfg.d() > kBruteForceMaxDim) return std::nullopt;
  const auto u = hadamard(w.values(), x);
  std::optional<std::vector<double>> found;
  enumerate_ball(w, u, cfg.k(), [&](std::span<const std::size_t> coords, std::span<const double> values) {
    std::vector<double> cand(x.begin(), x.end());
    for (std::size_t j = 0; j < coords.size(); ++j) cand[coords[j]] = values[j] / w[coords[j]];
    if (is_valid_witness(w, x, cand, y, cfg)) {
      found = std::move(cand);
      return true;
    }
    return false;
  });
  return found;
}

std::optional<std::vector<double>> witness_for(const WeightVector& w, std::span<const double> x,
                                               const ProductVector& p, const RobustRange& r, bool misclassified,
                                               int y, const TruncationConfig& cfg) {
  if (!misclassified) return std::nullopt;
  if (sign(p.order_statistic_sum(cfg.k(), cfg.d() - cfg.k())) != y) return std::vector<double>(x.begin(), x.end());

  auto cand = construct_witness(w, x, p, r, y, cfg);
  if (is_valid_witness(w, x, cand, y, cfg)) return cand;

  if (auto fallback = exhaustive_witness(w, x, y, cfg)) return fallback;
  throw InternalInconsistency("witness construction failed verification (d=" + std::to_string(cfg.d()) +
                              ", k=" + std::to_string(cfg.k()) + ")");
}

}  // namespace

RobustRange robust_range(const WeightVector& w, std::span<const double> x, const TruncationConfig& cfg) {
  check_inputs(w, x, cfg);
  const ProductVector p(w, x);
  return range_from(p, count_support(w, p), cfg);
}

bool robust_misclassified(const WeightVector& w, std::span<const double> x, int y, const TruncationConfig& cfg) {
  check_label(y);
  check_inputs(w, x, cfg);
  return robust_misclassified(w, ProductVector(w, x), y, cfg);
}

bool robust_misclassified(const WeightVector& w, const ProductVector& p, int y, const TruncationConfig& cfg) {
  check_label(y);
  check_dimension(w.size(), cfg, "w");
  check_dimension(p.values.size(), cfg, "u");
  const Counts c = count_support(w, p);
  return misclassified_from(p, range_from(p, c, cfg), c, y, cfg);
}

bool is_valid_witness(const WeightVector& w, std::span<const double> x, std::span<const double> candidate, int y,
                      const TruncationConfig& cfg) {
  if (candidate.size() != x.size()) return false;
  if (hamming(x, candidate) > cfg.k()) return false;
  return sign(trunc_inner(w, candidate, cfg)) != y;
}

std::optional<std::vector<double>> worst_case_witness(const WeightVector& w, std::span<const double> x, int y,
                                                      const TruncationConfig& cfg) {
  return evaluate_robust(w, x, y, cfg).witness;
}

RobustEvaluation evaluate_robust(const WeightVector& w, std::span<const double> x, int y,
                                 const TruncationConfig& cfg) {
  check_label(y);
  check_inputs(w, x, cfg);
  const ProductVector p(w, x);
  const Counts c = count_support(w, p);
  const RobustRange r = range_from(p, c, cfg);

  RobustEvaluation e;
  e.clean_value = p.order_statistic_sum(cfg.k(), cfg.d() - cfg.k());
  e.clean_sign = sign(e.clean_value);
  e.lo = r.lo;
  e.hi = r.hi;
  e.lo_attained = r.lo_attained;
  e.hi_attained = r.hi_attained;
  e.support_size = c.support;
  e.misclassified = misclassified_from(p, r, c, y, cfg);
  e.witness = witness_for(w, x, p, r, e.misclassified, y, cfg);
  return e;
}

BruteForceRange brute_force_range(const WeightVector& w, std::span<const double> x, const TruncationConfig& cfg,
                                  std::size_t max_dim) {
  check_inputs(w, x, cfg);
  check_brute_force_dim(cfg, max_dim);
  const auto u = hadamard(w.values(), x);
  BruteForceRange r{INFINITY, -INFINITY};
  std::vector<double> buf(u);
  enumerate_ball(w, u, cfg.k(), [&](std::span<const std::size_t> coords, std::span<const double> values) {
    std::copy(u.begin(), u.end(), buf.begin());
    for (std::size_t j = 0; j < coords.size(); ++j) buf[coords[j]] = values[j];
    const double t = naive_tsum(buf, cfg.k());
    r.lo = std::min(r.lo, t);
    r.hi = std::max(r.hi, t);
    return false;
  });
  return r;
}

bool brute_force_robust(const WeightVector& w, std::span<const double> x, int y, const TruncationConfig& cfg,
                        std::size_t max_dim) {
  check_label(y);
  check_inputs(w, x, cfg);
  check_brute_force_dim(cfg, max_dim);
  const auto u = hadamard(w.values(), x);
  std::vector<double> buf(u);
  return enumerate_ball(w, u, cfg.k(), [&](std::span<const std::size_t> coords, std::span<const double> values) {
    std::copy(u.begin(), u.end(), buf.begin());
    for (std::size_t j = 0; j < coords.size(); ++j) buf[coords[j]] = values[j];
    return sign(naive_tsum(buf, cfg.k())) != y;
  });
}

double empirical_robust_loss(const WeightVector& w, const Dataset& data, const TruncationConfig& cfg,
                             unsigned threads) {
  if (data.empty()) throw ValidationError("empirical robust loss of an empty dataset");
  check_dimension(data.dim(), cfg, "dataset");
  check_dimension(w.size(), cfg, "w");

  const std::size_t n = data.size();
  auto count_range = [&](std::size_t first, std::size_t last) {
    std::size_t errors = 0;
    for (std::size_t i = first; i < last; ++i) errors += robust_misclassified(w, data.x(i), data.y(i), cfg);
    return errors;
  };

  std::size_t errors = 0;
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  if (workers == 1) {
    errors = count_range(0, n);
  } else {
    std::vector<std::size_t> partial(workers, 0);
    {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] { partial[t] = count_range(n * t / workers, n * (t + 1) / workers); });
      }
    }
    for (std::size_t e : partial) errors += e;
  }
  return static_cast<double>(errors) / static_cast<double>(n);
}

}  // namespace trunclin
