#include "trunclin/growth_analysis.hpp"

#include <cmath>
#include <string>
#include <thread>
#include <unordered_set>

#include "trunclin/bounds.hpp"
#include "trunclin/errors.hpp"
#include "trunclin/random.hpp"
#include "trunclin/robust_oracle.hpp"

namespace trunclin {
namespace {

void check_bound_args(std::uint64_t n, std::size_t d, std::size_t k) {
  if (k == 0 || 2 * k >= d) {
    throw ValidationError("growth bound requires 0 < 2k < d (d=" + std::to_string(d) + ", k=" + std::to_string(k) +
                          ")");
  }
  if (n <= d + 1) {
    throw ValidationError("growth bound requires n > d+1 (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
}

// Bit-packed pattern, one bit per point.
using Pattern = std::string;

class PatternBuilder {
 public:
  explicit PatternBuilder(std::size_t n) : bytes_((n + 7) / 8, '\0') {}
  void set(std::size_t i, bool bit) {
    if (bit) bytes_[i / 8] = static_cast<char>(bytes_[i / 8] | (1 << (i % 8)));
  }
  Pattern take() { return std::move(bytes_); }

 private:
  Pattern bytes_;
};

struct PatternSets {
  std::unordered_set<Pattern> plain;
  std::unordered_set<Pattern> robust;
};

void run_trials(std::span<const std::vector<double>> xs, std::optional<std::span<const int>> ys,
                const TruncationConfig& cfg, std::uint64_t seed, std::uint64_t first, std::uint64_t last,
                PatternSets& out) {
  const std::size_t n = xs.size();
  for (std::uint64_t t = first; t < last; ++t) {
    const WeightVector w = census_weight(cfg.d(), seed, t);
    PatternBuilder plain(n);
    PatternBuilder robust(n);
    for (std::size_t i = 0; i < n; ++i) {
      const ProductVector p(w, xs[i]);
      plain.set(i, sign(p.order_statistic_sum(cfg.k(), cfg.d() - cfg.k())) > 0);
      if (ys) robust.set(i, robust_misclassified(w, p, (*ys)[i], cfg));
    }
    out.plain.insert(plain.take());
    if (ys) out.robust.insert(robust.take());
  }
}

}  // namespace

GrowthBound growth_bound_T(std::uint64_t n, std::size_t d, std::size_t k) {
  check_bound_args(n, d, k);
  const double dd = static_cast<double>(d);
  const double log_base = 1.0 + std::log(static_cast<double>(n)) + std::log(code_size(d, k)) - std::log(dd);
  GrowthBound b;
  b.log_value = dd * log_base;
  b.value = std::exp(b.log_value);
  return b;
}

GrowthBound growth_bound_Ttilde(std::uint64_t n, std::size_t d, std::size_t k) {
  const GrowthBound t = growth_bound_T(n, d, k);
  GrowthBound b;
  b.log_value = t.log_value + std::log1p(std::exp(-t.log_value));
  b.value = 1.0 + t.value;
  return b;
}

WeightVector census_weight(std::size_t d, std::uint64_t seed, std::uint64_t trial) {
  Rng rng(derive_seed(seed, trial));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> kind(0, 2);
  std::bernoulli_distribution coin(0.5);
  std::vector<double> w(d);
  switch (kind(rng)) {
    case 0:
      for (double& v : w) v = gauss(rng);
      break;
    case 1:
      // sparse: reaches the |A_w| <= k regime where every prediction is +1
      for (double& v : w) v = coin(rng) ? gauss(rng) : 0.0;
      break;
    default:
      for (double& v : w) v = coin(rng) ? 1.0 : -1.0;
      break;
  }
  return WeightVector(std::move(w));
}

GrowthReport census_patterns(std::span<const std::vector<double>> xs, std::optional<std::span<const int>> ys,
                             const TruncationConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                             unsigned threads) {
  if (xs.empty()) throw ValidationError("census needs at least one point");
  if (trials == 0) throw ValidationError("census needs at least one trial");
  for (const auto& x : xs) check_dimension(x.size(), cfg, "census point");
  if (ys) {
    if (ys->size() != xs.size()) throw DimensionMismatch("census labels and points differ in count");
    for (int y : *ys) check_label(y);
  }

  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, trials));
  std::vector<PatternSets> partial(workers);
  if (workers == 1) {
    run_trials(xs, ys, cfg, seed, 0, trials, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        run_trials(xs, ys, cfg, seed, trials * t / workers, trials * (t + 1) / workers, partial[t]);
      });
    }
  }
  for (std::size_t t = 1; t < partial.size(); ++t) {
    partial[0].plain.merge(partial[t].plain);
    partial[0].robust.merge(partial[t].robust);
  }

  GrowthReport r;
  r.n = xs.size();
  r.d = cfg.d();
  r.k = cfg.k();
  if (cfg.k() > 0 && r.n > cfg.d() + 1) {
    r.bound_T = growth_bound_T(r.n, r.d, r.k);
    r.bound_Ttilde = growth_bound_Ttilde(r.n, r.d, r.k);
  }
  r.observed_patterns_T = partial[0].plain.size();
  if (ys) r.observed_patterns_Ttilde = partial[0].robust.size();
  r.trials = trials;
  r.sampler_seed = seed;
  return r;
}

}  // namespace trunclin
