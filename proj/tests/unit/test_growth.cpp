#include <doctest.h>

#include <cmath>

#include "trunclin/errors.hpp"
#include "trunclin/growth_analysis.hpp"
#include "trunclin/random.hpp"

using namespace trunclin;

namespace {
std::vector<std::vector<double>> gaussian_points(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::vector<double>> xs(n, std::vector<double>(d));
  for (auto& x : xs) {
    for (double& v : x) v = g(rng);
  }
  return xs;
}
}  // namespace

TEST_CASE("growth bound values") {
  // frozen from a 50-digit evaluation of (e n (C(d,2k)+C(d,2)) / d)^d
  const auto g = growth_bound_T(10, 4, 1);
  CHECK(g.log_value == doctest::Approx(17.60478952664862150165295).epsilon(1e-14));
  CHECK(g.value == doctest::Approx(44224501.52684683365326931).epsilon(1e-12));
  CHECK(growth_bound_Ttilde(10, 4, 1).value == doctest::Approx(44224502.52684683365326931).epsilon(1e-12));

  CHECK_THROWS_AS(growth_bound_T(5, 4, 1), ValidationError);
  CHECK_THROWS_AS(growth_bound_T(10, 4, 0), ValidationError);
  CHECK_THROWS_AS(growth_bound_T(10, 4, 2), ValidationError);

  const auto huge = growth_bound_T(1000000, 200, 50);
  CHECK(std::isfinite(huge.log_value));
  CHECK(std::isinf(huge.value));
}

TEST_CASE("growth bounds increase with n") {
  for (std::size_t d = 3; d <= 6; ++d) {
    for (std::size_t k = 1; 2 * k < d; ++k) {
      for (std::uint64_t n = d + 2; n < 200; ++n) {
        REQUIRE(growth_bound_T(n + 1, d, k).log_value > growth_bound_T(n, d, k).log_value);
        REQUIRE(growth_bound_Ttilde(n + 1, d, k).log_value > growth_bound_Ttilde(n, d, k).log_value);
      }
    }
  }
}

TEST_CASE("census stays below the bounds and grows with trials") {
  const TruncationConfig cfg(4, 1);
  const auto xs = gaussian_points(8, 4, 3);
  const std::vector<int> ys{1, -1, 1, 1, -1, -1, 1, -1};
  std::uint64_t prev_t = 0, prev_tt = 0;
  for (std::uint64_t trials : {10, 100, 1000, 5000}) {
    const auto r = census_patterns(xs, std::span<const int>(ys), cfg, trials, 42);
    REQUIRE(r.bound_T);
    REQUIRE(r.bound_Ttilde);
    CHECK(r.observed_patterns_T <= 256);
    CHECK(static_cast<double>(r.observed_patterns_T) <= r.bound_T->value);
    CHECK(static_cast<double>(*r.observed_patterns_Ttilde) <= r.bound_Ttilde->value);
    CHECK(r.observed_patterns_T >= prev_t);
    CHECK(*r.observed_patterns_Ttilde >= prev_tt);
    prev_t = r.observed_patterns_T;
    prev_tt = *r.observed_patterns_Ttilde;
  }
  CHECK(prev_t > 1);
}

TEST_CASE("census is schedule independent and reports missing bounds") {
  const TruncationConfig cfg(5, 2);
  const auto xs = gaussian_points(6, 5, 9);
  const auto a = census_patterns(xs, std::nullopt, cfg, 3000, 7, 1);
  const auto b = census_patterns(xs, std::nullopt, cfg, 3000, 7, 4);
  CHECK(a.observed_patterns_T == b.observed_patterns_T);
  CHECK_FALSE(a.observed_patterns_Ttilde);
  CHECK_FALSE(a.bound_T);  // n = d + 1
  CHECK(a.sampler_seed == 7);
  CHECK(a.trials == 3000);
}

TEST_CASE("census sampler includes sparse weights") {
  bool saw_sparse = false;
  for (std::uint64_t t = 0; t < 300 && !saw_sparse; ++t) saw_sparse = census_weight(6, 1, t).support_size() <= 2;
  CHECK(saw_sparse);
  CHECK(census_weight(6, 1, 17).values()[0] == census_weight(6, 1, 17).values()[0]);
}
