#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>

#include "../common/fuzz.hpp"
#include "trunclin/combinatorics.hpp"
#include "trunclin/core_truncation.hpp"
#include "trunclin/errors.hpp"

using namespace trunclin;

namespace {
std::vector<std::size_t> one_based(std::vector<std::size_t> v) {
  for (auto& i : v) ++i;
  return v;
}
double tinner(std::vector<double> w, std::vector<double> x, std::size_t k) {
  return trunc_inner(WeightVector(std::move(w)), x, TruncationConfig(x.size(), k));
}
}  // namespace

TEST_CASE("sign follows the non-negative convention") {
  CHECK(sign(0.0) == 1);
  CHECK(sign(-0.0) == 1);
  CHECK(sign(-5.0) == -1);
  CHECK(sign(std::numeric_limits<double>::infinity()) == 1);
  CHECK(sign(-std::numeric_limits<double>::infinity()) == -1);
  CHECK_THROWS_AS(sign(std::nan("")), InvalidNumber);
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(TruncationConfig(3, 1));
  CHECK_NOTHROW(TruncationConfig(3, 0));
  CHECK_THROWS_AS(TruncationConfig(0, 0), ValidationError);
  CHECK_THROWS_AS(TruncationConfig(4, 2), ValidationError);
  CHECK_THROWS_AS(TruncationConfig(3, 0).require_positive_budget(), ValidationError);
  CHECK(TruncationConfig(7, 2).kept() == 3);
}

TEST_CASE("sorted order is stable") {
  CHECK(one_based(sorted_order(std::vector<double>{3, 1, 1})) == std::vector<std::size_t>{2, 3, 1});
  CHECK(one_based(sorted_order(std::vector<double>{-5, 4, -2, -3})) == std::vector<std::size_t>{1, 4, 3, 2});
  CHECK(one_based(sorted_order(std::vector<double>{1, 2, 3, 4})) == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK_THROWS_AS(sorted_order(std::vector<double>{1, std::nan(""), 0}), InvalidNumber);
}

TEST_CASE("truncated sums") {
  const std::vector<double> u{-5, 4, -2, -3};
  CHECK(tsum(u, TruncationConfig(4, 1)) == -5);
  CHECK(tsum(u, TruncationConfig(4, 0)) == -6);
  CHECK(tsum(std::vector<double>{3, 1, 1}, TruncationConfig(3, 1)) == 1);

  const std::vector<double> v{10, 9, -100};
  CHECK(lower_sum(v, TruncationConfig(3, 1)) == -100);
  CHECK(upper_sum(v, TruncationConfig(3, 1)) == 10);
  const std::vector<double> c(5, 2.5);
  CHECK(lower_sum(c, TruncationConfig(5, 2)) == 2.5);
  CHECK(upper_sum(c, TruncationConfig(5, 1)) == 7.5);
  CHECK(lower_sum(u, TruncationConfig(4, 0)) == -6);
  CHECK(upper_sum(u, TruncationConfig(4, 0)) == -6);
  CHECK_THROWS_AS(tsum(u, TruncationConfig(5, 1)), DimensionMismatch);
}

TEST_CASE("counterexample regressions") {
  CHECK(tinner({1, 1, 1}, {10, 9, -100}, 1) == 9);
  CHECK(tinner({1, 1, 1}, {-100, 1, 2}, 1) == 1);
  CHECK(tinner({1, 1, 1}, {-90, 10, -98}, 1) == -90);
  CHECK(tinner({1, 1, 1}, {0, 9, 10}, 1) == 9);
  CHECK(tinner({1, 1, 1}, {0, 1, 10}, 1) == 1);
  CHECK(tinner({1, 1, 1}, {0, 10, 20}, 1) == 10);
  CHECK(tinner({1, 0, 0}, {3, -7, 11}, 1) == 0);
}

TEST_CASE("weight support is exact") {
  const WeightVector w(std::vector<double>{0, 1.5, 0, -2});
  CHECK(w.support() == std::vector<std::size_t>{1, 3});
  CHECK(w.support_size() == 2);
  CHECK_THROWS_AS(WeightVector(std::vector<double>{1, std::nan("")}), InvalidNumber);
}

TEST_CASE("order-statistic properties on random vectors") {
  Rng rng(11);
  for (int it = 0; it < 2000; ++it) {
    const auto in = testing::draw_instance(rng, 3, 9, 4);
    const TruncationConfig cfg(in.d, in.k);
    const ProductVector p(WeightVector(in.w), in.x);
    const auto& u = p.values;
    const double lo = lower_sum(u, cfg), mid = tsum(u, cfg), hi = upper_sum(u, cfg);
    REQUIRE(lo <= mid);
    REQUIRE(mid <= hi);

    for (std::size_t i = 0; i + 1 < in.d; ++i) REQUIRE(p.order_statistic(i) <= p.order_statistic(i + 1));

    // raising one coordinate never lowers any of the sums
    auto bumped = u;
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, in.d - 1)(rng);
    bumped[j] += 0.75;
    REQUIRE(lower_sum(bumped, cfg) >= lo);
    REQUIRE(tsum(bumped, cfg) >= mid);
    REQUIRE(upper_sum(bumped, cfg) >= hi);

    // u'_(k+i) >= u_(i) whenever u' differs from u in at most k places
    auto moved = u;
    std::vector<std::size_t> idx(in.d);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::shuffle(idx.begin(), idx.end(), rng);
    std::normal_distribution<double> g(0.0, 10.0);
    for (std::size_t t = 0; t < in.k; ++t) moved[idx[t]] = g(rng);
    const ProductVector pm(moved);
    for (std::size_t i = 0; i + in.k < in.d; ++i) REQUIRE(pm.order_statistic(i + in.k) >= p.order_statistic(i));
  }
}

TEST_CASE("determinism") {
  const std::vector<double> u{0.1, 0.2, 0.3, -0.7, 1e-17, 5};
  const TruncationConfig cfg(6, 2);
  CHECK(tsum(u, cfg) == tsum(u, cfg));
  CHECK(sorted_order(u) == sorted_order(u));
}

TEST_CASE("combinatorics") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == 118264581564861424ULL);
  CHECK(std::abs(log_binomial(60, 30) - std::log(118264581564861424.0)) < 1e-9);
  std::vector<std::size_t> c{0, 1};
  std::vector<std::vector<std::size_t>> all{c};
  while (next_combination(c, 4)) all.push_back(c);
  REQUIRE(all.size() == 6);
  for (std::size_t r = 0; r < all.size(); ++r) {
    CHECK(lex_rank(all[r], 4) == r);
    CHECK(lex_unrank(r, 4, 2) == all[r]);
  }
  CHECK(all.back() == std::vector<std::size_t>{2, 3});
}
