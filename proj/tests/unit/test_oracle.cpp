#include <doctest.h>

#include "../common/fuzz.hpp"
#include "trunclin/dataset.hpp"
#include "trunclin/errors.hpp"
#include "trunclin/robust_oracle.hpp"

using namespace trunclin;

namespace {
const WeightVector ones3(std::vector<double>{1, 1, 1});
const TruncationConfig cfg31(3, 1);
const std::vector<double> x_bad{10, 9, -100};
const std::vector<double> x_good{5, 6, 7};

std::size_t hamming(std::span<const double> a, std::span<const double> b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] != b[i];
  return n;
}
}  // namespace

TEST_CASE("robust range examples") {
  auto r = robust_range(ones3, x_bad, cfg31);
  CHECK(r.lo == -100);
  CHECK(r.hi == 10);
  CHECK(r.lo_attained);
  CHECK(r.hi_attained);
  r = robust_range(ones3, x_good, cfg31);
  CHECK(r.lo == 5);
  CHECK(r.hi == 7);

  const WeightVector zero(std::vector<double>(3, 0.0));
  r = robust_range(zero, x_good, cfg31);
  CHECK(r.lo == 0);
  CHECK(r.hi == 0);
  CHECK_FALSE(r.lo_attained);
  CHECK_FALSE(r.hi_attained);

  const auto bf = brute_force_range(ones3, x_bad, cfg31);
  CHECK(bf.lo == -100);
  CHECK(bf.hi == 10);
}

TEST_CASE("robust misclassification examples") {
  CHECK(robust_misclassified(ones3, x_bad, 1, cfg31));
  CHECK_FALSE(robust_misclassified(ones3, x_good, 1, cfg31));
  const WeightVector sparse(std::vector<double>{1, 0, 0});
  CHECK(robust_misclassified(sparse, x_good, -1, cfg31));
  CHECK_FALSE(robust_misclassified(sparse, x_good, 1, cfg31));
  CHECK(brute_force_robust(ones3, x_bad, 1, cfg31));
  CHECK_FALSE(brute_force_robust(ones3, x_good, 1, cfg31));
  CHECK_THROWS_AS(robust_misclassified(ones3, x_good, 0, cfg31), InvalidLabel);
  CHECK_THROWS_AS(robust_misclassified(ones3, std::vector<double>{1, 2}, 1, cfg31), DimensionMismatch);
}

TEST_CASE("witness examples") {
  const auto w1 = worst_case_witness(ones3, x_bad, 1, cfg31);
  REQUIRE(w1);
  CHECK(*w1 == std::vector<double>{-101, 9, -100});
  CHECK(trunc_inner(ones3, *w1, cfg31) == -100);
  CHECK_FALSE(worst_case_witness(ones3, x_good, 1, cfg31));
  const auto w3 = worst_case_witness(ones3, x_good, -1, cfg31);
  REQUIRE(w3);
  CHECK(*w3 == x_good);
}

TEST_CASE("brute force degenerate cases") {
  const TruncationConfig cfg30(3, 0);
  const auto bf = brute_force_range(ones3, x_bad, cfg30);
  CHECK(bf.lo == -81);
  CHECK(bf.hi == -81);
  const WeightVector sparse(std::vector<double>{1, 0, 0});
  const auto bs = brute_force_range(sparse, x_bad, cfg31);
  CHECK(bs.lo == 0);
  CHECK(bs.hi == 0);
  CHECK_THROWS_AS(brute_force_range(WeightVector(std::vector<double>(11, 1.0)), std::vector<double>(11, 1.0),
                                    TruncationConfig(11, 1)),
                  ValidationError);
}

TEST_CASE("oracle agrees with brute force on random instances") {
  Rng rng(2024);
  std::size_t witnesses = 0;
  for (int it = 0; it < 3000; ++it) {
    const auto in = testing::draw_instance(rng);
    const TruncationConfig cfg(in.d, in.k);
    const WeightVector w(in.w);
    const auto ev = evaluate_robust(w, in.x, in.y, cfg);
    REQUIRE(ev.misclassified == brute_force_robust(w, in.x, in.y, cfg));
    REQUIRE(ev.lo <= ev.clean_value);
    REQUIRE(ev.clean_value <= ev.hi);
    REQUIRE(ev.witness.has_value() == ev.misclassified);

    const auto bf = brute_force_range(w, in.x, cfg);
    if (ev.lo_attained) {
      REQUIRE(ev.lo == bf.lo);
    } else {
      REQUIRE(ev.lo <= bf.lo);
    }
    if (ev.hi_attained) {
      REQUIRE(ev.hi == bf.hi);
    } else {
      REQUIRE(ev.hi >= bf.hi);
    }

    if (ev.witness) {
      ++witnesses;
      REQUIRE(hamming(*ev.witness, in.x) <= in.k);
      REQUIRE(sign(trunc_inner(w, *ev.witness, cfg)) != in.y);
      REQUIRE(is_valid_witness(w, in.x, *ev.witness, in.y, cfg));
    }

    if (w.support_size() > in.k) {
      // both signs reachable over the ball <=> lower and upper sums disagree in sign
      const bool both = sign(bf.lo) != sign(bf.hi);
      REQUIRE(both == (sign(ev.lo) != sign(ev.hi)));
    } else {
      REQUIRE(ev.clean_value == 0);
      REQUIRE(bf.lo == 0);
      REQUIRE(bf.hi == 0);
      REQUIRE(ev.misclassified == (in.y == -1));
    }
  }
  CHECK(witnesses > 300);
}

TEST_CASE("empirical robust loss") {
  Dataset data(3);
  data.add(x_bad, 1);
  data.add(x_good, 1);
  CHECK(empirical_robust_loss(ones3, data, cfg31) == 0.5);

  Dataset clean(3);
  clean.add(x_good, 1);
  clean.add(std::vector<double>{-5, -6, -7}, -1);
  CHECK(empirical_robust_loss(ones3, clean, cfg31) == 0.0);

  Rng rng(5);
  Dataset big(6);
  for (int i = 0; i < 501; ++i) {
    const auto x = testing::draw_vector(rng, 6, i % 4);
    big.add(x, i % 3 == 0 ? -1 : 1);
  }
  const WeightVector sparse(std::vector<double>{0, 2, 0, 0, 0, 0});
  CHECK(empirical_robust_loss(sparse, big, TruncationConfig(6, 1)) == doctest::Approx(big.negative_fraction()));
  const WeightVector dense(testing::draw_vector(rng, 6, 0));
  const TruncationConfig cfg62(6, 2);
  CHECK(empirical_robust_loss(dense, big, cfg62, 1) == empirical_robust_loss(dense, big, cfg62, 3));

  CHECK_THROWS_AS(empirical_robust_loss(ones3, Dataset(3), cfg31), ValidationError);
}
