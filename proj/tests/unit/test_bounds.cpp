#include <doctest.h>

#include <cmath>

#include "trunclin/bounds.hpp"
#include "trunclin/errors.hpp"
#include "trunclin/growth_analysis.hpp"

using namespace trunclin;

TEST_CASE("universal constant") {
  CHECK(universal_constant() == 2.0 * std::sqrt(2.0 + 2.0 * std::log(2.0)));
  CHECK(universal_constant() == doctest::Approx(3.680377350826890750027862).epsilon(1e-15));
}

TEST_CASE("bound at n=1000, d=4, k=1") {
  // reference values from a 50-digit evaluation of the closed form
  const auto r = theorem1_bound(1000, 4, 1, 0.05);
  CHECK(r.complexity_term == doctest::Approx(0.6985494881081178838170601).epsilon(1e-13));
  CHECK(r.confidence_term == doctest::Approx(0.503744668221601474137329).epsilon(1e-13));
  CHECK(r.total == doctest::Approx(1.202294156329719357954389).epsilon(1e-13));
  CHECK(r.total == r.complexity_term + r.confidence_term);
  CHECK(r.c == universal_constant());
  CHECK(code_size(4, 1) == 12);
}

TEST_CASE("bound preconditions") {
  CHECK_THROWS_AS(theorem1_bound(5, 4, 1, 0.05), ValidationError);
  CHECK_THROWS_AS(theorem1_bound(100, 4, 1, 0.0), ValidationError);
  CHECK_THROWS_AS(theorem1_bound(100, 4, 1, 1.0), ValidationError);
  CHECK_THROWS_AS(theorem1_bound(100, 4, 0, 0.05), ValidationError);
  CHECK_THROWS_AS(theorem1_bound(100, 4, 2, 0.05), ValidationError);
  CHECK_THROWS_AS(massart_bound(-1.0, 10), ValidationError);
}

TEST_CASE("bound shape") {
  const double a = theorem1_bound(1000, 4, 1, 0.05).total;
  const double b = theorem1_bound(1000000, 4, 1, 0.05).total;
  const double c = theorem1_bound(1000000000, 4, 1, 0.05).total;
  CHECK(a > b);
  CHECK(b > c);

  const auto r1 = theorem1_bound(5000, 6, 2, 0.05);
  const auto r2 = theorem1_bound(5000, 6, 2, 0.10);
  CHECK(r2.complexity_term == r1.complexity_term);
  CHECK(r2.confidence_term < r1.confidence_term);

  for (std::uint64_t n = 20; n < 5000; ++n) {
    REQUIRE(theorem1_bound(n + 1, 6, 1, 0.05).total < theorem1_bound(n, 6, 1, 0.05).total);
  }
}

TEST_CASE("massart step") {
  CHECK(massart_bound(0.0, 10) == 0.0);
  CHECK(massart_bound(100 * std::log(2.0), 100) == doctest::Approx(std::sqrt(2 * std::log(2.0))).epsilon(1e-15));
  CHECK(massart_bound(100 * std::log(2.0), 100) > 1.0);

  // with L = d ln(e n m / d): complexity = c sqrt(L / n) = (c / sqrt 2) * massart(L, n),
  // and equivalently 2 * massart((1 + ln 2) L, n)
  for (std::uint64_t n : {10, 100, 1000, 123456}) {
    for (std::size_t d : {3, 4, 7, 10}) {
      for (std::size_t k = 1; 2 * k < d; ++k) {
        const auto r = theorem1_bound(n < d + 2 ? d + 2 : n, d, k, 0.05);
        const double L = static_cast<double>(d) * std::log(std::exp(1.0) * r.n * code_size(d, k) / d);
        CHECK(r.complexity_term / r.c == doctest::Approx(massart_bound(L, r.n) / std::sqrt(2.0)).epsilon(1e-13));
        CHECK(r.complexity_term ==
              doctest::Approx(2.0 * massart_bound((1.0 + std::log(2.0)) * L, r.n)).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("constant absorption inequality on a grid") {
  // 2 ln(2 Pi~) <= (2 + 2 ln 2) d ln(e n m / d), with Pi~ = 1 + (e n m / d)^d
  for (std::size_t d = 3; d <= 12; ++d) {
    for (std::size_t k = 1; 2 * k < d; ++k) {
      for (std::uint64_t n = d + 2; n <= 100000; n = n * 3 / 2 + 1) {
        const double L = growth_bound_T(n, d, k).log_value;
        const double log_tilde = L + std::log1p(std::exp(-L));
        REQUIRE(2.0 * (std::log(2.0) + log_tilde) <= (2.0 + 2.0 * std::log(2.0)) * L);
      }
    }
  }
}

TEST_CASE("sample complexity") {
  const auto n = sample_complexity(0.1, 0.05, 4, 1);
  CHECK(n == 191192);
  CHECK(theorem1_bound(n, 4, 1, 0.05).total <= 0.1);
  CHECK(theorem1_bound(n - 1, 4, 1, 0.05).total > 0.1);

  // linear scan around the answer: exactly one crossing
  std::uint64_t first = 0;
  for (std::uint64_t m = n - 2000; m <= n + 2000; ++m) {
    if (theorem1_bound(m, 4, 1, 0.05).total <= 0.1) {
      first = m;
      break;
    }
  }
  CHECK(first == n);

  CHECK(sample_complexity(1e6, 0.05, 4, 1) == 6);
  CHECK_THROWS_AS(sample_complexity(0.0, 0.05, 4, 1), ValidationError);
  CHECK_THROWS_AS(sample_complexity(0.1, 1.5, 4, 1), ValidationError);
}
