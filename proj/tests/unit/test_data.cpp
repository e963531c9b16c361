#include <doctest.h>

#include <cmath>
#include <sstream>

#include "trunclin/data.hpp"
#include "trunclin/errors.hpp"
#include "trunclin/experiment.hpp"
#include "trunclin/random.hpp"
#include "trunclin/robust_oracle.hpp"

using namespace trunclin;

namespace {
std::string error_of(const std::string& csv) {
  std::istringstream in(csv);
  try {
    read_dataset(in);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST_CASE("csv round trip is lossless") {
  GaussianMixtureConfig mix{{0.3, -1e-7, 12345.678}, {1.0, 1e-9, 4.0}, 200, 5};
  const Dataset data = sample_mixture(mix);
  std::ostringstream out;
  write_dataset(data, out);
  std::istringstream in(out.str());
  CHECK(read_dataset(in) == data);
  CHECK(out.str().rfind("x1,x2,x3,y\n", 0) == 0);
  CHECK(out.str().find('\r') == std::string::npos);
}

TEST_CASE("csv errors name the line") {
  CHECK(error_of("x1,x2,y\n1,2,1\n3,4,0\n").find("line 3") != std::string::npos);
  CHECK(error_of("x1,x2,y\n1,2,1\n3,4,0\n").find("label") != std::string::npos);
  CHECK(error_of("x1,x3,y\n1,2,1\n").find("line 1") != std::string::npos);
  CHECK(error_of("x1,x2,y\n1,2,3,1\n").find("line 2") != std::string::npos);
  CHECK(error_of("x1,x2,y\n1,abc,1\n").find("malformed") != std::string::npos);
  CHECK(error_of("x1,x2,y\n1,nan,1\n").find("line 2") != std::string::npos);
  CHECK(error_of("") != "");
  CHECK(error_of("x1,x2,y\n1,2,1\n\n-1,0.5,-1\n").empty());
}

TEST_CASE("mixture statistics") {
  const std::size_t n = 10000;
  GaussianMixtureConfig mix{{1.0, -0.5, 0.0, 2.0}, {1.0, 0.25, 4.0, 1.0}, n, 17};
  const Dataset data = sample_mixture(mix);
  REQUIRE(data.size() == n);
  CHECK(std::abs(data.negative_fraction() - 0.5) <= 3.0 * std::sqrt(0.25 / n));
  for (std::size_t j = 0; j < 4; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += data.y(i) * data.x(i)[j];
    mean /= n;
    CHECK(std::abs(mean - mix.mu[j]) <= 4.0 * std::sqrt(mix.sigma_diag[j] / n));
  }
  CHECK(sample_mixture(mix) == data);
}

TEST_CASE("near-degenerate mixture is cleanly separable") {
  GaussianMixtureConfig mix{{1.0, -2.0, 0.5}, std::vector<double>(3, 1e-12), 2000, 2};
  const Dataset data = sample_mixture(mix);
  const WeightVector w(std::vector<double>{1, -1, 1});
  const TruncationConfig cfg(3, 0);
  for (std::size_t i = 0; i < data.size(); ++i) REQUIRE(sign(trunc_inner(w, data.x(i), cfg)) == data.y(i));
}

TEST_CASE("mixture validation") {
  CHECK_THROWS_AS(sample_mixture({{1.0}, {0.0}, 5, 0}), ValidationError);
  CHECK_THROWS_AS(sample_mixture({{1.0, 1.0}, {1.0}, 5, 0}), DimensionMismatch);
  Dataset d(2);
  CHECK_THROWS_AS(d.add(std::vector<double>{1.0, 2.0}, 0), InvalidLabel);
  CHECK_THROWS_AS(d.add(std::vector<double>{1.0}, 1), DimensionMismatch);
}

TEST_CASE("generalization experiment") {
  GaussianMixtureConfig mix{std::vector<double>(6, 1.0), std::vector<double>(6, 1.0), 0, 3};
  const TruncationConfig cfg(6, 1);
  TrainConfig tc;
  tc.epochs = 10;
  tc.seed = 4;
  const std::vector<std::size_t> grid{200, 50};
  const auto r = generalization_experiment(mix, cfg, tc, grid, 500, 3);
  REQUIRE(r.rows.size() == 6);
  REQUIRE(r.summary.size() == 2);
  CHECK(r.summary[0].n == 200);
  for (std::size_t i = 0; i + 1 < r.rows.size(); ++i) {
    const auto& a = r.rows[i];
    const auto& b = r.rows[i + 1];
    CHECK((a.n < b.n || (a.n == b.n && a.trial < b.trial)));
  }
  for (const auto& row : r.rows) {
    CHECK(row.test_loss >= 0.0);
    CHECK(row.test_loss <= 1.0);
    CHECK(row.gap == row.test_loss - row.train_loss);
    if (row.bound >= 1.0) CHECK(row.gap <= row.bound);
  }

  // stored models re-evaluate to the reported test loss on the regenerated test split
  const std::size_t cell = 1 * 3 + 2;  // n = 50, trial 2
  GaussianMixtureConfig test_mix = mix;
  test_mix.n = 500;
  test_mix.seed = derive_seed(mix.seed, 2 * cell + 1);
  const auto& row = r.rows[2];
  REQUIRE(row.n == 50);
  REQUIRE(row.trial == 2);
  CHECK(empirical_robust_loss(WeightVector(row.w), sample_mixture(test_mix), cfg) == row.test_loss);

  const auto again = generalization_experiment(mix, cfg, tc, grid, 500, 3, 0.05, 2);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    CHECK(again.rows[i].train_loss == r.rows[i].train_loss);
    CHECK(again.rows[i].test_loss == r.rows[i].test_loss);
    CHECK(again.rows[i].w == r.rows[i].w);
  }

  CHECK_THROWS_AS(generalization_experiment(mix, cfg, tc, grid, 0, 3), ValidationError);
  CHECK_THROWS_AS(generalization_experiment(mix, cfg, tc, {7}, 10, 3), ValidationError);
}
