#pragma once

// Random instances for property tests: mixes continuous, small-integer and
// sparse entries so ties, zeros and small supports all show up.

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "trunclin/core_truncation.hpp"
#include "trunclin/random.hpp"

namespace trunclin::testing {

struct Instance {
  std::size_t d = 0;
  std::size_t k = 0;
  std::vector<double> w;
  std::vector<double> x;
  int y = 1;
};

inline std::vector<double> draw_vector(Rng& rng, std::size_t d, int kind) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> small(-2, 2);
  std::bernoulli_distribution half(0.5);
  std::vector<double> v(d);
  for (double& e : v) {
    switch (kind) {
      case 0: e = gauss(rng); break;
      case 1: e = small(rng); break;
      case 2: e = half(rng) ? 0.0 : gauss(rng); break;
      default: e = half(rng) ? 0.0 : small(rng); break;
    }
  }
  return v;
}

inline Instance draw_instance(Rng& rng, std::size_t d_min = 3, std::size_t d_max = 8, std::size_t k_max = 3) {
  Instance in;
  in.d = std::uniform_int_distribution<std::size_t>(d_min, d_max)(rng);
  const std::size_t k_cap = std::min(k_max, (in.d - 1) / 2);
  in.k = std::uniform_int_distribution<std::size_t>(1, k_cap)(rng);
  std::uniform_int_distribution<int> kind(0, 3);
  in.w = draw_vector(rng, in.d, kind(rng));
  in.x = draw_vector(rng, in.d, kind(rng));
  in.y = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
  return in;
}

}  // namespace trunclin::testing
