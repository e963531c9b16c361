#include "trunclin/serialization.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "trunclin/errors.hpp"

namespace trunclin {
namespace {

// JSON has no infinity; an overflowing growth bound is written as null.
Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json to_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["k"] = r.k;
  j["delta"] = r.delta;
  j["c"] = r.c;
  j["complexity_term"] = r.complexity_term;
  j["confidence_term"] = r.confidence_term;
  j["total"] = r.total;
  return j;
}

Json to_json(const GrowthBound& g) {
  Json j;
  j["log_value"] = g.log_value;
  j["value"] = number_or_null(g.value);
  return j;
}

Json to_json(const GrowthReport& r) {
  Json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["k"] = r.k;
  j["bound_T"] = r.bound_T ? to_json(*r.bound_T) : Json(nullptr);
  j["bound_Ttilde"] = r.bound_Ttilde ? to_json(*r.bound_Ttilde) : Json(nullptr);
  j["observed_patterns_T"] = r.observed_patterns_T;
  j["observed_patterns_Ttilde"] = r.observed_patterns_Ttilde ? Json(*r.observed_patterns_Ttilde) : Json(nullptr);
  j["observed_are_lower_bounds"] = true;
  j["trials"] = r.trials;
  j["sampler_seed"] = r.sampler_seed;
  return j;
}

Json to_json(const Model& m) {
  Json j;
  j["d"] = m.d;
  j["k"] = m.k;
  j["w"] = Json::array();
  for (double v : m.w.values()) j["w"].push_back(v);
  j["bias"] = m.bias;
  return j;
}

Json to_json(const TrainReport& r) {
  Json j;
  j["model"] = to_json(r.model);
  j["best_empirical_robust_loss"] = r.best_empirical_robust_loss;
  j["restarts_used"] = r.restarts_used;
  j["warnings"] = r.warnings;
  Json traj = Json::array();
  for (const auto& p : r.loss_trajectory) {
    traj.push_back(Json{{"restart", p.restart},
                        {"epoch", p.epoch},
                        {"surrogate_loss", p.surrogate_loss},
                        {"exact_robust_loss", p.exact_robust_loss}});
  }
  j["loss_trajectory"] = std::move(traj);
  return j;
}

Json to_json(const RobustEvaluation& e) {
  Json j;
  j["clean_value"] = e.clean_value;
  j["clean_sign"] = e.clean_sign;
  j["lo"] = e.lo;
  j["hi"] = e.hi;
  j["lo_attained"] = e.lo_attained;
  j["hi_attained"] = e.hi_attained;
  j["support_size"] = e.support_size;
  j["misclassified"] = e.misclassified;
  j["witness"] = e.witness ? Json(*e.witness) : Json(nullptr);
  return j;
}

Json to_json(const ExperimentReport& r) {
  Json j;
  j["d"] = r.d;
  j["k"] = r.k;
  j["delta"] = r.delta;
  j["n_test"] = r.n_test;
  j["trials"] = r.trials;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"n", row.n},
                        {"trial", row.trial},
                        {"train_loss", row.train_loss},
                        {"test_loss", row.test_loss},
                        {"gap", row.gap},
                        {"bound", row.bound},
                        {"w", row.w}});
  }
  j["rows"] = std::move(rows);
  Json summary = Json::array();
  for (const auto& s : r.summary) {
    summary.push_back(Json{{"n", s.n},
                           {"median_train_loss", s.median_train_loss},
                           {"median_test_loss", s.median_test_loss},
                           {"median_gap", s.median_gap},
                           {"max_gap", s.max_gap},
                           {"bound", s.bound}});
  }
  j["summary"] = std::move(summary);
  return j;
}

Model model_from_json(const Json& j) {
  try {
    Model m;
    m.d = j.at("d").get<std::size_t>();
    m.k = j.at("k").get<std::size_t>();
    m.bias = j.value("bias", false);
    auto w = j.at("w").get<std::vector<double>>();
    TruncationConfig(m.d, m.k).require_positive_budget();
    const std::size_t expected = m.d + (m.bias ? 1 : 0);
    if (w.size() != expected) {
      throw DimensionMismatch("model w has " + std::to_string(w.size()) + " entries, expected " +
                              std::to_string(expected));
    }
    for (double v : w) {
      if (!std::isfinite(v)) throw InvalidNumber("model weights must be finite");
    }
    m.w = WeightVector(std::move(w));
    return m;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed model JSON: ") + e.what());
  }
}

Model read_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return model_from_json(j);
}

void write_model(const Model& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open " + path.string() + " for writing");
  out << to_json(m).dump(2) << '\n';
}

}  // namespace trunclin
