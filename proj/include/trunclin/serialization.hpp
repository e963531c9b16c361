#pragma once

// JSON views of the library's reports, built on nlohmann::json. Keys are
// emitted in insertion order so the same report always dumps to the same
// bytes.

#include <filesystem>

#include <json.hpp>

#include "trunclin/bounds.hpp"
#include "trunclin/experiment.hpp"
#include "trunclin/growth_analysis.hpp"
#include "trunclin/robust_oracle.hpp"
#include "trunclin/training.hpp"

namespace trunclin {

using Json = nlohmann::ordered_json;

Json to_json(const BoundReport& r);
Json to_json(const GrowthBound& g);
Json to_json(const GrowthReport& r);
/// {"d", "k", "w": [...], "bias"}
Json to_json(const Model& m);
Json to_json(const TrainReport& r);
Json to_json(const RobustEvaluation& e);
Json to_json(const ExperimentReport& r);

/// Inverse of to_json(Model). Validates (d, k), the length of w and finiteness.
Model model_from_json(const Json& j);
Model read_model(const std::filesystem::path& path);
void write_model(const Model& m, const std::filesystem::path& path);

}  // namespace trunclin
