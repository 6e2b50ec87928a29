#pragma once

#include <string>

#include "json.hpp"
#include "translin/chance.hpp"
#include "translin/objective.hpp"
#include "translin/transform.hpp"

namespace translin {

// Transforms are tagged objects: {"kind":"square_root"}, {"kind":"power","k":2},
// {"kind":"scale","R":1.96}, {"kind":"affine","a":1,"b":0}, and
// {"kind":"compose","outer":{...},"inner":{...}}.
nlohmann::json transform_to_json(const MonotoneTransform& h);
MonotoneTransform transform_from_json(const nlohmann::json& j);

// Instance files: {n, s, alpha_num, alpha_den, weights1[], weights2[], B1[], B2[],
// transform1, transform2}. B1/B2 hold 1-based positions.
nlohmann::json instance_to_json(const CompositeObjective& f);
CompositeObjective instance_from_json(const nlohmann::json& j);

// Chance instances: {m, mu[], sigma[], alpha_c}.
nlohmann::json chance_to_json(const ChanceInstance& c);
ChanceInstance chance_from_json(const nlohmann::json& j);

/// Reads a JSON file; throws std::runtime_error when it cannot be opened or parsed.
nlohmann::json read_json_file(const std::string& path);
/// Writes text to a file; throws std::runtime_error on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace translin
