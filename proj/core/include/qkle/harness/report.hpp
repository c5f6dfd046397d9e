#pragma once

#include <nlohmann/json.hpp>

#include "qkle/classical.hpp"
#include "qkle/harness/config.hpp"
#include "qkle/offline_simon.hpp"

namespace qkle::harness {

nlohmann::json to_json(const attack::AttackReport& report);
nlohmann::json to_json(const classical::ClassicalReport& report);
nlohmann::json to_json(const ExperimentConfig& config);

// Two-space indented, keys sorted, trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace qkle::harness
