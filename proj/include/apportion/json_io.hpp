#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "apportion/biprop.hpp"
#include "apportion/election.hpp"
#include "apportion/generators.hpp"

namespace apportion {

// Instance plus the party names used on disk; the core types only track
// party indices.
struct ElectionFile {
  ElectionInstance instance;
  std::vector<std::string> party_names;
};

std::vector<std::string> default_party_names(int n);

// Strict parsers: unknown fields, missing fields, wrong JSON types, unknown
// party names and malformed rationals all throw std::invalid_argument.
// Votes travel as strings to keep them exact.
nlohmann::json election_to_json(const ElectionFile& f);
ElectionFile election_from_json(const nlohmann::json& j);

// CSV body with header id,party,type,votes plus a config document carrying
// house, parties and the optional tie_break.
ElectionFile election_from_csv(const std::string& csv,
                               const nlohmann::json& config);

nlohmann::json two_dim_to_json(const TwoDimInstance& T);
TwoDimInstance two_dim_from_json(const nlohmann::json& j);

// Sidecar document with the solution and fair share a generated hard
// instance is designed to have.
nlohmann::json expectations_to_json(const HardInstance& H);

}  // namespace apportion
