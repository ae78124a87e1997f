#pragma once

#include <string>

#include "clic/env.hpp"

namespace clic {

/// JSON description of an EnvSpec so custom environments can be defined
/// without recompiling:
///   {
///     "grid_size": 11,
///     "sticky_prob": 0.25,
///     "objects": [
///       {"id": 1, "positions": [[5,2],[5,1],[5,0]],
///        "controllable_by_agent": true, "controllable_by_bob": true},
///       ...
///     ]
///   }
std::string env_spec_to_json(const EnvSpec& spec);

/// Parses and validates; throws std::invalid_argument on bad content.
EnvSpec env_spec_from_json(const std::string& text);

EnvSpec load_env_spec(const std::string& path);
void save_env_spec(const EnvSpec& spec, const std::string& path);

}  // namespace clic
