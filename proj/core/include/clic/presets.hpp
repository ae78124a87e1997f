#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "clic/env.hpp"

namespace clic {

/// The four built-in 11x11 environments. E6 has six independent objects of
/// equal difficulty, all controllable by the agent. E3 and E1 share E6's
/// layout with respectively three and one agent-controllable object. Eh has
/// six objects whose via-point lists form a strict prefix chain.
enum class PresetName { E6, E3, E1, Eh };

/// Case-insensitive parse of "e6", "e3", "e1", "eh".
std::optional<PresetName> parse_preset_name(std::string_view name);

EnvSpec build_environment(PresetName name);

/// Throws std::invalid_argument on an unknown preset name.
EnvSpec build_environment(const std::string& name);

}  // namespace clic
