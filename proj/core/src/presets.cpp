#include "clic/presets.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace clic {

namespace {

// Six 3-stage objects in disjoint regions around the center (5,5). Each
// first via-point sits at Manhattan distance 3 from the center and
// consecutive via-points are adjacent, so the optimal cost of setting any
// object to stage k is the same 2k+2 actions.
EnvSpec independent_layout() {
  EnvSpec spec;
  spec.grid_size = 11;
  spec.sticky_prob = 0.25;
  const std::vector<std::vector<Cell>> lists = {
      {{5, 2}, {5, 1}, {5, 0}},    // north
      {{6, 3}, {7, 3}, {7, 2}},    // north-east
      {{8, 5}, {9, 5}, {10, 5}},   // east
      {{6, 7}, {7, 7}, {7, 8}},    // south-east
      {{5, 8}, {5, 9}, {5, 10}},   // south
      {{4, 7}, {3, 7}, {3, 8}},    // south-west
  };
  for (std::size_t i = 0; i < lists.size(); ++i) {
    ObjectSpec o;
    o.id = static_cast<int>(i) + 1;
    o.positions = lists[i];
    o.controllable_by_agent = true;
    o.controllable_by_bob = true;
    spec.objects.push_back(std::move(o));
  }
  return spec;
}

// One 6-cell path; object i owns the first i cells, so list lengths grow
// 1..6 and each list is a strict prefix of the next.
EnvSpec hierarchical_layout() {
  EnvSpec spec;
  spec.grid_size = 11;
  spec.sticky_prob = 0.25;
  const std::vector<Cell> path = {{5, 3}, {6, 3}, {6, 2}, {7, 2}, {7, 1}, {8, 1}};
  for (int i = 1; i <= 6; ++i) {
    ObjectSpec o;
    o.id = i;
    o.positions.assign(path.begin(), path.begin() + i);
    o.controllable_by_agent = true;
    o.controllable_by_bob = true;
    spec.objects.push_back(std::move(o));
  }
  return spec;
}

}  // namespace

std::optional<PresetName> parse_preset_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "e6") return PresetName::E6;
  if (lower == "e3") return PresetName::E3;
  if (lower == "e1") return PresetName::E1;
  if (lower == "eh") return PresetName::Eh;
  return std::nullopt;
}

EnvSpec build_environment(PresetName name) {
  EnvSpec spec;
  switch (name) {
    case PresetName::E6:
      spec = independent_layout();
      break;
    case PresetName::E3:
      spec = independent_layout();
      for (auto& o : spec.objects) o.controllable_by_agent = o.id <= 3;
      break;
    case PresetName::E1:
      spec = independent_layout();
      for (auto& o : spec.objects) o.controllable_by_agent = o.id <= 1;
      break;
    case PresetName::Eh:
      spec = hierarchical_layout();
      break;
  }
  spec.validate();
  return spec;
}

EnvSpec build_environment(const std::string& name) {
  auto parsed = parse_preset_name(name);
  if (!parsed)
    throw std::invalid_argument("unknown environment preset: " + name);
  return build_environment(*parsed);
}

}  // namespace clic
