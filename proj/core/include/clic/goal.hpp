#pragma once

#include "clic/env.hpp"

namespace clic {

/// A control goal: drive one object's internal state to `value`. The
/// feature weighting is a one-hot selection of that object's state slot,
/// so the reward ignores every other feature.
struct GoalSpec {
  int object = 0;  // 1-based
  int value = 0;   // 0..l_object
  bool operator==(const GoalSpec&) const = default;
};

/// Throws std::invalid_argument when the goal does not fit the spec.
void validate_goal(const EnvSpec& spec, const GoalSpec& goal);

/// 0 when the selected object's state equals the goal value, -1 otherwise.
/// States are integers, so the match is exact.
inline int self_reward(const EnvState& state, const GoalSpec& goal) {
  return state.object_stage[static_cast<std::size_t>(goal.object - 1)] ==
                 goal.value
             ? 0
             : -1;
}

}  // namespace clic
