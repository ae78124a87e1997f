#pragma once

#include <optional>

#include "clic/env.hpp"
#include "clic/goal.hpp"

namespace clic {

/// Minimum number of actions the given actor needs from the reset state to
/// bring the object to `target_value`, found by BFS over the deterministic
/// (position x stage) product space. Returns nullopt when the target is
/// unreachable (e.g. the object is not controllable by the actor).
std::optional<int> optimal_steps(const EnvSpec& spec, int object_index,
                                 int target_value, Actor actor = Actor::Bob);

struct TabularResult {
  double success_rate = 0.0;  // greedy-policy success over the eval episodes
  int greedy_steps = -1;      // steps of the first successful greedy episode
  int eval_episodes = 0;
};

/// Reference learner with exact state-indexed Q-values and the same reward,
/// softmax exploration and episode rules as the neural agent. Guards
/// against state spaces above one million entries.
TabularResult tabular_reference_run(const EnvSpec& spec, const GoalSpec& goal,
                                    int episodes, unsigned long seed);

}  // namespace clic
