#pragma once

#include <optional>
#include <vector>

#include "clic/env.hpp"

namespace clic {

enum class BobMode { Idle, RandomSubset, Mentor };

struct BobPolicy {
  BobMode mode = BobMode::Idle;
  /// 1-based object indices Bob samples from in RandomSubset mode.
  std::vector<int> subset;
  /// Mentor mode: Bob teaches the lowest-indexed object whose competence
  /// is still below this threshold.
  double mastery_threshold = 0.9;

  void validate(const EnvSpec& spec) const;
};

/// One observed transition of Bob. `action` is the action actually
/// executed (after sticky-action resolution) so the recorded trajectory
/// replays deterministically.
struct DemoStep {
  EnvState state;
  Action action;
  EnvState next;
};

struct DemoTrajectory {
  int target_object = 0;
  std::vector<DemoStep> steps;
};

struct DemoBatch {
  std::vector<DemoTrajectory> trajectories;
  bool empty() const { return trajectories.empty(); }
};

/// Closed-loop controller: one action toward setting the object to
/// `target_value`. Returns nullopt once the object already is at or past
/// the target. Otherwise Act when standing on the next via-point, else the
/// move that reduces Manhattan distance to it, horizontal axis first.
std::optional<Action> greedy_action(const EnvSpec& spec, const EnvState& state,
                                    int target_object, int target_value);

/// Lowest-indexed object with competence below the threshold; the
/// highest-indexed object when every competence meets it.
int mentor_select_object(const std::vector<double>& competences,
                         double threshold);

/// One full trajectory from reset toward object completion, with
/// sticky-action noise and replanning each step. Stops at completion or
/// after `timeout` steps.
DemoTrajectory run_trajectory(const EnvSpec& spec, int target_object,
                              int target_value, int timeout, Rng& rng);

/// Bob's d trajectories. Per-trajectory targets follow the policy mode;
/// the target value is always the object's full internal state. Idle mode
/// yields an empty batch.
DemoBatch run_demonstrations(const EnvSpec& spec, const BobPolicy& policy,
                             const std::vector<double>& competences, int d,
                             Rng& rng, int timeout = 200);

}  // namespace clic
