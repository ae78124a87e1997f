#include "clic/bob.hpp"

#include <stdexcept>

namespace clic {

void BobPolicy::validate(const EnvSpec& spec) const {
  if (mode == BobMode::RandomSubset) {
    if (subset.empty())
      throw std::invalid_argument("random-subset policy needs a non-empty subset");
    for (int id : subset)
      spec.object(id);  // range check
  }
  if (mastery_threshold <= 0.0 || mastery_threshold > 1.0)
    throw std::invalid_argument("mastery threshold must lie in (0, 1]");
}

std::optional<Action> greedy_action(const EnvSpec& spec, const EnvState& state,
                                    int target_object, int target_value) {
  const ObjectSpec& obj = spec.object(target_object);
  if (target_value < 1 || target_value > obj.num_stages())
    throw std::invalid_argument("target value out of range for object " +
                                std::to_string(target_object));
  int stage = object_state(state, target_object);
  if (stage >= target_value) return std::nullopt;
  Cell goal = obj.positions[static_cast<std::size_t>(stage)];
  Cell pos = state.actor_pos;
  if (pos == goal) return Action::Act;
  if (pos.x != goal.x) return pos.x < goal.x ? Action::Right : Action::Left;
  return pos.y < goal.y ? Action::Down : Action::Up;
}

int mentor_select_object(const std::vector<double>& competences,
                         double threshold) {
  for (std::size_t i = 0; i < competences.size(); ++i)
    if (competences[i] < threshold) return static_cast<int>(i) + 1;
  return static_cast<int>(competences.size());
}

DemoTrajectory run_trajectory(const EnvSpec& spec, int target_object,
                              int target_value, int timeout, Rng& rng) {
  DemoTrajectory traj;
  traj.target_object = target_object;
  EnvState state = reset(spec);
  StickyActuator sticky(spec.sticky_prob);
  for (int t = 0; t < timeout; ++t) {
    auto intended = greedy_action(spec, state, target_object, target_value);
    if (!intended) break;
    Action executed = sticky.apply(*intended, rng);
    EnvState next = step(spec, state, executed, Actor::Bob);
    traj.steps.push_back({state, executed, std::move(state)});
    traj.steps.back().next = next;
    state = std::move(next);
  }
  return traj;
}

DemoBatch run_demonstrations(const EnvSpec& spec, const BobPolicy& policy,
                             const std::vector<double>& competences, int d,
                             Rng& rng, int timeout) {
  policy.validate(spec);
  if (d < 1) throw std::invalid_argument("demonstration count must be >= 1");
  DemoBatch batch;
  if (policy.mode == BobMode::Idle) return batch;
  if (policy.mode == BobMode::Mentor &&
      static_cast<int>(competences.size()) != spec.num_objects())
    throw std::invalid_argument("mentor mode needs one competence per object");

  batch.trajectories.reserve(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    int target;
    if (policy.mode == BobMode::Mentor) {
      target = mentor_select_object(competences, policy.mastery_threshold);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, policy.subset.size() - 1);
      target = policy.subset[pick(rng)];
    }
    int full_state = spec.object(target).num_stages();
    batch.trajectories.push_back(
        run_trajectory(spec, target, full_state, timeout, rng));
  }
  return batch;
}

}  // namespace clic
