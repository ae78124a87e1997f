#include "clic/goal.hpp"

#include <stdexcept>

namespace clic {

void validate_goal(const EnvSpec& spec, const GoalSpec& goal) {
  if (goal.object < 1 || goal.object > spec.num_objects())
    throw std::invalid_argument("goal object index " +
                                std::to_string(goal.object) + " out of range");
  int stages = spec.object(goal.object).num_stages();
  if (goal.value < 0 || goal.value > stages)
    throw std::invalid_argument("goal value " + std::to_string(goal.value) +
                                " out of range [0, " + std::to_string(stages) +
                                "]");
}

}  // namespace clic
