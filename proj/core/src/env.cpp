#include "clic/env.hpp"

#include <stdexcept>

namespace clic {

const char* to_string(Action a) {
  switch (a) {
    case Action::Right: return "right";
    case Action::Left: return "left";
    case Action::Up: return "up";
    case Action::Down: return "down";
    case Action::Act: return "act";
  }
  return "?";
}

const ObjectSpec& EnvSpec::object(int index) const {
  if (index < 1 || index > num_objects())
    throw std::out_of_range("object index " + std::to_string(index) +
                            " out of range [1, " +
                            std::to_string(num_objects()) + "]");
  return objects[static_cast<std::size_t>(index - 1)];
}

bool EnvSpec::contains(Cell c) const {
  return c.x >= 0 && c.x < grid_size && c.y >= 0 && c.y < grid_size;
}

Cell EnvSpec::center() const { return {(grid_size - 1) / 2, (grid_size - 1) / 2}; }

int EnvSpec::num_agent_controllable() const {
  int n = 0;
  for (const auto& o : objects) n += o.controllable_by_agent ? 1 : 0;
  return n;
}

void EnvSpec::validate() const {
  if (grid_size < 1) throw std::invalid_argument("grid_size must be >= 1");
  if (sticky_prob < 0.0 || sticky_prob > 1.0)
    throw std::invalid_argument("sticky_prob must lie in [0, 1]");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto& o = objects[i];
    if (o.id != static_cast<int>(i) + 1)
      throw std::invalid_argument("object ids must be 1-based and consecutive");
    if (o.positions.empty())
      throw std::invalid_argument("object " + std::to_string(o.id) +
                                  " has an empty position list");
    for (Cell c : o.positions)
      if (!contains(c))
        throw std::invalid_argument("object " + std::to_string(o.id) +
                                    " has a via-point outside the grid");
  }
}

EnvState reset(const EnvSpec& spec) {
  EnvState s;
  s.actor_pos = spec.center();
  s.object_stage.assign(static_cast<std::size_t>(spec.num_objects()), 0);
  return s;
}

namespace {

Cell moved(const EnvSpec& spec, Cell c, Action a) {
  Cell out = c;
  switch (a) {
    case Action::Right: out.x += 1; break;
    case Action::Left: out.x -= 1; break;
    case Action::Up: out.y -= 1; break;
    case Action::Down: out.y += 1; break;
    case Action::Act: break;
  }
  if (!spec.contains(out)) return c;  // clamp at borders
  return out;
}

bool controls(const ObjectSpec& o, Actor actor) {
  return actor == Actor::Agent ? o.controllable_by_agent
                               : o.controllable_by_bob;
}

}  // namespace

EnvState step(const EnvSpec& spec, const EnvState& state, Action action,
              Actor actor) {
  EnvState next = state;
  if (action != Action::Act) {
    next.actor_pos = moved(spec, state.actor_pos, action);
    return next;
  }
  for (int i = 0; i < spec.num_objects(); ++i) {
    const auto& obj = spec.objects[static_cast<std::size_t>(i)];
    int stage = state.object_stage[static_cast<std::size_t>(i)];
    if (!controls(obj, actor)) continue;
    if (stage >= obj.num_stages()) continue;
    if (obj.positions[static_cast<std::size_t>(stage)] == state.actor_pos)
      next.object_stage[static_cast<std::size_t>(i)] = stage + 1;
  }
  return next;
}

int object_state(const EnvState& state, int object_index) {
  if (object_index < 1 ||
      object_index > static_cast<int>(state.object_stage.size()))
    throw std::out_of_range("object index " + std::to_string(object_index) +
                            " out of range");
  return state.object_stage[static_cast<std::size_t>(object_index - 1)];
}

Action apply_sticky(Action intended, std::optional<Action> last,
                    double sticky_prob, Rng& rng) {
  if (!last.has_value()) return intended;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return unit(rng) < sticky_prob ? *last : intended;
}

}  // namespace clic
