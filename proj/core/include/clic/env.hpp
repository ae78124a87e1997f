#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace clic {

using Rng = std::mt19937_64;

/// The five discrete actions, in their fixed enumeration order.
enum class Action : int { Right = 0, Left = 1, Up = 2, Down = 3, Act = 4 };

inline constexpr int kNumActions = 5;
inline constexpr std::array<Action, kNumActions> kAllActions = {
    Action::Right, Action::Left, Action::Up, Action::Down, Action::Act};

const char* to_string(Action a);

/// Which of the two actors is taking a step. Object controllability is
/// gated per actor.
enum class Actor { Agent, Bob };

/// Grid cell. x is the column (Right increments x), y is the row
/// (Up decrements y).
struct Cell {
  int x = 0;
  int y = 0;
  bool operator==(const Cell&) const = default;
};

/// An object is an ordered list of via-point cells. Its internal state
/// counts how many via-points have been activated in order.
struct ObjectSpec {
  int id = 0;  // 1-based index
  std::vector<Cell> positions;
  bool controllable_by_agent = true;
  bool controllable_by_bob = true;

  int num_stages() const { return static_cast<int>(positions.size()); }
};

struct EnvSpec {
  int grid_size = 11;
  std::vector<ObjectSpec> objects;
  double sticky_prob = 0.25;

  int num_objects() const { return static_cast<int>(objects.size()); }
  /// 1-based object access; throws std::out_of_range on a bad index.
  const ObjectSpec& object(int index) const;
  bool contains(Cell c) const;
  Cell center() const;
  int num_agent_controllable() const;
  /// Throws std::invalid_argument if any structural invariant is violated.
  void validate() const;
};

/// Position of whichever actor is running the current episode, plus the
/// internal state of every object.
struct EnvState {
  Cell actor_pos;
  std::vector<int> object_stage;
  bool operator==(const EnvState&) const = default;
};

/// Fresh episode state: actor at the grid center, every object at stage 0.
EnvState reset(const EnvSpec& spec);

/// Deterministic transition. Movement actions translate the actor by one
/// cell and clamp at the borders. Act advances every object whose
/// controllability flag matches `actor`, whose stage is not yet complete,
/// and whose next via-point is the current cell. Sticky-action noise is
/// not applied here; see StickyActuator.
EnvState step(const EnvSpec& spec, const EnvState& state, Action action,
              Actor actor);

/// o_i for the 1-based object index; throws std::out_of_range.
int object_state(const EnvState& state, int object_index);

/// Returns `last` with probability sticky_prob when a previous action
/// exists, otherwise the intended action.
Action apply_sticky(Action intended, std::optional<Action> last,
                    double sticky_prob, Rng& rng);

/// Per-episode actuator wrapper for the sticky-action mechanism. The same
/// wrapper is used for both actors; call begin_episode() whenever an
/// episode or demonstration trajectory starts.
class StickyActuator {
 public:
  explicit StickyActuator(double sticky_prob) : sticky_prob_(sticky_prob) {}

  void begin_episode() { last_.reset(); }

  /// Resolves the action actually executed and remembers it.
  Action apply(Action intended, Rng& rng) {
    Action executed = apply_sticky(intended, last_, sticky_prob_, rng);
    last_ = executed;
    return executed;
  }

  std::optional<Action> last() const { return last_; }

 private:
  double sticky_prob_;
  std::optional<Action> last_;
};

}  // namespace clic
