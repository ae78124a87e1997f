#include "clic/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

namespace clic {

std::optional<int> optimal_steps(const EnvSpec& spec, int object_index,
                                 int target_value, Actor actor) {
  const ObjectSpec& obj = spec.object(object_index);
  if (target_value < 0 || target_value > obj.num_stages())
    throw std::invalid_argument("target value out of range for object " +
                                std::to_string(object_index));
  if (target_value == 0) return 0;

  const int n = spec.grid_size;
  const int stages = target_value + 1;
  const auto node_id = [&](Cell c, int stage) {
    return (stage * n + c.y) * n + c.x;
  };
  std::vector<int> dist(static_cast<std::size_t>(n * n * stages), -1);

  Cell start = spec.center();
  std::deque<std::pair<Cell, int>> queue;
  dist[static_cast<std::size_t>(node_id(start, 0))] = 0;
  queue.emplace_back(start, 0);

  const bool controllable = actor == Actor::Agent ? obj.controllable_by_agent
                                                  : obj.controllable_by_bob;

  while (!queue.empty()) {
    auto [pos, stage] = queue.front();
    queue.pop_front();
    int d = dist[static_cast<std::size_t>(node_id(pos, stage))];
    for (Action a : kAllActions) {
      Cell next_pos = pos;
      int next_stage = stage;
      if (a == Action::Act) {
        if (controllable && stage < target_value &&
            obj.positions[static_cast<std::size_t>(stage)] == pos)
          next_stage = stage + 1;
      } else {
        switch (a) {
          case Action::Right: next_pos.x += 1; break;
          case Action::Left: next_pos.x -= 1; break;
          case Action::Up: next_pos.y -= 1; break;
          case Action::Down: next_pos.y += 1; break;
          default: break;
        }
        if (!spec.contains(next_pos)) next_pos = pos;
      }
      if (next_stage == target_value) return d + 1;
      int id = node_id(next_pos, next_stage);
      if (dist[static_cast<std::size_t>(id)] < 0) {
        dist[static_cast<std::size_t>(id)] = d + 1;
        queue.emplace_back(next_pos, next_stage);
      }
    }
  }
  return std::nullopt;
}

namespace {

// Dense index over (x, y, o_1, ..., o_n).
struct StateIndexer {
  int grid_size = 0;
  std::vector<int> stage_counts;  // l_i + 1 per object
  std::size_t total = 0;

  explicit StateIndexer(const EnvSpec& spec) : grid_size(spec.grid_size) {
    total = static_cast<std::size_t>(grid_size) * grid_size;
    for (const auto& o : spec.objects) {
      stage_counts.push_back(o.num_stages() + 1);
      total *= static_cast<std::size_t>(o.num_stages() + 1);
    }
  }

  std::size_t index(const EnvState& s) const {
    std::size_t id = static_cast<std::size_t>(s.actor_pos.y) *
                         static_cast<std::size_t>(grid_size) +
                     static_cast<std::size_t>(s.actor_pos.x);
    for (std::size_t i = 0; i < stage_counts.size(); ++i)
      id = id * static_cast<std::size_t>(stage_counts[i]) +
           static_cast<std::size_t>(s.object_stage[i]);
    return id;
  }
};

int softmax_pick(const double* q, double temperature, Rng& rng) {
  double max_q = q[0];
  for (int a = 1; a < kNumActions; ++a) max_q = std::max(max_q, q[a]);
  double weights[kNumActions];
  double total = 0.0;
  for (int a = 0; a < kNumActions; ++a) {
    weights[a] = std::exp((q[a] - max_q) / temperature);
    total += weights[a];
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double u = unit(rng) * total;
  double acc = 0.0;
  for (int a = 0; a < kNumActions; ++a) {
    acc += weights[a];
    if (u < acc) return a;
  }
  return kNumActions - 1;
}

int greedy_pick(const double* q) {
  int best = 0;
  for (int a = 1; a < kNumActions; ++a)
    if (q[a] > q[best]) best = a;
  return best;
}

}  // namespace

TabularResult tabular_reference_run(const EnvSpec& spec, const GoalSpec& goal,
                                    int episodes, unsigned long seed) {
  validate_goal(spec, goal);
  StateIndexer indexer(spec);
  if (indexer.total > 1000000)
    throw std::runtime_error("state space too large for the tabular oracle (" +
                             std::to_string(indexer.total) + " states)");

  const double alpha = 0.5;
  const double gamma = 0.9;
  const double temperature = 1.0;
  const int timeout = 200;

  std::vector<double> q(indexer.total * kNumActions, 0.0);
  Rng rng(seed);

  for (int ep = 0; ep < episodes; ++ep) {
    EnvState s = reset(spec);
    StickyActuator sticky(spec.sticky_prob);
    if (self_reward(s, goal) == 0) continue;  // satisfied at reset
    for (int t = 0; t < timeout; ++t) {
      std::size_t si = indexer.index(s);
      int a = softmax_pick(&q[si * kNumActions], temperature, rng);
      Action executed = sticky.apply(static_cast<Action>(a), rng);
      EnvState s2 = step(spec, s, executed, Actor::Agent);
      int r = self_reward(s2, goal);
      std::size_t si2 = indexer.index(s2);
      double bootstrap = 0.0;
      if (r != 0) {
        const double* row = &q[si2 * kNumActions];
        bootstrap = row[greedy_pick(row)];
      }
      double& value = q[si * kNumActions + static_cast<std::size_t>(a)];
      value += alpha * (r + gamma * bootstrap - value);
      if (r == 0) break;
      s = std::move(s2);
    }
  }

  TabularResult result;
  result.eval_episodes = 100;
  int successes = 0;
  for (int ep = 0; ep < result.eval_episodes; ++ep) {
    EnvState s = reset(spec);
    StickyActuator sticky(spec.sticky_prob);
    if (self_reward(s, goal) == 0) {
      ++successes;
      if (result.greedy_steps < 0) result.greedy_steps = 0;
      continue;
    }
    for (int t = 0; t < timeout; ++t) {
      std::size_t si = indexer.index(s);
      int a = greedy_pick(&q[si * kNumActions]);
      Action executed = sticky.apply(static_cast<Action>(a), rng);
      s = step(spec, s, executed, Actor::Agent);
      if (self_reward(s, goal) == 0) {
        ++successes;
        if (result.greedy_steps < 0) result.greedy_steps = t + 1;
        break;
      }
    }
  }
  result.success_rate =
      static_cast<double>(successes) / result.eval_episodes;
  return result;
}

}  // namespace clic
