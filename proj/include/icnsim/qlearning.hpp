#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "icnsim/mdp.hpp"
#include "icnsim/rng.hpp"

namespace icnsim {

struct Hyperparams {
  double alpha = 0.5;    // learning rate, (0, 1]
  double gamma = 0.5;    // discount factor, [0, 1)
  double epsilon = 0.5;  // exploration probability, [0, 1]
};

// Throws std::invalid_argument when a hyperparameter is out of range.
void validate(const Hyperparams& hp);

// Dense state x action value table with a validity mask mirroring the
// environment's action masks. Valid cells start at zero; invalid cells are
// never written and never enter max/argmax.
class QTable {
public:
  QTable() = default;
  explicit QTable(const Environment& env);

  int states() const { return n_; }
  int actions() const { return k_; }

  bool valid(RouterId s, const Action& a) const;
  double value(RouterId s, const Action& a) const;

  // Throws InvalidAction when the cell is masked.
  void set_value(RouterId s, const Action& a, double v);

  // Max over the valid actions of state `s`.
  double max_value(RouterId s) const;

  // Valid argmax of state `s`; ties break to the lowest action index.
  Action argmax(RouterId s) const;

private:
  int n_ = 0;
  int k_ = 0;
  std::vector<double> values_;
  std::vector<char> valid_;

  size_t cell(RouterId s, const Action& a) const;
};

// Per-state greedy choice frozen out of a Q table.
struct PolicySnapshot {
  std::vector<Action> actions;  // indexed by router id - 1

  const Action& at(RouterId s) const { return actions.at(static_cast<size_t>(s - 1)); }
};

// Epsilon-greedy selection: with probability epsilon a uniformly random valid
// action, otherwise the valid argmax. Always consumes one uniform01 draw,
// plus one integer draw on the exploration branch, so the stream stays
// aligned for replay.
Action select_action(const QTable& q, const State& s, const Hyperparams& hp, Rng& rng);

// One-step Q-learning backup on the transition's (state, action) cell:
//   Q <- (1 - alpha) * Q + alpha * (reward + gamma * max_next)
// with max_next = 0 on terminal transitions. No other cell changes.
void update(QTable& q, const Transition& t, const Hyperparams& hp);

PolicySnapshot greedy_policy(const QTable& q);

// Rolls the greedy policy from the consumer router without mutating the
// environment. Returns the trace on a content hit, or nullopt when
// topology-size steps elapse without one (the policy cycles).
std::optional<PathTrace> greedy_path(const PolicySnapshot& policy, const Environment& env);

// Stretch of a rollout, +infinity when the rollout looped.
inline double rollout_stretch(const std::optional<PathTrace>& rollout) {
  return rollout ? static_cast<double>(rollout->stretch())
                 : std::numeric_limits<double>::infinity();
}

inline constexpr int kDefaultConvergenceWindow = 25;

// True iff the trailing `window` entries of the greedy-stretch history all
// equal the oracle stretch.
bool has_converged(std::span<const double> greedy_stretch_history, int window,
                   int oracle_stretch);

}  // namespace icnsim
