#include "icnsim/qlearning.hpp"

#include <stdexcept>
#include <string>

namespace icnsim {

void validate(const Hyperparams& hp) {
  if (!(hp.alpha > 0.0 && hp.alpha <= 1.0)) {
    throw std::invalid_argument("alpha must be in (0, 1]");
  }
  if (!(hp.gamma >= 0.0 && hp.gamma < 1.0)) {
    throw std::invalid_argument("gamma must be in [0, 1)");
  }
  if (!(hp.epsilon >= 0.0 && hp.epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must be in [0, 1]");
  }
}

QTable::QTable(const Environment& env)
    : n_(env.topology().size()), k_(env.action_space()) {
  values_.assign(static_cast<size_t>(n_) * static_cast<size_t>(k_), 0.0);
  valid_.assign(values_.size(), 0);
  for (RouterId s = 1; s <= n_; ++s) {
    const auto mask = env.valid_actions(State{s});
    for (int k = 0; k < k_; ++k) {
      valid_[cell(s, Action{k})] = mask[static_cast<size_t>(k)] ? 1 : 0;
    }
  }
}

size_t QTable::cell(RouterId s, const Action& a) const {
  if (s < 1 || s > n_ || a.index < 0 || a.index >= k_) {
    throw InvalidAction("cell (" + std::to_string(s) + ", " + std::to_string(a.index) +
                        ") outside a " + std::to_string(n_) + "x" + std::to_string(k_) +
                        " table");
  }
  return static_cast<size_t>(s - 1) * static_cast<size_t>(k_) + static_cast<size_t>(a.index);
}

bool QTable::valid(RouterId s, const Action& a) const {
  return valid_[cell(s, a)] != 0;
}

double QTable::value(RouterId s, const Action& a) const {
  return values_[cell(s, a)];
}

void QTable::set_value(RouterId s, const Action& a, double v) {
  const size_t c = cell(s, a);
  if (!valid_[c]) {
    throw InvalidAction("action " + std::to_string(a.index) + " masked in state " +
                        std::to_string(s));
  }
  values_[c] = v;
}

double QTable::max_value(RouterId s) const {
  return value(s, argmax(s));
}

Action QTable::argmax(RouterId s) const {
  int best = -1;
  double best_value = 0.0;
  for (int k = 0; k < k_; ++k) {
    const Action a{k};
    if (!valid(s, a)) {
      continue;
    }
    const double v = value(s, a);
    if (best < 0 || v > best_value) {
      best = k;
      best_value = v;
    }
  }
  if (best < 0) {
    throw std::logic_error("no valid action in state " + std::to_string(s));
  }
  return Action{best};
}

Action select_action(const QTable& q, const State& s, const Hyperparams& hp, Rng& rng) {
  std::vector<int> valid;
  valid.reserve(static_cast<size_t>(q.actions()));
  for (int k = 0; k < q.actions(); ++k) {
    if (q.valid(s.router, Action{k})) {
      valid.push_back(k);
    }
  }
  if (valid.empty()) {
    throw std::logic_error("no valid action in state " + std::to_string(s.router));
  }
  if (rng.uniform01() < hp.epsilon) {
    return Action{valid[static_cast<size_t>(rng.uniform_int(static_cast<int>(valid.size())))]};
  }
  return q.argmax(s.router);
}

void update(QTable& q, const Transition& t, const Hyperparams& hp) {
  if (!q.valid(t.state.router, t.action)) {
    throw InvalidAction("transition action " + std::to_string(t.action.index) +
                        " masked in state " + std::to_string(t.state.router));
  }
  const double max_next = t.terminal ? 0.0 : q.max_value(t.next_state.router);
  const double target = t.reward + hp.gamma * max_next;
  const double old = q.value(t.state.router, t.action);
  q.set_value(t.state.router, t.action, (1.0 - hp.alpha) * old + hp.alpha * target);
}

PolicySnapshot greedy_policy(const QTable& q) {
  PolicySnapshot policy;
  policy.actions.reserve(static_cast<size_t>(q.states()));
  for (RouterId s = 1; s <= q.states(); ++s) {
    policy.actions.push_back(q.argmax(s));
  }
  return policy;
}

std::optional<PathTrace> greedy_path(const PolicySnapshot& policy, const Environment& env) {
  RouterId cur = env.config().consumer;
  PathTrace trace{{cur}};
  const int limit = env.topology().size();
  for (int i = 0; i < limit; ++i) {
    cur = env.action_target(State{cur}, policy.at(cur));
    trace.routers.push_back(cur);
    if (env.content_at(cur)) {
      return trace;
    }
  }
  return std::nullopt;
}

bool has_converged(std::span<const double> greedy_stretch_history, int window,
                   int oracle_stretch) {
  if (window < 1) {
    throw std::invalid_argument("convergence window must be >= 1");
  }
  if (greedy_stretch_history.size() < static_cast<size_t>(window)) {
    return false;
  }
  const auto tail = greedy_stretch_history.last(static_cast<size_t>(window));
  for (const double stretch : tail) {
    if (stretch != static_cast<double>(oracle_stretch)) {
      return false;
    }
  }
  return true;
}

}  // namespace icnsim
