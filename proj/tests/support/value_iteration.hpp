#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "icnsim/mdp.hpp"
#include "icnsim/topology.hpp"

namespace icnsim::testsupport {

// Exact dynamic-programming solution of the forwarding MDP with the content
// fixed at the producer. Deliberately independent of the library's learner:
// it reads only the topology and the reward configuration, so it can serve
// as an oracle for the sampled training path.
struct ExactSolution {
  std::vector<std::vector<double>> q;  // [router - 1][action], one entry per neighbor

  int argmax(RouterId s) const {
    const auto& row = q[static_cast<size_t>(s - 1)];
    int best = 0;
    for (size_t k = 1; k < row.size(); ++k) {
      if (row[k] > row[static_cast<size_t>(best)]) {
        best = static_cast<int>(k);
      }
    }
    return best;
  }
};

inline ExactSolution value_iteration(const Topology& topo, RouterId producer,
                                     const RewardConfig& rewards, double gamma,
                                     double tol = 1e-9) {
  const int n = topo.size();
  ExactSolution sol;
  sol.q.resize(static_cast<size_t>(n));
  for (RouterId r = 1; r <= n; ++r) {
    sol.q[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(topo.degree(r)), 0.0);
  }
  double delta = tol + 1.0;
  while (delta > tol) {
    delta = 0.0;
    for (RouterId r = 1; r <= n; ++r) {
      const auto& nbrs = topo.neighbors(r);
      for (size_t k = 0; k < nbrs.size(); ++k) {
        const RouterId next = nbrs[k];
        double target = rewards.goal;
        if (next != producer) {
          const auto& next_row = sol.q[static_cast<size_t>(next - 1)];
          target = rewards.step + gamma * *std::max_element(next_row.begin(), next_row.end());
        }
        double& cell = sol.q[static_cast<size_t>(r - 1)][k];
        delta = std::max(delta, std::abs(target - cell));
        cell = target;
      }
    }
  }
  return sol;
}

// Greedy rollout of the exact solution; returns the hop count from `start`
// to the producer, or nullopt if n steps elapse without arriving.
inline std::optional<int> exact_rollout_stretch(const ExactSolution& sol, const Topology& topo,
                                                RouterId start, RouterId producer) {
  RouterId cur = start;
  for (int hops = 1; hops <= topo.size(); ++hops) {
    cur = topo.neighbors(cur)[static_cast<size_t>(sol.argmax(cur))];
    if (cur == producer) {
      return hops;
    }
  }
  return std::nullopt;
}

}  // namespace icnsim::testsupport
