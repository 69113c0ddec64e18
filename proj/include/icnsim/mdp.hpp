#pragma once

#include <optional>
#include <vector>

#include "icnsim/icn.hpp"

namespace icnsim {

struct InvalidAction : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EpisodeFinished : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPositiveArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The router currently holding the interest. The state carries no history:
// transitions depend on (state, action) and static configuration only.
struct State {
  RouterId router = 0;

  bool operator==(const State&) const = default;
};

// Index into the current router's ascending neighbor list. Action k is valid
// iff k < degree(router); invalid actions are masked at selection and never
// stepped.
struct Action {
  int index = 0;

  bool operator==(const Action&) const = default;
};

// Reward shaping: a small cost per hop, a large terminal bonus on a content
// store hit, and a large penalty when the hop budget runs out. Cumulative
// episode reward is then strictly decreasing in stretch, so the greedy
// optimum is the minimum-hop path.
struct RewardConfig {
  double step = -1.0;
  double goal = 100.0;
  double fail = -100.0;
};

struct Transition {
  State state;
  Action action;
  double reward = 0.0;
  State next_state;
  bool terminal = false;
};

struct EnvConfig {
  RouterId consumer = 9;
  RouterId producer = 1;
  ContentName requested = "c1";
  std::vector<ContentName> catalog = {"c1", "c2", "c3"};
  RewardConfig rewards;
  int hop_budget = 0;  // 0 -> 2 * router count
  bool on_path_caching = false;
};

// Minimum number of selectable next hops. Topologies with higher-degree
// routers widen the action space so that every neighbor stays addressable.
inline constexpr int kMinActionSpace = 5;

// Interest-forwarding MDP over a router topology: states are routers, action
// k forwards the interest to the k-th neighbor, a content store hit ends the
// episode with the goal reward, and exhausting the hop budget ends it with
// the fail penalty.
class Environment {
public:
  explicit Environment(Topology topo, EnvConfig cfg = {});
  Environment(const Environment&) = delete;
  Environment& operator=(const Environment&) = delete;

  // Clears all pending-interest state and issues a fresh interest at the
  // consumer-attached router. Content stores are left alone, so on-path
  // cached copies persist across episodes.
  State reset();

  // Mask of length action_space(); entry k is true iff the state's router
  // has a k-th neighbor. At least one entry is true (the graph is connected).
  std::vector<bool> valid_actions(const State& s) const;

  // Forwards the interest one hop. Requires a live episode and an action
  // valid for the current state.
  Transition step(const Action& a);

  // True until the first reset, then true iff the last transition ended the
  // episode.
  bool is_terminal() const { return terminal_; }

  int action_space() const { return action_space_; }
  int hop_budget() const { return hop_budget_; }
  const Topology& topology() const { return topo_; }
  const Network& network() const { return net_; }
  const EnvConfig& config() const { return cfg_; }

  State current_state() const;

  // Neighbor reached by taking `a` in `s`; pure lookup, no stepping.
  RouterId action_target(const State& s, const Action& a) const;

  // True iff the requested content is cached at `r`.
  bool content_at(RouterId r) const { return net_.cs_hit(r, cfg_.requested); }

  const InterestPacket& packet() const;
  const std::optional<DataPacket>& last_data() const { return last_data_; }

private:
  Topology topo_;
  EnvConfig cfg_;
  Network net_;
  int action_space_ = kMinActionSpace;
  int hop_budget_ = 0;
  std::optional<InterestPacket> packet_;
  std::optional<DataPacket> last_data_;
  bool terminal_ = true;  // not yet reset counts as terminal
};

// Stretch/reward conversion, each the reciprocal of the other; the two
// compose to the identity on positive values.
double stretch_from_reward(double reward);
double reward_from_stretch(double stretch);

}  // namespace icnsim
