#include "icnsim/mdp.hpp"

#include <algorithm>
#include <string>

namespace icnsim {

Environment::Environment(Topology topo, EnvConfig cfg)
    : topo_(std::move(topo)),
      cfg_(std::move(cfg)),
      net_(topo_, cfg_.catalog, cfg_.on_path_caching) {
  if (cfg_.consumer < 1 || cfg_.consumer > topo_.size()) {
    throw UnknownRouter("consumer router " + std::to_string(cfg_.consumer) + " outside 1.." +
                        std::to_string(topo_.size()));
  }
  if (cfg_.producer < 1 || cfg_.producer > topo_.size()) {
    throw UnknownRouter("producer router " + std::to_string(cfg_.producer) + " outside 1.." +
                        std::to_string(topo_.size()));
  }
  if (cfg_.consumer == cfg_.producer) {
    throw std::invalid_argument("consumer and producer must be distinct routers");
  }
  if (std::find(cfg_.catalog.begin(), cfg_.catalog.end(), cfg_.requested) == cfg_.catalog.end()) {
    throw UnknownContent("requested content '" + cfg_.requested + "' is not in the catalog");
  }
  const auto& rw = cfg_.rewards;
  if (!(rw.goal > 0.0 && rw.step < 0.0 && rw.fail <= rw.step)) {
    throw std::invalid_argument("reward config must satisfy goal > 0 > step >= fail");
  }
  if (cfg_.hop_budget < 0) {
    throw std::invalid_argument("hop budget must be positive (or 0 for the 2n default)");
  }
  hop_budget_ = cfg_.hop_budget == 0 ? 2 * topo_.size() : cfg_.hop_budget;
  action_space_ = std::max(kMinActionSpace, topo_.max_degree());
  net_.place_content(cfg_.requested, cfg_.producer);
}

State Environment::reset() {
  net_.clear_pit();
  last_data_.reset();
  packet_ = InterestPacket{cfg_.requested, PathTrace{{cfg_.consumer}}, hop_budget_};
  terminal_ = false;
  return State{cfg_.consumer};
}

std::vector<bool> Environment::valid_actions(const State& s) const {
  const int degree = topo_.degree(s.router);
  std::vector<bool> mask(static_cast<size_t>(action_space_), false);
  for (int k = 0; k < degree; ++k) {
    mask[static_cast<size_t>(k)] = true;
  }
  return mask;
}

RouterId Environment::action_target(const State& s, const Action& a) const {
  const auto& nbrs = topo_.neighbors(s.router);
  if (a.index < 0 || a.index >= static_cast<int>(nbrs.size())) {
    throw InvalidAction("action " + std::to_string(a.index) + " invalid in state " +
                        std::to_string(s.router) + " (degree " +
                        std::to_string(nbrs.size()) + ")");
  }
  return nbrs[static_cast<size_t>(a.index)];
}

Transition Environment::step(const Action& a) {
  if (terminal_ || !packet_) {
    throw EpisodeFinished("step() without a live episode; call reset() first");
  }
  const State s{packet_->trace.routers.back()};
  const RouterId next = action_target(s, a);
  net_.forward_interest(*packet_, next);

  double reward = cfg_.rewards.step;
  if (net_.cs_hit(next, cfg_.requested)) {
    // Complete the exchange: the data packet walks the PIT reverse path and,
    // when enabled, leaves cached copies behind.
    last_data_ = net_.satisfy_and_return(*packet_);
    reward = cfg_.rewards.goal;
    terminal_ = true;
  } else if (packet_->hops() >= hop_budget_) {
    reward = cfg_.rewards.fail;
    terminal_ = true;
  }
  return Transition{s, a, reward, State{next}, terminal_};
}

State Environment::current_state() const {
  if (!packet_) {
    throw EpisodeFinished("environment was never reset");
  }
  return State{packet_->trace.routers.back()};
}

const InterestPacket& Environment::packet() const {
  if (!packet_) {
    throw EpisodeFinished("environment was never reset");
  }
  return *packet_;
}

double stretch_from_reward(double reward) {
  if (!(reward > 0.0)) {
    throw NonPositiveArgument("stretch_from_reward requires a positive reward");
  }
  return 1.0 / reward;
}

double reward_from_stretch(double stretch) {
  if (!(stretch > 0.0)) {
    throw NonPositiveArgument("reward_from_stretch requires a positive stretch");
  }
  return 1.0 / stretch;
}

}  // namespace icnsim
