#include "icnsim/icn.hpp"

#include <algorithm>

namespace icnsim {

Network::Network(const Topology& topo, std::vector<ContentName> catalog, bool on_path_caching)
    : topo_(&topo), catalog_(std::move(catalog)), on_path_caching_(on_path_caching) {
  if (catalog_.empty()) {
    throw std::invalid_argument("content catalog must not be empty");
  }
  for (const auto& name : catalog_) {
    if (name.empty()) {
      throw std::invalid_argument("content names must be non-empty");
    }
    if (std::count(catalog_.begin(), catalog_.end(), name) != 1) {
      throw std::invalid_argument("duplicate content name '" + name + "' in catalog");
    }
  }
  nodes_.resize(static_cast<size_t>(topo.size()));
  for (RouterId r = 1; r <= topo.size(); ++r) {
    nodes_[static_cast<size_t>(r - 1)].id = r;
  }
}

RouterNode& Network::node_mut(RouterId r) {
  if (r < 1 || r > topo_->size()) {
    throw UnknownRouter("router " + std::to_string(r) + " outside 1.." +
                        std::to_string(topo_->size()));
  }
  return nodes_[static_cast<size_t>(r - 1)];
}

const RouterNode& Network::node(RouterId r) const {
  return const_cast<Network*>(this)->node_mut(r);
}

void Network::check_content(const ContentName& name) const {
  if (std::find(catalog_.begin(), catalog_.end(), name) == catalog_.end()) {
    throw UnknownContent("content '" + name + "' is not in the catalog");
  }
}

void Network::place_content(const ContentName& name, RouterId r) {
  check_content(name);
  node_mut(r).cs.insert(name);
}

bool Network::cs_hit(RouterId r, const ContentName& name) const {
  return node(r).cs.count(name) > 0;
}

void Network::forward_interest(InterestPacket& packet, RouterId next) {
  check_content(packet.name);
  if (packet.trace.routers.empty()) {
    throw std::invalid_argument("interest packet has an empty trace");
  }
  const RouterId cur = packet.trace.routers.back();
  const auto& nbrs = topo_->neighbors(cur);
  node_mut(next);  // range check before the adjacency verdict
  if (!std::binary_search(nbrs.begin(), nbrs.end(), next)) {
    throw NotAdjacent("router " + std::to_string(next) + " is not adjacent to " +
                      std::to_string(cur));
  }
  if (packet.hops() >= packet.hop_budget) {
    throw HopBudgetExhausted("hop budget of " + std::to_string(packet.hop_budget) + " spent");
  }
  packet.trace.routers.push_back(next);
  // First arrival wins: a looping interest must not redirect the entry, or
  // the reverse chain could cycle.
  node_mut(next).pit.emplace(packet.name, cur);
}

DataPacket Network::satisfy_and_return(const InterestPacket& packet) {
  const auto& trace = packet.trace.routers;
  if (trace.empty()) {
    throw std::invalid_argument("interest packet has an empty trace");
  }
  const RouterId here = trace.back();
  const RouterId origin = trace.front();
  if (!cs_hit(here, packet.name)) {
    throw NoCsHit("router " + std::to_string(here) + " does not hold '" + packet.name + "'");
  }

  // The PIT pointers from the hit router must lead back to the origin.
  RouterId cur = here;
  int guard = 0;
  while (cur != origin) {
    const auto& pit = node(cur).pit;
    const auto it = pit.find(packet.name);
    if (it == pit.end() || ++guard > topo_->size()) {
      throw BrokenPitChain("PIT chain for '" + packet.name + "' broken at router " +
                           std::to_string(cur));
    }
    cur = it->second;
  }

  for (const RouterId r : trace) {
    node_mut(r).pit.erase(packet.name);
  }

  DataPacket data{packet.name, PathTrace{{trace.rbegin(), trace.rend()}}};
  if (on_path_caching_) {
    for (const RouterId r : data.reverse_path.routers) {
      node_mut(r).cs.insert(packet.name);
    }
  }
  return data;
}

void Network::clear_pit() {
  for (auto& node : nodes_) {
    node.pit.clear();
  }
}

}  // namespace icnsim
