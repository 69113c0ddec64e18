#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "icnsim/topology.hpp"

namespace icnsim {

using ContentName = std::string;

struct UnknownContent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotAdjacent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HopBudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoCsHit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The PIT no longer leads back to the interest origin. This is an
// internal-consistency failure of the simulator, not a protocol event.
struct BrokenPitChain : std::logic_error {
  using std::logic_error::logic_error;
};

// One ICN router: content store, pending interest table, and a static FIB
// slot. The FIB is unused by the learned forwarder (the policy replaces the
// lookup); it is kept so a static-route baseline can reuse the type.
struct RouterNode {
  RouterId id = 0;
  std::set<ContentName> cs;
  std::map<ContentName, RouterId> pit;  // name -> downstream (where the interest came from)
  std::map<ContentName, RouterId> fib;  // name -> upstream seed route
};

// Consumer-originated request for a named content.
struct InterestPacket {
  ContentName name;
  PathTrace trace;     // routers visited so far, front() is the consumer-attached router
  int hop_budget = 0;  // max hops before the episode is abandoned

  int hops() const { return trace.stretch(); }
};

// Content reply; travels the exact reversal of the interest's path.
struct DataPacket {
  ContentName name;
  PathTrace reverse_path;
};

// All router state of one simulated network. A network instance is owned by
// a single episode runner; the topology must outlive it.
class Network {
public:
  Network(const Topology& topo, std::vector<ContentName> catalog,
          bool on_path_caching = false);

  const Topology& topology() const { return *topo_; }
  const std::vector<ContentName>& catalog() const { return catalog_; }
  bool on_path_caching() const { return on_path_caching_; }

  const RouterNode& node(RouterId r) const;

  // Seeds `name` into the content store of router `r`. Idempotent.
  void place_content(const ContentName& name, RouterId r);

  // True iff `r` holds `name` in its content store. No state change.
  bool cs_hit(RouterId r, const ContentName& name) const;

  // Moves the interest one hop to `next`, which must be adjacent to the
  // packet's current router, and records the PIT entry at `next`. A revisit
  // keeps the original entry, so PIT pointers always lead back toward the
  // origin even when the trace loops.
  void forward_interest(InterestPacket& packet, RouterId next);

  // Satisfies the interest at the router currently holding it (which must
  // have the content), clears every PIT entry the interest left along its
  // trace, and returns the data packet traveling the reversal of the trace.
  // With on-path caching enabled the content is stored at every router on
  // the way back.
  DataPacket satisfy_and_return(const InterestPacket& packet);

  // Drops all pending-interest state, e.g. between training episodes.
  void clear_pit();

private:
  const Topology* topo_;
  std::vector<RouterNode> nodes_;
  std::vector<ContentName> catalog_;
  bool on_path_caching_ = false;

  RouterNode& node_mut(RouterId r);
  void check_content(const ContentName& name) const;
};

}  // namespace icnsim
