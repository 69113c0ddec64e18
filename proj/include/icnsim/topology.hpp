#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace icnsim {

// Routers are numbered 1..n.
using RouterId = int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownRouter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sequence of routers visited by a packet; consecutive entries are adjacent
// in the owning topology, front() is the origin.
struct PathTrace {
  std::vector<RouterId> routers;

  // Hops traveled: a path through k routers covers k-1 links.
  int stretch() const { return static_cast<int>(routers.size()) - 1; }

  bool operator==(const PathTrace&) const = default;
};

// Immutable undirected router graph. Neighbor lists are kept in ascending id
// order; the position of a neighbor in that list is the stable action index
// the learning layer binds to, so the ordering is part of the contract.
class Topology {
public:
  // Builds from an undirected edge list. Duplicate edges are idempotent.
  // Throws ValidationError on self-loops, out-of-range ids, a disconnected
  // graph, or fewer than two routers.
  Topology(int n, const std::vector<std::pair<RouterId, RouterId>>& edges);

  int size() const { return n_; }

  const std::vector<RouterId>& neighbors(RouterId r) const;

  int degree(RouterId r) const {
    return static_cast<int>(neighbors(r).size());
  }

  int max_degree() const;

  // Exact minimum hop count between two routers (breadth-first search);
  // 0 iff src == dst.
  int shortest_hops(RouterId src, RouterId dst) const;

  // Edge-list text form; load_topology(serialize()) reconstructs an equal
  // topology.
  std::string serialize() const;

  bool operator==(const Topology&) const = default;

private:
  int n_ = 0;
  std::vector<std::vector<RouterId>> adj_;  // indexed by id - 1

  void check_router(RouterId r) const;
};

// The canonical 9-router scenario: a 3x3 grid, H1..H9 row-major, with
// horizontal and vertical links only. The consumer side attaches at H9 and
// the content sits at H1, four hops away.
Topology default_topology();

// Parses the text topology format: first non-comment line "n=<count>", then
// one "<i> <j>" undirected edge per line. Lines starting with '#' and blank
// lines are skipped. Throws ParseError on malformed lines and
// ValidationError when the described graph is invalid.
Topology load_topology(std::string_view text);

}  // namespace icnsim
