#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "icnsim/rng.hpp"
#include "icnsim/topology.hpp"

namespace icnsim::testsupport {

// Random connected graph on n routers: a random attachment tree plus up to n
// extra edges. Duplicate edges are harmless (construction deduplicates).
inline Topology random_connected_topology(Rng& rng, int n) {
  std::vector<std::pair<RouterId, RouterId>> edges;
  for (RouterId v = 2; v <= n; ++v) {
    edges.emplace_back(rng.uniform_int(v - 1) + 1, v);
  }
  const int extra = rng.uniform_int(n + 1);
  for (int e = 0; e < extra; ++e) {
    const RouterId i = rng.uniform_int(n) + 1;
    const RouterId j = rng.uniform_int(n) + 1;
    if (i != j) {
      edges.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  return Topology(n, edges);
}

// Uniform random router id in 1..n.
inline RouterId random_router(Rng& rng, int n) { return rng.uniform_int(n) + 1; }

}  // namespace icnsim::testsupport
