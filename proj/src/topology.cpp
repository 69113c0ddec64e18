#include "icnsim/topology.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace icnsim {

Topology::Topology(int n, const std::vector<std::pair<RouterId, RouterId>>& edges) : n_(n) {
  if (n < 2) {
    throw ValidationError("topology needs at least 2 routers, got " + std::to_string(n));
  }
  std::vector<std::set<RouterId>> nbrs(static_cast<size_t>(n));
  for (const auto& [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n) {
      throw ValidationError("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") references a router outside 1.." + std::to_string(n));
    }
    if (i == j) {
      throw ValidationError("self-loop at router " + std::to_string(i));
    }
    nbrs[static_cast<size_t>(i - 1)].insert(j);
    nbrs[static_cast<size_t>(j - 1)].insert(i);
  }
  adj_.reserve(static_cast<size_t>(n));
  for (const auto& s : nbrs) {
    adj_.emplace_back(s.begin(), s.end());  // sets iterate ascending
  }

  // Connectivity check: BFS from router 1 must reach everything.
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::queue<RouterId> queue;
  queue.push(1);
  seen[0] = 1;
  while (!queue.empty()) {
    const RouterId cur = queue.front();
    queue.pop();
    for (const RouterId nb : adj_[static_cast<size_t>(cur - 1)]) {
      if (!seen[static_cast<size_t>(nb - 1)]) {
        seen[static_cast<size_t>(nb - 1)] = 1;
        queue.push(nb);
      }
    }
  }
  for (RouterId r = 1; r <= n; ++r) {
    if (!seen[static_cast<size_t>(r - 1)]) {
      throw ValidationError("router " + std::to_string(r) + " unreachable");
    }
  }
}

void Topology::check_router(RouterId r) const {
  if (r < 1 || r > n_) {
    throw UnknownRouter("router " + std::to_string(r) + " outside 1.." + std::to_string(n_));
  }
}

const std::vector<RouterId>& Topology::neighbors(RouterId r) const {
  check_router(r);
  return adj_[static_cast<size_t>(r - 1)];
}

int Topology::max_degree() const {
  size_t best = 0;
  for (const auto& a : adj_) {
    best = std::max(best, a.size());
  }
  return static_cast<int>(best);
}

int Topology::shortest_hops(RouterId src, RouterId dst) const {
  check_router(src);
  check_router(dst);
  if (src == dst) {
    return 0;
  }
  std::vector<int> dist(static_cast<size_t>(n_), -1);
  std::queue<RouterId> queue;
  dist[static_cast<size_t>(src - 1)] = 0;
  queue.push(src);
  while (!queue.empty()) {
    const RouterId cur = queue.front();
    queue.pop();
    for (const RouterId nb : adj_[static_cast<size_t>(cur - 1)]) {
      if (dist[static_cast<size_t>(nb - 1)] < 0) {
        dist[static_cast<size_t>(nb - 1)] = dist[static_cast<size_t>(cur - 1)] + 1;
        if (nb == dst) {
          return dist[static_cast<size_t>(nb - 1)];
        }
        queue.push(nb);
      }
    }
  }
  // Unreachable for a validated topology.
  throw ValidationError("no path from " + std::to_string(src) + " to " + std::to_string(dst));
}

std::string Topology::serialize() const {
  std::ostringstream out;
  out << "n=" << n_ << "\n";
  for (RouterId r = 1; r <= n_; ++r) {
    for (const RouterId nb : adj_[static_cast<size_t>(r - 1)]) {
      if (nb > r) {
        out << r << " " << nb << "\n";
      }
    }
  }
  return out.str();
}

Topology default_topology() {
  // 3x3 grid, row-major:  1-2-3 / 4-5-6 / 7-8-9.
  std::vector<std::pair<RouterId, RouterId>> edges;
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      const RouterId id = row * 3 + col + 1;
      if (col < 2) {
        edges.emplace_back(id, id + 1);
      }
      if (row < 2) {
        edges.emplace_back(id, id + 3);
      }
    }
  }
  return Topology(9, edges);
}

namespace {

std::string_view trimmed(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Topology load_topology(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<RouterId, RouterId>> edges;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = trimmed(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    if (n < 0) {
      if (!line.starts_with("n=")) {
        throw ParseError("line " + std::to_string(lineno) + ": expected 'n=<count>', got '" +
                         std::string(line) + "'");
      }
      std::istringstream hdr{std::string(line.substr(2))};
      std::string extra;
      if (!(hdr >> n) || (hdr >> extra)) {
        throw ParseError("line " + std::to_string(lineno) + ": malformed router count");
      }
      continue;
    }
    std::istringstream ls{std::string(line)};
    RouterId i = 0;
    RouterId j = 0;
    std::string extra;
    if (!(ls >> i >> j) || (ls >> extra)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected '<i> <j>', got '" +
                       std::string(line) + "'");
    }
    edges.emplace_back(i, j);
  }
  if (n < 0) {
    throw ParseError("missing 'n=<count>' header line");
  }
  return Topology(n, edges);
}

}  // namespace icnsim
