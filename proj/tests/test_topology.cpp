#include <doctest.h>

#include <string>
#include <vector>

#include "icnsim/topology.hpp"
#include "support/random_topology.hpp"

using namespace icnsim;

TEST_SUITE_BEGIN("topology");

TEST_CASE("default topology is the 3x3 grid") {
  const Topology topo = default_topology();
  CHECK(topo.size() == 9);
  CHECK(topo.neighbors(5) == std::vector<RouterId>{2, 4, 6, 8});
  CHECK(topo.neighbors(1) == std::vector<RouterId>{2, 4});
  CHECK(topo.neighbors(9) == std::vector<RouterId>{6, 8});
  CHECK(topo.max_degree() == 4);
}

TEST_CASE("shortest_hops on the grid") {
  const Topology topo = default_topology();
  CHECK(topo.shortest_hops(9, 1) == 4);
  CHECK(topo.shortest_hops(5, 5) == 0);
  CHECK(topo.shortest_hops(7, 3) == 4);
  CHECK(topo.shortest_hops(1, 2) == 1);
}

TEST_CASE("unknown routers are rejected") {
  const Topology topo = default_topology();
  CHECK_THROWS_AS(topo.neighbors(0), UnknownRouter);
  CHECK_THROWS_AS(topo.neighbors(10), UnknownRouter);
  CHECK_THROWS_AS(topo.shortest_hops(1, 10), UnknownRouter);
}

TEST_CASE("load_topology parses the edge-list format") {
  const Topology two = load_topology("n=2\n1 2\n");
  CHECK(two.size() == 2);
  CHECK(two.neighbors(1) == std::vector<RouterId>{2});
  CHECK(two.neighbors(2) == std::vector<RouterId>{1});

  SUBCASE("comments, blanks, and duplicate edges are tolerated") {
    const Topology topo = load_topology("# mesh\nn=3\n\n1 2\n2 3\n1 2\n  2 1\n");
    CHECK(topo.size() == 3);
    CHECK(topo.neighbors(2) == std::vector<RouterId>{1, 3});
  }

  SUBCASE("disconnected graph names the unreachable router") {
    CHECK_THROWS_WITH_AS(load_topology("n=3\n1 2\n"), "router 3 unreachable", ValidationError);
  }

  SUBCASE("malformed lines raise ParseError") {
    CHECK_THROWS_AS(load_topology("1 2\n"), ParseError);          // missing header
    CHECK_THROWS_AS(load_topology("n=two\n1 2\n"), ParseError);   // bad count
    CHECK_THROWS_AS(load_topology("n=2\n1\n"), ParseError);       // one endpoint
    CHECK_THROWS_AS(load_topology("n=2\n1 2 3\n"), ParseError);   // trailing token
    CHECK_THROWS_AS(load_topology("n=2\na b\n"), ParseError);     // not numbers
    CHECK_THROWS_AS(load_topology(""), ParseError);               // empty input
  }

  SUBCASE("invalid graphs raise ValidationError") {
    CHECK_THROWS_AS(load_topology("n=2\n1 1\n"), ValidationError);  // self-loop
    CHECK_THROWS_AS(load_topology("n=2\n1 3\n"), ValidationError);  // out of range
    CHECK_THROWS_AS(load_topology("n=1\n"), ValidationError);       // too small
  }
}

TEST_CASE("serialize round-trips the default topology") {
  const Topology topo = default_topology();
  CHECK(load_topology(topo.serialize()) == topo);
}

TEST_CASE("PathTrace stretch counts links") {
  CHECK(PathTrace{{9}}.stretch() == 0);
  CHECK(PathTrace{{9, 8, 7, 4, 1}}.stretch() == 4);
}

TEST_CASE("random topologies: ordering, symmetry, triangle inequality, round-trip") {
  Rng rng(20240517);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + rng.uniform_int(8);
    const Topology topo = testsupport::random_connected_topology(rng, n);

    for (RouterId r = 1; r <= n; ++r) {
      const auto& nbrs = topo.neighbors(r);
      CHECK(!nbrs.empty());
      for (size_t i = 0; i + 1 < nbrs.size(); ++i) {
        CHECK(nbrs[i] < nbrs[i + 1]);
      }
      for (const RouterId nb : nbrs) {
        CHECK(nb != r);
        const auto& back = topo.neighbors(nb);
        CHECK(std::find(back.begin(), back.end(), r) != back.end());
      }
    }

    for (RouterId a = 1; a <= n; ++a) {
      for (RouterId b = 1; b <= n; ++b) {
        CHECK(topo.shortest_hops(a, b) == topo.shortest_hops(b, a));
        const RouterId c = testsupport::random_router(rng, n);
        CHECK(topo.shortest_hops(a, c) <=
              topo.shortest_hops(a, b) + topo.shortest_hops(b, c));
      }
    }

    CHECK(load_topology(topo.serialize()) == topo);
  }
}

TEST_SUITE_END();
