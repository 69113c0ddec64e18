#include <doctest.h>

#include <vector>

#include "icnsim/icn.hpp"
#include "icnsim/rng.hpp"
#include "support/random_topology.hpp"

using namespace icnsim;

namespace {

const std::vector<ContentName> kCatalog = {"c1", "c2", "c3"};

InterestPacket fresh_interest(RouterId origin, int hop_budget) {
  return InterestPacket{"c1", PathTrace{{origin}}, hop_budget};
}

// Drives the interest along an explicit route.
void forward_along(Network& net, InterestPacket& packet, const std::vector<RouterId>& route) {
  for (const RouterId next : route) {
    net.forward_interest(packet, next);
  }
}

}  // namespace

TEST_SUITE_BEGIN("icn");

TEST_CASE("place_content and cs_hit") {
  const Topology topo = default_topology();
  Network net(topo, kCatalog);
  net.place_content("c1", 1);

  CHECK(net.cs_hit(1, "c1"));
  CHECK_FALSE(net.cs_hit(9, "c1"));
  CHECK_FALSE(net.cs_hit(1, "c2"));
  for (RouterId r = 2; r <= 9; ++r) {
    CHECK(net.node(r).cs.empty());
  }

  net.place_content("c1", 1);  // idempotent
  CHECK(net.node(1).cs.size() == 1);

  CHECK_THROWS_AS(net.place_content("c1", 10), UnknownRouter);
  CHECK_THROWS_AS(net.place_content("nope", 1), UnknownContent);
  CHECK_THROWS_AS(net.cs_hit(0, "c1"), UnknownRouter);
}

TEST_CASE("forward_interest appends to the trace and records the PIT") {
  const Topology topo = default_topology();
  Network net(topo, kCatalog);
  InterestPacket packet = fresh_interest(9, 18);

  net.forward_interest(packet, 8);
  CHECK(packet.trace.routers == std::vector<RouterId>{9, 8});
  CHECK(net.node(8).pit.at("c1") == 9);
  CHECK(packet.hops() == 1);

  SUBCASE("non-adjacent targets are rejected") {
    InterestPacket p = fresh_interest(9, 18);
    CHECK_THROWS_AS(net.forward_interest(p, 1), NotAdjacent);
    CHECK_THROWS_AS(net.forward_interest(p, 42), UnknownRouter);
  }

  SUBCASE("spent hop budget is rejected") {
    InterestPacket p = fresh_interest(9, 1);
    net.forward_interest(p, 8);
    CHECK_THROWS_AS(net.forward_interest(p, 7), HopBudgetExhausted);
  }
}

TEST_CASE("satisfy_and_return reverses the trace and clears the PIT") {
  const Topology topo = default_topology();
  Network net(topo, kCatalog);
  net.place_content("c1", 1);
  InterestPacket packet = fresh_interest(9, 18);
  forward_along(net, packet, {8, 7, 4, 1});

  const DataPacket data = net.satisfy_and_return(packet);
  CHECK(data.reverse_path.routers == std::vector<RouterId>{1, 4, 7, 8, 9});
  for (RouterId r = 1; r <= 9; ++r) {
    CHECK(net.node(r).pit.empty());
  }
  // Caching disabled: stores unchanged beyond the initial placement.
  CHECK(net.node(1).cs.count("c1") == 1);
  for (RouterId r = 2; r <= 9; ++r) {
    CHECK(net.node(r).cs.empty());
  }
}

TEST_CASE("on-path caching stores the content along the return path") {
  const Topology topo = default_topology();
  Network net(topo, kCatalog, /*on_path_caching=*/true);
  net.place_content("c1", 1);
  InterestPacket packet = fresh_interest(9, 18);
  forward_along(net, packet, {8, 7, 4, 1});

  net.satisfy_and_return(packet);
  for (const RouterId r : {4, 7, 8, 9}) {
    CHECK(net.cs_hit(r, "c1"));
  }
  CHECK_FALSE(net.cs_hit(5, "c1"));
}

TEST_CASE("satisfy_and_return without a content hit fails") {
  const Topology topo = default_topology();
  Network net(topo, kCatalog);
  net.place_content("c1", 1);
  InterestPacket packet = fresh_interest(9, 18);
  net.forward_interest(packet, 8);
  CHECK_THROWS_AS(net.satisfy_and_return(packet), NoCsHit);
}

TEST_CASE("a tampered PIT is detected") {
  const Topology topo = default_topology();
  Network net(topo, kCatalog);
  net.place_content("c1", 1);
  InterestPacket packet = fresh_interest(9, 18);
  forward_along(net, packet, {8, 7, 4, 1});
  net.clear_pit();  // simulate the inconsistency
  CHECK_THROWS_AS(net.satisfy_and_return(packet), BrokenPitChain);
}

TEST_CASE("random walks: PIT conservation and reverse-path correctness") {
  Rng rng(987654321);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + rng.uniform_int(8);
    const Topology topo = testsupport::random_connected_topology(rng, n);
    Network net(topo, kCatalog);

    // Random walk that may revisit routers, then content placed wherever the
    // interest happens to stop.
    const RouterId origin = testsupport::random_router(rng, n);
    InterestPacket packet = fresh_interest(origin, 2 * n);
    const int walk = 1 + rng.uniform_int(2 * n - 1);
    for (int i = 0; i < walk; ++i) {
      const auto& nbrs = topo.neighbors(packet.trace.routers.back());
      net.forward_interest(packet,
                           nbrs[static_cast<size_t>(rng.uniform_int(static_cast<int>(nbrs.size())))]);
    }
    net.place_content("c1", packet.trace.routers.back());

    const DataPacket data = net.satisfy_and_return(packet);

    // Reverse path reversed is the trace, element-wise.
    const auto& rev = data.reverse_path.routers;
    const auto& fwd = packet.trace.routers;
    REQUIRE(rev.size() == fwd.size());
    for (size_t i = 0; i < rev.size(); ++i) {
      CHECK(rev[i] == fwd[fwd.size() - 1 - i]);
    }

    // No PIT entry for the name survives anywhere on the trace.
    for (const RouterId r : fwd) {
      CHECK(net.node(r).pit.count("c1") == 0);
    }
  }
}

TEST_SUITE_END();
