#include <gtest/gtest.h>

#include <random>

#include "kpairs/bounds.hpp"
#include "kpairs/routing.hpp"
#include "oracles.hpp"

using namespace kpairs;

TEST(RoutingLp, VariableAndRowCounts) {
  const ConcurrentFlowLp hu = build_concurrent_flow_lp(gen_hu());
  EXPECT_EQ(hu.lp.variables().size(), 49u);
  EXPECT_EQ(hu.capacity_rows.size(), 8u);

  const Network single(true, {"s", "t"}, {{"s", "t"}}, {{"1", "s", "t"}});
  EXPECT_EQ(build_concurrent_flow_lp(single).lp.variables().size(), 2u);
  EXPECT_EQ(build_concurrent_flow_lp(gen_n1(3)).capacity_rows.size(), 10u);
}

TEST(RoutingRate, KnownInstances) {
  EXPECT_EQ(routing_rate(gen_hu()).rate, Rational(8, 7));
  EXPECT_EQ(routing_rate(gen_bipartite(BipartiteType::kTypeI, 2, 3)).rate,
            Rational(3, 4));
  EXPECT_EQ(routing_rate(gen_bipartite(BipartiteType::kTypeII, 2, 2)).rate,
            Rational(1, 2));
  const Network single(true, {"s", "t"}, {{"s", "t"}}, {{"1", "s", "t"}});
  EXPECT_EQ(routing_rate(single).rate, Rational(1));
}

TEST(RoutingRate, BottleneckFamilyMatchesPathOracle) {
  for (int k = 2; k <= 6; ++k) {
    const Network n = gen_n1(k);
    for (const auto& c : n.commodities()) {
      const auto paths = oracle::simple_paths(n, c.source, c.sink);
      ASSERT_EQ(paths.size(), 1u);
      EXPECT_TRUE(std::count(paths[0].begin(), paths[0].end(),
                             *n.find_edge("u", "v")));
    }
    EXPECT_EQ(routing_rate(n).rate, Rational(1, k));
    EXPECT_EQ(oracle::path_routing_rate(n, 12), Rational(1, k));
  }
}

TEST(RoutingRate, SolutionCarriesOptimalityCertificate) {
  for (const Network& n : {gen_hu(), gen_n1(4)}) {
    const ConcurrentFlowLp lp = build_concurrent_flow_lp(n);
    const RoutingResult r = routing_rate(n);
    std::string why;
    EXPECT_TRUE(verify_optimality(lp.lp, r.solution, &why)) << why;
    EXPECT_TRUE(verify_scheme(n, r.scheme, &why)) << why;
  }
}

TEST(RoutingRate, VerifySchemeRejectsOverload) {
  const Network n = gen_hu();
  RoutingScheme s = routing_rate(n).scheme;
  s.rate = s.rate + Rational(1, 7);
  EXPECT_FALSE(verify_scheme(n, s));
}

TEST(RoutingRate, ScalesWithCapacity) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Network n = oracle::random_network(rng, i % 2 == 0, 7, 3);
    std::vector<Edge> doubled = n.edges();
    for (Edge& e : doubled) e.capacity *= 2;
    const Network m(n.directed(), n.nodes(), doubled, n.commodities());
    EXPECT_EQ(routing_rate(m).rate, routing_rate(n).rate * 2);
  }
}

TEST(RoutingRate, AgreesWithPathFormulation) {
  std::mt19937_64 rng(17);
  int compared = 0;
  for (int i = 0; i < 80; ++i) {
    const Network n = oracle::random_network(rng, i % 2 == 1, 8, 3);
    const auto path = oracle::path_routing_rate(n, 12);
    if (!path) continue;
    ++compared;
    EXPECT_EQ(routing_rate(n).rate, *path) << serialize_network(n);
  }
  EXPECT_GT(compared, 40);
}

TEST(RoutingRate, RejectsNetworksWithoutCommodities) {
  EXPECT_THROW(routing_rate(Network(true, {"a", "b"}, {{"a", "b"}}, {})),
               NetworkError);
}
