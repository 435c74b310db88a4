#include <gtest/gtest.h>

#include <random>

#include "kpairs/bounds.hpp"
#include "oracles.hpp"

using namespace kpairs;

namespace {

EdgeSet edges_named(const Network& n,
                    std::initializer_list<std::pair<const char*, const char*>> list) {
  EdgeSet out;
  for (const auto& [a, b] : list) out.insert(*n.find_edge(a, b));
  return out;
}

}  // namespace

TEST(Separation, Examples) {
  const Network hu = gen_hu();
  EXPECT_TRUE(separates(hu, edges_named(hu, {{"a", "g"}, {"a", "h"}, {"a", "f"}}),
                        "a"));
  EXPECT_FALSE(separates(hu, {}, "a"));
  EXPECT_FALSE(separates(hu, edges_named(hu, {{"b", "g"}}), "b"));
}

TEST(Isolation, Examples) {
  const Network n1 = gen_n1(2);
  EXPECT_TRUE(isolates(n1, edges_named(n1, {{"u", "v"}, {"s2", "t1"}}),
                       {"1", "2"}));
  EXPECT_FALSE(isolates(n1, edges_named(n1, {{"u", "v"}}), {"1", "2"}));
  EXPECT_TRUE(isolates(n1, {}, {}));
  EXPECT_THROW(isolates(gen_hu(), {}, {"a"}), NetworkError);
}

TEST(Sparsity, Examples) {
  EXPECT_EQ(sparsity(gen_hu()).value, Rational(4, 3));
  EXPECT_EQ(sparsity(gen_bipartite(BipartiteType::kTypeI, 2, 3)).value,
            Rational(1));
  const Network single(false, {"a", "b"}, {{"a", "b"}}, {{"1", "a", "b"}});
  const CutReport r = sparsity(single);
  EXPECT_EQ(r.value, Rational(1));
  EXPECT_EQ(r.witness_edges, EdgeSet{0});
  EXPECT_EQ(r.witness_commodities, CommodityIds{"1"});
}

TEST(Sparsity, WitnessAchievesValue) {
  const Network hu = gen_hu();
  const CutReport r = sparsity(hu);
  Rational cap;
  for (std::size_t e : r.witness_edges) cap += hu.edges()[e].capacity;
  std::size_t cut = 0;
  for (const auto& c : hu.commodities()) cut += separates(hu, r.witness_edges, c.id);
  EXPECT_EQ(cut, r.witness_commodities.size());
  EXPECT_EQ(cap / Rational(static_cast<long>(cut)), r.value);
}

TEST(Sparsity, ErrorsOnCapsAndMissingCommodities) {
  EXPECT_THROW(sparsity(Network(false, {"a", "b"}, {{"a", "b"}}, {})),
               NetworkError);
  EnumerationOptions tight;
  tight.max_edges = 4;
  EXPECT_THROW(sparsity(gen_hu(), tight), EnumerationCapExceeded);
  tight.max_edges = 20;
  tight.max_commodities = 2;
  EXPECT_THROW(sparsity(gen_hu(), tight), EnumerationCapExceeded);
}

TEST(Sparsity, MatchesPathEnumerationOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 120; ++i) {
    const Network n = oracle::random_network(rng, i % 2 == 0, 6, 3);
    EXPECT_EQ(sparsity(n).value, oracle::sparsity(n)) << serialize_network(n);
  }
}

TEST(Sparsity, ParallelSearchIsDeterministic) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Network n = oracle::random_network(rng, i % 2 == 1, 8, 3);
    EnumerationOptions serial, parallel;
    parallel.jobs = 3;
    const CutReport a = sparsity(n, serial), b = sparsity(n, parallel);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness_edges, b.witness_edges);
    EXPECT_EQ(a.witness_commodities, b.witness_commodities);
  }
}

TEST(Meagerness, Examples) {
  EXPECT_EQ(meagerness(gen_n1(2)).value, Rational(1));
  EXPECT_EQ(meagerness(gen_n1(3)).value, Rational(1));
  const Network single(true, {"s", "t"}, {{"s", "t"}}, {{"1", "s", "t"}});
  EXPECT_EQ(meagerness(single).value, Rational(1));
  EXPECT_THROW(meagerness(gen_hu()), NetworkError);
}

TEST(Meagerness, MatchesPathEnumerationOracle) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 80; ++i) {
    const Network n = oracle::random_network(rng, true, 7, 3);
    EXPECT_EQ(meagerness(n).value, oracle::meagerness(n)) << serialize_network(n);
  }
}

TEST(Meagerness, LargeBottleneckInstanceWithRaisedCap) {
  EXPECT_THROW(meagerness(gen_n1(6)), EnumerationCapExceeded);
  const CutReport r = meagerness(gen_n1(6), {28, 10, 1});
  EXPECT_EQ(r.value, Rational(1));
  EXPECT_EQ(sparsity(gen_n1(6), {28, 10, 2}).value, Rational(1, 6));
}

TEST(Meagerness, NeverBelowSparsity) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    const Network n = oracle::random_network(rng, true, 7, 3);
    EXPECT_GE(meagerness(n).value, sparsity(n).value) << serialize_network(n);
  }
}

TEST(Wiener, Examples) {
  EXPECT_EQ(wiener_bound(gen_hu()), Rational(8, 7));
  EXPECT_EQ(wiener_bound(gen_bipartite(BipartiteType::kTypeI, 2, 3)),
            Rational(3, 4));
  const Network single(false, {"a", "b"}, {{"a", "b"}}, {{"1", "a", "b"}});
  EXPECT_EQ(wiener_bound(single), Rational(1));
  EXPECT_THROW(wiener_bound(gen_n1(2)), NetworkError);
  const Network split(false, {"a", "b", "c"}, {{"a", "b"}}, {{"1", "a", "c"}});
  EXPECT_THROW(wiener_bound(split), NetworkError);
}

TEST(Wiener, DistanceTable) {
  const DistanceTable d = distance_table(gen_hu());
  EXPECT_EQ(d.distance("a", "c"), 2);
  EXPECT_EQ(d.distance("b", "f"), 3);
  EXPECT_EQ(d.distance("g", "h"), 2);
  EXPECT_EQ(d.distance("a", "a"), 0);
}
