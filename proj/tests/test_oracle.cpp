#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hkcut/oracle.hpp"
#include "hkcut/rng.hpp"
#include "test_support.hpp"

using namespace hkcut;
using namespace hkcut::testing;

TEST_CASE("enumeration counts match the closed-form partition numbers") {
  // Stirling numbers of the second kind: every partition of a zero-edge
  // instance is optimal, so the optima list is the full enumeration.
  const std::vector<std::tuple<int, int, std::uint64_t>> table = {
      {4, 2, 7}, {5, 2, 15}, {5, 3, 25}, {6, 3, 90}, {7, 3, 301}, {8, 4, 1701},
  };
  for (const auto& [n, k, expected] : table) {
    const Hypergraph g = Hypergraph::build_unit(n, {});
    const BruteForceResult r = min_kcut_bruteforce(g, k);
    CHECK(r.value == 0);
    CHECK(r.optima.size() == expected);
    CHECK(r.partitions_enumerated == expected);
  }
}

TEST_CASE("matches an independent labeling enumeration") {
  SplitMix64 rng(0x0bac1e);
  for (int trial = 0; trial < 25; ++trial) {
    const Hypergraph g = random_instance(rng, 3, 7);
    const int n = g.num_vertices();
    const int k = rng.int_in(1, std::min(n, 4));

    const BruteForceResult got = min_kcut_bruteforce(g, k);
    Cost best = 0;
    bool first = true;
    std::set<Partition> optima;
    for (const Partition& p : naive_kpartitions(n, k)) {
      const Cost c = g.partition_cost(p);
      if (first || c < best) {
        best = c;
        optima.clear();
        first = false;
      }
      if (c == best) optima.insert(p);
    }
    CHECK(got.value == best);
    CHECK(std::set<Partition>(got.optima.begin(), got.optima.end()) == optima);
  }
}

TEST_CASE("worked examples: optima lists") {
  const BruteForceResult triple = min_kcut_bruteforce(h_triple(), 2);
  CHECK(triple.value == 1);
  REQUIRE(triple.optima.size() == 3);
  CHECK(triple.optima[0] == Partition({VertexSet{0}, VertexSet{1, 2}}));
  CHECK(triple.optima[1] == Partition({VertexSet{0, 1}, VertexSet{2}}));
  CHECK(triple.optima[2] == Partition({VertexSet{0, 2}, VertexSet{1}}));

  const BruteForceResult cycle = min_kcut_bruteforce(h_cycle4(), 2);
  CHECK(cycle.value == 2);
  CHECK(cycle.optima.size() == 6);

  CHECK(min_kcut_bruteforce(h_path(), 3).value == 2);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(min_kcut_bruteforce(Hypergraph::build_unit(15, {}), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(min_kcut_bruteforce(h_path(), 0), std::invalid_argument);
  CHECK_THROWS_AS(min_kcut_bruteforce(h_path(), 4), std::invalid_argument);
}

TEST_CASE("maximal distinguished parts") {
  const auto cycle_pairs = maximal_min_kpartitions(h_cycle4(), 2);
  REQUIRE(cycle_pairs.size() == 4);
  CHECK(cycle_pairs[0].part == VertexSet{0, 1, 2});
  CHECK(cycle_pairs[0].rest == Partition({VertexSet{3}}));
  CHECK(cycle_pairs[1].part == VertexSet{0, 1, 3});
  CHECK(cycle_pairs[2].part == VertexSet{0, 2, 3});
  CHECK(cycle_pairs[3].part == VertexSet{1, 2, 3});
  // {0} is covered by the part {0,1} of another optimum, so it is not maximal
  for (const auto& pair : cycle_pairs) CHECK(pair.part.size() == 3);

  const auto triple_pairs = maximal_min_kpartitions(h_triple(), 2);
  REQUIRE(triple_pairs.size() == 3);
  for (const auto& pair : triple_pairs) CHECK(pair.part.size() == 2);

  const auto free_pairs = maximal_min_kpartitions(Hypergraph::build_unit(3, {}), 2);
  for (const auto& pair : free_pairs) CHECK(pair.part.size() == 2);
  CHECK(free_pairs.size() == 3);
}

TEST_CASE("minimal balanced splits") {
  const auto cycle_splits = minimal_balanced_splits(h_cycle4(), 2);
  REQUIRE(cycle_splits.size() == 4);
  for (int v = 0; v < 4; ++v) CHECK(cycle_splits[v] == VertexSet{v});

  const auto triple_splits = minimal_balanced_splits(h_triple(), 3);
  REQUIRE(triple_splits.size() == 3);
  for (int v = 0; v < 3; ++v) CHECK(triple_splits[v] == VertexSet{v});

  const auto path_splits = minimal_balanced_splits(h_path(), 2);
  REQUIRE(path_splits.size() == 2);
  CHECK(path_splits[0] == VertexSet{0});
  CHECK(path_splits[1] == VertexSet{2});
}

TEST_CASE("for_each_kpartition enumerates each partition once") {
  int count = 0;
  std::set<Partition> seen;
  for_each_kpartition(6, 3, [&](const Partition& p) {
    ++count;
    seen.insert(p);
    CHECK(p.k() == 3);
  });
  CHECK(count == 90);
  CHECK(seen.size() == 90);
}
