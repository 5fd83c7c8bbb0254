#include <doctest.h>

#include <random>
#include <sstream>

#include "support/oracles.hpp"
#include "symnet/automorphism.hpp"
#include "symnet/decomposition.hpp"
#include "symnet/error.hpp"

using namespace symnet;

namespace {

Graph Cycle(int n) {
  std::vector<Triplet> t;
  for (int i = 0; i < n; ++i) t.push_back({i, (i + 1) % n, 1.0});
  return Graph::FromTriplets(static_cast<std::size_t>(n), false, t);
}

Graph Complete(int n) {
  std::vector<Triplet> t;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) t.push_back({i, j, 1.0});
  }
  return Graph::FromTriplets(static_cast<std::size_t>(n), false, t);
}

Graph Petersen() {
  std::vector<Triplet> t;
  for (int i = 0; i < 5; ++i) {
    t.push_back({i, (i + 1) % 5, 1.0});
    t.push_back({i, i + 5, 1.0});
    t.push_back({5 + i, 5 + (i + 2) % 5, 1.0});
  }
  return Graph::FromTriplets(10, false, t);
}

}  // namespace

TEST_CASE("group orders of structured graphs") {
  CHECK(GroupOrder(FindGenerators(Cycle(100))) == 200);
  CHECK(GroupOrder(FindGenerators(Complete(8))) == 40320);
  CHECK(GroupOrder(FindGenerators(Petersen())) == 120);
  const GeneratorSet gs = FindGenerators(Petersen());
  CHECK(SchreierSimsOrder(gs.generators, gs.n) == 120);
  CHECK(Log10Floor(BigInt(120)) == 2);
  CHECK(Log10Floor(BigInt(1)) == 0);
}

TEST_CASE("fixture graph") {
  const Graph g = ParseEdgeList("1 3\n2 4\n3 5\n4 5\n");
  const GeneratorSet gs = FindGenerators(g);
  CHECK(gs.generators.size() == 1);
  CHECK(GroupOrder(gs) == 2);
  CHECK(VerifyAutomorphism(g, gs.generators[0]));
  CHECK(gs.generators[0][0] == 1);
  CHECK(gs.generators[0][2] == 3);
  CHECK(gs.generators[0][4] == 4);
}

TEST_CASE("asymmetric graph has the trivial group") {
  // Triangle with tails of lengths 2 and 1 on two of its corners.
  const Graph g = ParseEdgeList("1 2\n2 3\n3 1\n1 4\n4 5\n2 6\n");
  const GeneratorSet gs = FindGenerators(g);
  CHECK(gs.generators.empty());
  CHECK(GroupOrder(gs) == 1);
}

TEST_CASE("weights and directions restrict automorphisms") {
  EdgeListOptions w;
  w.weighted = true;
  CHECK(GroupOrder(FindGenerators(ParseEdgeList("1 2 1\n2 3 2\n", w))) == 1);
  CHECK(GroupOrder(FindGenerators(ParseEdgeList("1 2 2\n2 3 2\n", w))) == 2);
  EdgeListOptions d;
  d.directed = true;
  CHECK(GroupOrder(FindGenerators(ParseEdgeList("1 2\n2 3\n3 1\n", d))) == 3);
  CHECK(GroupOrder(FindGenerators(ParseEdgeList("1 2\n3 2\n", d))) == 2);
  CHECK(GroupOrder(FindGenerators(ParseEdgeList("1 2\n2 3\n", d))) == 1);
}

TEST_CASE("equitable refinement") {
  const Graph g = ParseEdgeList("1 3\n2 4\n3 5\n4 5\n");
  const OrderedPartition p = RefineEquitable(g, {{{0, 1, 2, 3, 4}}});
  CHECK(p.cells.size() == 3);
  CHECK_THROWS_AS(RefineEquitable(g, {{{0, 1}, {1, 2, 3, 4}}}), ContractError);
}

TEST_CASE("random graphs against exhaustive enumeration") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const Graph g = oracle::RandomGraph(n, 0.4, rng, trial % 3 == 0);
    const auto autos = oracle::AllAutomorphisms(g);
    const GeneratorSet gs = FindGenerators(g);
    CHECK(GroupOrder(gs) == autos.size());
    CHECK(SchreierSimsOrder(gs.generators, n) == autos.size());
    CHECK(OrbitPartition(gs) == oracle::OrbitsFrom(autos, n));
    for (const Permutation& p : gs.generators) CHECK(VerifyAutomorphism(g, p));
  }
}

TEST_CASE("generator import and export") {
  const Graph g = ParseEdgeList("1 3\n2 4\n3 5\n4 5\n");
  std::ostringstream text;
  ExportGenerators(FindGenerators(g), g, text);
  CHECK(text.str() == "(1 2)(3 4)\n");
  std::istringstream in("# swap\n(1 2)(3 4)\n");
  CHECK(GroupOrder(ImportGenerators(in, g)) == 2);
  std::istringstream bad("(1 3)\n");
  CHECK_THROWS_AS(ImportGenerators(bad, g), ContractError);
  std::istringstream unchecked("(1 3)\n");
  CHECK(ImportGenerators(unchecked, 5).generators.size() == 1);
}

TEST_CASE("long path with leaf pairs") {
  // Leaf pairs on every third vertex. Vertex 0 is a third leaf of vertex 1;
  // when the length is a multiple of 3 the far end matches and the path can
  // also be reflected.
  for (int len : {999, 1000}) {
    std::vector<Triplet> t;
    for (int i = 0; i + 1 < len; ++i) t.push_back({i, i + 1, 1.0});
    int next = len;
    int pairs = 0;
    for (int i = 1; i + 1 < len; i += 3) {
      t.push_back({i, next++, 1.0});
      t.push_back({i, next++, 1.0});
      ++pairs;
    }
    const Graph g = Graph::FromTriplets(static_cast<std::size_t>(next), false, t);
    const GeneratorSet gs = FindGenerators(g);
    BigInt expected = 1;
    if (len % 3 == 0) {
      expected = 2 * 6 * 6;
      for (int i = 0; i < pairs - 2; ++i) expected *= 2;
    } else {
      expected = 6;
      for (int i = 0; i < pairs - 1; ++i) expected *= 2;
    }
    CHECK(GroupOrder(gs) == expected);
    CHECK(SchreierSimsOrder(gs.generators, gs.n) == expected);
  }
}
