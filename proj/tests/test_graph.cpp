#include <doctest.h>

#include <sstream>

#include "symnet/error.hpp"
#include "symnet/graph.hpp"
#include "symnet/permutation.hpp"

using namespace symnet;

TEST_CASE("edge list parsing") {
  const Graph g = ParseEdgeList("# comment\n1 3\n2 4\n\n3 5\n% other comment\n4 5\n");
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 4);
  CHECK(g.weight(0, 2) == 1.0);
  CHECK(g.weight(2, 0) == 1.0);
  CHECK(g.weight(0, 1) == 0.0);
  CHECK(g.label(4) == "5");
  CHECK(*g.index_of("3") == 2);
  CHECK_FALSE(g.index_of("9").has_value());
}

TEST_CASE("integer labels sort numerically, others by first appearance") {
  const Graph g = ParseEdgeList("10 2\n2 1\n");
  CHECK(g.labels() == std::vector<std::string>{"1", "2", "10"});
  const Graph h = ParseEdgeList("b a\na c\n");
  CHECK(h.labels() == std::vector<std::string>{"b", "a", "c"});
}

TEST_CASE("weighted and directed input") {
  EdgeListOptions o;
  o.directed = true;
  o.weighted = true;
  const Graph g = ParseEdgeList("1 2 0.5\n2 3 2\n3 3 1\n", o);
  CHECK(g.directed());
  CHECK(g.weight(0, 1) == 0.5);
  CHECK(g.weight(1, 0) == 0.0);
  CHECK(g.has_loops());
  CHECK(g.is_weighted());
  CHECK(g.in(1).size() == 1);
}

TEST_CASE("parse errors carry the line number") {
  CHECK_THROWS_AS(ParseEdgeList(""), ParseError);
  CHECK_THROWS_AS(ParseEdgeList("1 2\n1 2 3 4\n"), ParseError);
  EdgeListOptions o;
  o.weighted = true;
  CHECK_THROWS_AS(ParseEdgeList("1 2 x\n", o), ParseError);
  try {
    ParseEdgeList("1 2\n3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("round trip through edge list text") {
  EdgeListOptions o;
  o.weighted = true;
  const Graph g = ParseEdgeList("1 2 0.1\n2 3 3\n3 1 7.25\n4 4 2\n", o);
  std::ostringstream text;
  WriteEdgeList(g, text);
  const Graph h = ParseEdgeList(text.str(), o);
  CHECK(g.dense() == h.dense());
  CHECK(g.labels() == h.labels());
}

TEST_CASE("dense and sparse views agree") {
  const Graph g = ParseEdgeList("1 2\n2 3\n3 4\n4 1\n");
  const DenseMatrix d = g.dense();
  CHECK(DenseMatrix(g.sparse()) == d);
  CHECK(Graph::FromDense(d).dense() == d);
  CHECK(d.sum() == 8.0);
}

TEST_CASE("components and induced subgraphs") {
  const Graph g = ParseEdgeList("1 2\n2 3\n4 5\n6 6\n");
  int count = 0;
  const auto comp = ConnectedComponents(g, &count);
  CHECK(count == 3);
  CHECK(comp[0] == comp[2]);
  CHECK(comp[3] != comp[0]);
  CHECK_FALSE(IsConnected(g));
  const Graph l = LargestConnectedComponent(g);
  CHECK(l.num_vertices() == 3);
  CHECK(l.labels() == std::vector<std::string>{"1", "2", "3"});
  const InducedSubgraph s = Induce(g, {4, 3});
  CHECK(s.parent == std::vector<Vertex>{3, 4});
  CHECK(s.graph.num_edges() == 1);
  CHECK_THROWS_AS(Induce(g, {7}), ContractError);
}

TEST_CASE("single vertex graph") {
  const Graph g = ParseEdgeList("1 1\n");
  CHECK(g.num_vertices() == 1);
  CHECK(IsConnected(g));
}

TEST_CASE("permutations in cycle notation") {
  const std::vector<std::string> labels{"1", "2", "3", "4", "5"};
  auto resolve = [&](const std::string& s) -> std::optional<Vertex> {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == s) return static_cast<Vertex>(i);
    }
    return std::nullopt;
  };
  const Permutation p = ParseCycles("(1 2)(3 4)", 5, resolve);
  CHECK(p[0] == 1);
  CHECK(p[2] == 3);
  CHECK(p[4] == 4);
  CHECK(p.Support() == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(FormatCycles(p, labels) == "(1 2)(3 4)");
  CHECK(p.Then(p).IsIdentity());
  CHECK(FormatCycles(Permutation::Identity(5), labels) == "()");
  const Permutation q = ParseCycles("(1 2 3)", 5, resolve);
  CHECK(q.Inverse().Then(q).IsIdentity());
  CHECK(q.Then(q)[0] == 2);
  CHECK_THROWS_AS(ParseCycles("(1 2)(2 3)", 5, resolve), ParseError);
  CHECK_THROWS_AS(ParseCycles("(1 9)", 5, resolve), ParseError);
  CHECK_THROWS_AS(ParseCycles("(1 2", 5, resolve), ParseError);
}
