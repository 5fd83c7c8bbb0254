#include <doctest.h>

#include "support/oracles.hpp"
#include "symnet/error.hpp"
#include "symnet/generators.hpp"
#include "symnet/measures.hpp"

using namespace symnet;

namespace {

struct Analysed {
  Graph g;
  GeometricDecomposition d;
  CharacteristicMap cmap;

  explicit Analysed(const std::string& text)
      : g(ParseEdgeList(text)), d(Decompose(FindGenerators(g))), cmap(OrbitMap(d)) {}
  explicit Analysed(Graph graph) : g(std::move(graph)), d(Decompose(FindGenerators(g))), cmap(OrbitMap(d)) {}
};

const char* kFixture = "1 3\n2 4\n3 5\n4 5\n";

}  // namespace

TEST_CASE("Laplacian") {
  const Analysed f(kFixture);
  const DenseMatrix l = Laplacian(f.g).dense();
  CHECK(l(0, 0) == 1);
  CHECK(l(2, 2) == 2);
  CHECK(l(4, 4) == 2);
  CHECK(l(0, 2) == -1);
  CHECK(l.rowwise().sum().cwiseAbs().maxCoeff() == 0.0);
  CHECK(Laplacian(f.g).kind == MeasureKind::kSparse);
  const DenseMatrix lm = MotifLaplacian(f.d.motifs[0], f.g);
  CHECK(lm == l.topLeftCorner(4, 4));
  const Graph single = Graph::FromTriplets(1, false, {});
  CHECK(Laplacian(single).dense() == DenseMatrix::Zero(1, 1));
}

TEST_CASE("motif Laplacian of a star's leaves") {
  const Analysed s("1 2\n1 3\n1 4\n1 5\n");
  CHECK(MotifLaplacian(s.d.motifs[0], s.g) == DenseMatrix::Identity(4, 4));
}

TEST_CASE("communicability") {
  const Analysed f(kFixture);
  const DenseMatrix e = Communicability(f.g, f.d, AnalyticFunction::Exp()).dense();
  // Values of the matrix exponential of the path 1-3-5-4-2.
  CHECK(std::abs(e(0, 0) - 1.590637) < 1e-6);
  CHECK(std::abs(e(0, 1) - 0.047556) < 1e-6);
  CHECK(std::abs(e(4, 4) - 2.276385) < 1e-6);
  CHECK((e - e.transpose()).cwiseAbs().maxCoeff() == 0.0);
  const DenseMatrix id = Communicability(f.g, f.d, AnalyticFunction::Polynomial({0.0, 1.0})).dense();
  CHECK((id - f.g.dense()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(QuotientCommutationCheck(f.g, f.cmap, AnalyticFunction::Exp()));
  CHECK(QuotientCommutationCheck(f.g, f.cmap, AnalyticFunction::Polynomial({1.0, 2.0, 0.5})));
  CHECK_THROWS_AS(Communicability(f.g, f.d, AnalyticFunction::Resolvent(1.0)), ContractError);
  const DenseMatrix r = Communicability(f.g, f.d, AnalyticFunction::Resolvent(0.2)).dense();
  const DenseMatrix direct = (DenseMatrix::Identity(5, 5) - 0.2 * f.g.dense()).inverse();
  CHECK((r - direct).cwiseAbs().maxCoeff() < 1e-12);
  const Graph empty = Graph::FromTriplets(3, false, {});
  const Analysed e3(empty);
  CHECK((Communicability(e3.g, e3.d, AnalyticFunction::Exp()).dense() - DenseMatrix::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

TEST_CASE("commutation fails for a non-equitable split") {
  const Graph p3 = ParseEdgeList("1 2\n2 3\n");
  CHECK_FALSE(QuotientCommutationCheck(p3, MakeCharacteristicMap({{0, 1}, {2}}, 3), AnalyticFunction::Exp()));
}

TEST_CASE("shortest paths") {
  const Analysed f(kFixture);
  const DistanceTable t = ShortestPathsQuotient(f.g, f.d);
  CHECK(t(0, 4) == 2);
  CHECK(t(0, 3) == 3);
  CHECK(t(2, 2) == 0);
  const std::vector<double> cc = Closeness(t);
  CHECK(cc[4] == doctest::Approx(1.2));
  CHECK(Closeness(t, false)[4] == doctest::Approx(1.2));
  const EccentricityReport ecc = Eccentricity(t);
  CHECK(ecc.diameter == 4);
  CHECK(ecc.eccentricity[4] == 2);
  CHECK(ecc.radius == 2);

  // Double star: two centres joined, each with two leaves.
  const Analysed ds("1 2\n1 3\n1 4\n2 5\n2 6\n");
  const DistanceTable dt = ShortestPathsQuotient(ds.g, ds.d);
  CHECK(dt(2, 4) == 3);

  const Analysed k2("1 2\n");
  const std::vector<double> c2 = Closeness(ShortestPathsQuotient(k2.g, k2.d));
  CHECK(c2[0] == 0.5);
  CHECK(c2[1] == 0.5);

  const Analysed p5("1 2\n2 3\n3 4\n4 5\n");
  const EccentricityReport e5 = Eccentricity(ShortestPathsQuotient(p5.g, p5.d));
  CHECK(e5.radius == 2);
  CHECK(e5.diameter == 4);

  const Analysed disconnected("1 2\n3 4\n");
  CHECK_THROWS_AS(ShortestPathsQuotient(disconnected.g, disconnected.d), ContractError);
}

TEST_CASE("distance table matches BFS on planted graphs") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Analysed a(PlantedSymmetryGraph({}, seed));
    const DistanceTable t = ShortestPathsQuotient(a.g, a.d);
    const auto bfs = oracle::AllPairsBfs(a.g);
    bool same = true;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      for (std::size_t j = 0; j < bfs.size(); ++j) same = same && t(static_cast<Vertex>(i), static_cast<Vertex>(j)) == bfs[i][j];
    }
    CHECK(same);
  }
}

TEST_CASE("degree and vertex compression") {
  const Analysed f(kFixture);
  const std::vector<double> w = DegreeQuotient(Quotient(f.g, f.cmap));
  CHECK(w == std::vector<double>{1, 2, 2});
  const std::vector<double> v{1, 1, 2, 2, 2};
  CHECK(VertexCompress(v, f.cmap) == w);
  CHECK(VertexDecompress(w, f.cmap) == v);
  CHECK_THROWS_AS(VertexCompress({1, 2, 2, 2, 2}, f.cmap), ContractError);
}

TEST_CASE("eigenvector centrality") {
  const Analysed star("1 2\n1 3\n1 4\n1 5\n");
  const std::vector<double> v = EigenvectorCentrality(star.g, star.cmap);
  CHECK(v[0] == doctest::Approx(2.0 * v[1]));
  CHECK(v[0] == doctest::Approx(std::sqrt(0.5)));
  const Analysed k4("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  for (double x : EigenvectorCentrality(k4.g, k4.cmap)) CHECK(x == doctest::Approx(0.5));
  const Analysed f(kFixture);
  const std::vector<double> c = EigenvectorCentrality(f.g, f.cmap);
  CHECK(c[0] == c[1]);
  CHECK(c[2] == c[3]);
  const Eigen::VectorXd p = oracle::PowerIteration(f.g.dense());
  for (int i = 0; i < 5; ++i) CHECK(std::abs(c[static_cast<std::size_t>(i)] - p(i)) < 1e-8);
}

TEST_CASE("resistance distance") {
  const Analysed k2("1 2\n");
  CHECK(ResistanceDistance(k2.g, k2.d).dense()(0, 1) == doctest::Approx(1.0));
  const Analysed p3("1 2\n2 3\n");
  CHECK(ResistanceDistance(p3.g, p3.d).dense()(0, 2) == doctest::Approx(2.0));
  const Analysed a(PlantedSymmetryGraph({}, 4));
  const DenseMatrix r = ResistanceDistance(a.g, a.d).dense();
  double foster = 0.0;
  for (const Triplet& t : a.g.triplets()) {
    if (t.row < t.col) foster += r(t.row, t.col);
  }
  CHECK(foster == doctest::Approx(static_cast<double>(a.g.num_vertices() - 1)).epsilon(1e-10));
  const DenseMatrix l = Laplacian(a.g).dense();
  const DenseMatrix pinv = oracle::PseudoInverse(l);
  const auto n = l.rows();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(r(i, j) - (pinv(i, i) + pinv(j, j) - 2 * pinv(i, j))));
    }
  }
  CHECK(worst < 1e-8);
}
