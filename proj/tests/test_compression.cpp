#include <doctest.h>

#include <sstream>

#include "support/oracles.hpp"
#include "symnet/compression.hpp"
#include "symnet/container.hpp"
#include "symnet/error.hpp"
#include "symnet/generators.hpp"
#include "symnet/measures.hpp"

using namespace symnet;

namespace {

PlantedOptions Small() {
  PlantedOptions o;
  o.core_vertices = 20;
  return o;
}

}  // namespace

TEST_CASE("fixture compression ratios") {
  const Graph g = ParseEdgeList("1 3\n2 4\n3 5\n4 5\n");
  const GeometricDecomposition d = Decompose(FindGenerators(g));
  const CompressionRatios r = ComputeCompressionRatios(d, g);
  CHECK(r.n_q == 3);
  CHECK(r.n_ratio == doctest::Approx(0.6));
  CHECK(r.c_full == doctest::Approx(0.36));
  CHECK(r.m_q == 2);
  CHECK(r.m_ratio == doctest::Approx(0.5));
}

TEST_CASE("lossless codec on the fixture") {
  const Graph g = ParseEdgeList("1 3\n2 4\n3 5\n4 5\n");
  const GeometricDecomposition d = Decompose(FindGenerators(g));
  const DenseMatrix a = g.dense();
  const CompressedMeasure c = LosslessCompress(a, d, g.labels());
  CHECK(c.B.rows() == 3);
  CHECK(c.annotation.orbits.size() == 2);
  CHECK(c.annotation.pairs.size() == 2);
  CHECK(LosslessDecompress(c) == a);
  const DenseMatrix e = Communicability(g, d, AnalyticFunction::Exp()).dense();
  CHECK((LosslessDecompress(LosslessCompress(e, d)) - e).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("lossless codec on planted graphs") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    PlantedOptions o = Small();
    o.random_weights = seed % 2 == 0;
    const Graph g = PlantedSymmetryGraph(o, seed);
    const GeometricDecomposition d = Decompose(FindGenerators(g));
    const DenseMatrix a = g.dense();
    CHECK(LosslessDecompress(LosslessCompress(a, d)) == a);
    const DenseMatrix dist = ShortestPathsQuotient(Graph::FromDense((a.array() != 0).cast<double>()), d).dense();
    CHECK(LosslessDecompress(LosslessCompress(dist, d)) == dist);
  }
}

TEST_CASE("average compression against orbit means") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    PlantedOptions o = Small();
    o.core_vertices = 10;
    const Graph g = PlantedSymmetryGraph(o, seed);
    const GeometricDecomposition d = Decompose(FindGenerators(g));
    const CharacteristicMap cmap = OrbitMap(d);
    const DenseMatrix e = Communicability(g, d, AnalyticFunction::Exp()).dense();
    const DenseMatrix avg = AverageDecompress(AverageCompress(e, cmap), cmap);
    const DenseMatrix oracle = oracle::OrbitMeans(e, cmap.orbit_of);
    const double scale = e.cwiseAbs().maxCoeff();
    CHECK((avg - oracle).cwiseAbs().maxCoeff() <= 1e-12 * scale);
    for (Eigen::Index i = 0; i < e.rows(); ++i) {
      for (Eigen::Index j = 0; j < e.cols(); ++j) {
        const int mi = d.motif_of[static_cast<std::size_t>(i)];
        if (mi >= 0 && mi == d.motif_of[static_cast<std::size_t>(j)]) continue;
        CHECK(std::abs(avg(i, j) - e(i, j)) <= 1e-12 * scale);
      }
    }
    const DenseMatrix a = g.dense();
    CHECK((DenseMatrix(AverageCompress(g, cmap)) - DenseMatrix(AverageCompress(a, cmap))).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("container round trip is exact") {
  const Graph g = PlantedSymmetryGraph(Small(), 5);
  const GeometricDecomposition d = Decompose(FindGenerators(g));
  const DenseMatrix e = Communicability(g, d, AnalyticFunction::Exp()).dense();
  const CompressedMeasure c = LosslessCompress(e, d, g.labels());
  std::stringstream buf;
  WriteCompressed(c, buf, "exp");
  std::string measure;
  const CompressedMeasure back = ReadCompressed(buf, &measure);
  CHECK(measure == "exp");
  CHECK(back.labels == g.labels());
  CHECK(LosslessDecompress(back) == LosslessDecompress(c));
}

TEST_CASE("container errors") {
  std::istringstream junk("not json");
  CHECK_THROWS_AS(ReadCompressed(junk), ParseError);
  std::istringstream wrong(R"({"format":"other"})");
  CHECK_THROWS_AS(ReadCompressed(wrong), ParseError);
  CHECK(ParseHexDouble(HexDouble(0.1)) == 0.1);
  CHECK(ParseHexDouble(HexDouble(-3e-300)) == -3e-300);
}
