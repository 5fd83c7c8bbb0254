#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "symnet/error.hpp"
#include "symnet/generators.hpp"
#include "symnet/measures.hpp"
#include "symnet/spectral.hpp"

using namespace symnet;

namespace {

struct Fixture {
  Graph g = ParseEdgeList("1 3\n2 4\n3 5\n4 5\n");
  GeometricDecomposition d = Decompose(FindGenerators(g));
  CharacteristicMap cmap = OrbitMap(d);
};

// Largest |cos| between v and any redundant eigenvector.
double BestMatch(const SymEigenDecomposition& es, const Eigen::VectorXd& v) {
  double best = 0.0;
  for (Eigen::Index c = 0; c < es.vectors.cols(); ++c) {
    if (es.tags[static_cast<std::size_t>(c)] != EigenTag::kRedundant) continue;
    best = std::max(best, std::abs(es.vectors.col(c).dot(v.normalized())));
  }
  return best;
}

}  // namespace

TEST_CASE("fixture adjacency spectrum") {
  Fixture f;
  const SymEigenDecomposition es = SymmetryEig(f.g, f.cmap, f.d);
  REQUIRE(es.values.size() == 5);
  std::vector<double> red = es.RedundantValues();
  REQUIRE(red.size() == 2);
  CHECK(red[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(red[1] == doctest::Approx(1.0).epsilon(1e-12));
  Eigen::VectorXd v1(5), v2(5);
  v1 << 1, -1, 1, -1, 0;
  v2 << 1, -1, -1, 1, 0;
  CHECK(BestMatch(es, v1) > 1 - 1e-10);
  CHECK(BestMatch(es, v2) > 1 - 1e-10);
  const DenseMatrix a = f.g.dense();
  const DenseMatrix r = es.vectors * es.values.asDiagonal() * es.vectors.transpose();
  CHECK((r - a).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dense input must be symmetric") {
  DenseMatrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(EigSymmetric(m), ContractError);
}

TEST_CASE("one-orbit closed form") {
  const BsmSpectrum s = RedundantEigs1Orbit(4, 0.5, 2.0);
  REQUIRE(s.size() == 1);
  CHECK(s[0].value == 1.5);
  CHECK(s[0].multiplicity == 3);
  CHECK_THROWS_AS(RedundantEigs1Orbit(1, 0, 0), ContractError);
}

TEST_CASE("two-orbit closed form matches a dense solver") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) % 6;
    const double a1 = u(rng), b1 = u(rng), a2 = u(rng), b2 = u(rng), gamma = u(rng), delta = u(rng);
    const auto k = static_cast<Eigen::Index>(n);
    DenseMatrix m(2 * k, 2 * k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) {
        m(i, j) = i == j ? b1 : a1;
        m(k + i, k + j) = i == j ? b2 : a2;
        m(i, k + j) = m(k + j, i) = i == j ? delta : gamma;
      }
    }
    std::vector<int> orbit_of(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) orbit_of[i] = i < n ? 0 : 1;
    const std::vector<double> oracle = oracle::ZeroSumSpectrum(m, orbit_of);
    const BsmSpectrum s = RedundantEigs2Orbit(n, a1, b1, a2, b2, gamma, delta);
    std::vector<double> closed;
    for (const BsmEigenvalue& e : s) closed.insert(closed.end(), e.multiplicity, e.value);
    std::sort(closed.begin(), closed.end());
    REQUIRE(closed.size() == oracle.size());
    for (std::size_t i = 0; i < closed.size(); ++i) CHECK(std::abs(closed[i] - oracle[i]) < 1e-10);
  }
  CHECK_THROWS_AS(RedundantEigs2Orbit(3, 0, 0, 0, 0, 1, 1), ContractError);
}

TEST_CASE("fixture Laplacian and exponential") {
  Fixture f;
  const DenseMatrix l = Laplacian(f.g).dense();
  std::vector<double> red = SymmetryEig(l, f.cmap, f.d).RedundantValues();
  const double phi = (1 + std::sqrt(5.0)) / 2;
  REQUIRE(red.size() == 2);
  CHECK(red[0] == doctest::Approx(2 - phi).epsilon(1e-12));
  CHECK(red[1] == doctest::Approx(phi + 1).epsilon(1e-12));
  const DenseMatrix e = Communicability(f.g, f.d, AnalyticFunction::Exp()).dense();
  red = SymmetryEig(e, f.cmap, f.d).RedundantValues();
  REQUIRE(red.size() == 2);
  CHECK(red[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(red[1] == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("planted graphs reconstruct") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    PlantedOptions o;
    o.random_weights = seed % 2 == 1;
    const Graph g = PlantedSymmetryGraph(o, seed);
    const GeometricDecomposition d = Decompose(FindGenerators(g));
    const CharacteristicMap cmap = OrbitMap(d);
    const SymEigenDecomposition es = SymmetryEig(g, cmap, d);
    const DenseMatrix a = g.dense();
    const auto n = a.rows();
    REQUIRE(es.values.size() == n);
    CHECK((es.vectors * es.values.asDiagonal() * es.vectors.transpose() - a).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((es.vectors.transpose() * es.vectors - DenseMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-8);
    const DenseMatrix s = DenseMatrix(cmap.S());
    for (Eigen::Index c = 0; c < n; ++c) {
      if (es.tags[static_cast<std::size_t>(c)] == EigenTag::kRedundant) {
        CHECK((s.transpose() * es.vectors.col(c)).cwiseAbs().maxCoeff() < 1e-9);
      }
    }
  }
}

TEST_CASE("grouping and the spectrum report") {
  SymEigenDecomposition es;
  es.values.resize(4);
  es.values << 1.0, 1.0 + 1e-12, 2.0, 3.0;
  const auto groups = es.Grouped();
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].second == 2);
  const SpectrumReport same = DiscreteSpectrumReport({0, 1, 1, 1, 5}, {0, 1, 1, 1, 5});
  CHECK(same.fraction_explained == 1.0);
  const SpectrumReport none = DiscreteSpectrumReport({0, 1, 1, 1, 5}, {0, 1, 5});
  CHECK(none.fraction_explained == 0.0);
  const SpectrumReport star = DiscreteSpectrumReport({0, 1, 1, 1, 5}, {1, 1, 1});
  CHECK(star.fraction_explained == 1.0);
  CHECK(star.histogram.size() == 3);
  CHECK(LaplacianRedundant1Orbit(4, 1.0, false) == 1.0);
  CHECK(LaplacianRedundant1Orbit(4, 1.0, true) == 5.0);
}
