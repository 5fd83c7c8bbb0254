#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "symnet/decomposition.hpp"
#include "symnet/graph.hpp"
#include "symnet/quotient.hpp"

namespace symnet {

enum class MeasureKind { kFull, kSparse };

struct MeasureNetwork {
  std::variant<DenseMatrix, Graph> matrix;
  MeasureKind kind = MeasureKind::kFull;

  DenseMatrix dense() const;
};

// L = D - A, stored sparsely with the degrees on the diagonal.
MeasureNetwork Laplacian(const Graph& g);
// Rows and columns of the Laplacian of g on the motif's vertices: the motif
// Laplacian plus the external degree of each orbit on the diagonal.
DenseMatrix MotifLaplacian(const SymmetricMotif& m, const Graph& g);

struct AnalyticFunction {
  enum class Kind { kExp, kPolynomial, kResolvent };
  Kind kind = Kind::kExp;
  std::vector<double> coefficients;  // a_0, a_1, ... for kPolynomial
  double t = 0.0;                    // (I - tA)^{-1} for kResolvent

  static AnalyticFunction Exp() { return {}; }
  static AnalyticFunction Polynomial(std::vector<double> c) { return {Kind::kPolynomial, std::move(c), 0.0}; }
  static AnalyticFunction Resolvent(double t) { return {Kind::kResolvent, {}, t}; }

  double operator()(double x) const;
};

// f(A) = U f(D) U^T with the eigendecomposition taken from SymmetryEig.
// Throws ContractError for a resolvent with |t| rho(A) >= 1.
MeasureNetwork Communicability(const Graph& g, const GeometricDecomposition& d,
                               const AnalyticFunction& f);
// Applies f to a symmetric matrix through a dense eigendecomposition.
DenseMatrix ApplySymmetric(const DenseMatrix& a, const AnalyticFunction& f);

// max |f(Q(A)) - Q(f(A))| <= tol.
bool QuotientCommutationCheck(const Graph& g, const CharacteristicMap& cmap,
                              const AnalyticFunction& f, double tol = 1e-8);

// Hop distances for all vertex pairs. Pairs in different motifs (fixed points
// count as their own motif) read the quotient skeleton distance of their
// orbits; pairs inside one motif are stored explicitly.
struct DistanceTable {
  std::vector<int> orbit_of;
  std::vector<std::size_t> orbit_sizes;
  std::vector<int> orbit_distance;  // row-major, orbits x orbits
  std::vector<int> motif_of;        // vertex -> motif, -1 for fixed points
  std::vector<int> orbit_motif;     // orbit -> motif, -1 for fixed points
  std::vector<int> index_in_motif;
  std::vector<VertexSet> motif_vertices;
  std::vector<std::vector<int>> motif_distance;  // row-major per motif

  int operator()(Vertex u, Vertex v) const;
  std::size_t size() const { return orbit_of.size(); }
  std::size_t num_orbits() const { return orbit_sizes.size(); }
  int between_orbits(int k, int l) const {
    return orbit_distance[static_cast<std::size_t>(k) * num_orbits() + static_cast<std::size_t>(l)];
  }
  DenseMatrix dense() const;
};

// Requires a connected, unweighted, undirected graph.
DistanceTable ShortestPathsQuotient(const Graph& g, const GeometricDecomposition& d);

// cc(i) = (1/n) sum_j d(i,j). The approximate variant drops the pairs inside
// the motif of i.
std::vector<double> Closeness(const DistanceTable& t, bool exact = true);

// Row sums of B for each orbit.
std::vector<double> DegreeQuotient(const QuotientNetwork& q);

// Perron vector of A from the symmetric quotient, unit norm and positive.
std::vector<double> EigenvectorCentrality(const Graph& g, const CharacteristicMap& cmap);

// r(i,j) = l+_ii + l+_jj - 2 l+_ij with L+ from SymmetryEig of L.
MeasureNetwork ResistanceDistance(const Graph& g, const GeometricDecomposition& d);

// Orbit means of an orbit-constant vertex measure. Throws ContractError
// naming the first orbit whose values differ by more than tol.
std::vector<double> VertexCompress(const std::vector<double>& v, const CharacteristicMap& cmap,
                                   double tol = 1e-9);
std::vector<double> VertexDecompress(const std::vector<double>& w, const CharacteristicMap& cmap);

struct EccentricityReport {
  std::vector<int> eccentricity;
  int radius = 0;
  int diameter = 0;
};

EccentricityReport Eccentricity(const DistanceTable& t);

}  // namespace symnet
