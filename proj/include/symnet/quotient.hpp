#pragma once

#include <cstddef>
#include <vector>

#include "symnet/decomposition.hpp"
#include "symnet/graph.hpp"

namespace symnet {

// The characteristic matrix S and the orbit-size diagonal of a partition,
// kept as index arrays.
struct CharacteristicMap {
  std::vector<int> orbit_of;
  std::vector<std::size_t> orbit_sizes;
  Orbits members;

  std::size_t num_vertices() const { return orbit_of.size(); }
  std::size_t num_orbits() const { return orbit_sizes.size(); }
  SparseMatrix S() const;
};

// Orbits are renumbered by smallest member. Throws ContractError on
// overlapping cells or uncovered vertices.
CharacteristicMap MakeCharacteristicMap(const Orbits& partition, std::size_t n);
// All orbits of the decomposition, fixed points as singletons.
CharacteristicMap OrbitMap(const GeometricDecomposition& d);
// Orbits of basic motifs only; fixed points and complex-motif vertices are singletons.
CharacteristicMap BasicMap(const GeometricDecomposition& d);

struct QuotientNetwork {
  SparseMatrix B;
  CharacteristicMap cmap;
  bool symmetric_variant = false;
};

// S^T A S: plain block sums over V_k x V_l.
SparseMatrix OrbitBlockSums(const Graph& g, const CharacteristicMap& cmap);
SparseMatrix OrbitBlockSums(const DenseMatrix& a, const CharacteristicMap& cmap);

// b_kl = (1/n_k) * sum over V_k x V_l of a_ij.
QuotientNetwork Quotient(const Graph& g, const CharacteristicMap& cmap);
QuotientNetwork Quotient(const DenseMatrix& a, const CharacteristicMap& cmap);
// Lambda^{-1/2} S^T A S Lambda^{-1/2}.
QuotientNetwork SymmetricQuotient(const Graph& g, const CharacteristicMap& cmap);
QuotientNetwork SymmetricQuotient(const DenseMatrix& a, const CharacteristicMap& cmap);
QuotientNetwork BasicQuotient(const Graph& g, const GeometricDecomposition& d);

// max |AS - SB| <= tol with B the quotient of the same partition.
bool VerifyEquitable(const Graph& g, const CharacteristicMap& cmap, double tol = 1e-9);
bool VerifyEquitable(const DenseMatrix& a, const CharacteristicMap& cmap, double tol = 1e-8);

// Unweighted undirected graph on orbits with k~l iff b_kl != 0, loops dropped.
Graph Skeleton(const QuotientNetwork& q);

}  // namespace symnet
