#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symnet/decomposition.hpp"
#include "symnet/graph.hpp"
#include "symnet/quotient.hpp"

namespace symnet {

struct OrbitAnnotation {
  int orbit = 0;  // orbit id in the basic map
  double beta = 0.0;
};

// Alignment between two orbits of one basic motif: row perm[k] of the second
// orbit holds the distinct value delta against member k of the first.
struct PairAnnotation {
  int motif = 0;
  int orbit1 = 0;
  int orbit2 = 0;
  double delta = 0.0;
  std::vector<Vertex> perm;
};

struct RawBlock {
  int motif = 0;
  std::vector<Vertex> vertices;
  DenseMatrix values;
};

struct Annotation {
  std::vector<OrbitAnnotation> orbits;
  std::vector<PairAnnotation> pairs;  // ordered pairs, both directions
  std::vector<RawBlock> raw_blocks;
};

struct CompressedMeasure {
  SparseMatrix B;  // S^T A S over the basic map
  CharacteristicMap cmap;
  Annotation annotation;
  std::vector<std::string> labels;
};

// B = S^T A S, no Lambda scaling.
SparseMatrix AverageCompress(const DenseMatrix& a, const CharacteristicMap& cmap);
SparseMatrix AverageCompress(const Graph& g, const CharacteristicMap& cmap);
// a_ij = B_kl / (n_k n_l).
DenseMatrix AverageDecompress(const SparseMatrix& b, const CharacteristicMap& cmap);

// Exact codec for measures of a graph with decomposition d. Basic motifs with
// one or two orbits are annotated; other motifs are kept as raw blocks.
CompressedMeasure LosslessCompress(const DenseMatrix& a, const GeometricDecomposition& d,
                                   std::vector<std::string> labels = {});
DenseMatrix LosslessDecompress(const CompressedMeasure& c);

struct CompressionRatios {
  std::size_t n_g = 0;
  std::size_t m_g = 0;
  std::size_t n_q = 0;
  std::size_t m_q = 0;
  double n_ratio = 1.0;  // n_Q / n_G
  double m_ratio = 1.0;  // m_Q / m_G
  double c_full = 1.0;   // (n_Q / n_G)^2
  double c_sparse = 1.0; // m_Q / m_G
};

// m_Q counts nonzero upper-triangle entries plus loops of the orbit quotient.
CompressionRatios ComputeCompressionRatios(const GeometricDecomposition& d, const Graph& g);

}  // namespace symnet
