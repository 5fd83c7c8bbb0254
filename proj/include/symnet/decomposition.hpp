#pragma once

#include <string>
#include <vector>

#include "symnet/automorphism.hpp"
#include "symnet/graph.hpp"
#include "symnet/permutation.hpp"

namespace symnet {

using VertexSet = std::vector<Vertex>;
using Orbits = std::vector<VertexSet>;

struct SymmetricMotif {
  VertexSet vertices;  // ascending
  Orbits orbits;       // sorted by smallest member
  int type = 0;        // k for a basic motif of type k, 0 for a complex motif
  std::vector<Permutation> local_generators;

  bool basic() const { return type > 0; }
};

struct GeometricDecomposition {
  std::size_t n = 0;
  VertexSet fixed_points;
  std::vector<SymmetricMotif> motifs;  // sorted by smallest vertex
  std::vector<int> motif_of;           // vertex -> motif index, -1 for fixed points

  // Number of vertices in motifs.
  std::size_t moved_vertices() const { return n - fixed_points.size(); }
};

// Motifs are the connected components of the vertex-generator incidence
// graph; orbits and types are filled in.
GeometricDecomposition Decompose(const GeneratorSet& gs);

// Orbit partition of the whole vertex set (singletons included), canonical order.
Orbits OrbitPartition(const GeneratorSet& gs);
Orbits MotifOrbits(const SymmetricMotif& m);
// k if every orbit has size k and the motif group induces the full symmetric
// group on each orbit, 0 otherwise.
int MotifType(const SymmetricMotif& m);

// {fixed_points, motifs:[{vertices, orbits, type}]} with original labels.
std::string DecompositionToJson(const GeometricDecomposition& d, const Graph& g);

}  // namespace symnet
