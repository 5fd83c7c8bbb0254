#pragma once

#include <cstddef>
#include <cstdint>

#include "symnet/graph.hpp"

namespace symnet {

// Random connected graph with planted symmetric motifs hung off a random core.
struct PlantedOptions {
  std::size_t core_vertices = 60;
  double core_mean_degree = 3.0;
  std::size_t max_copies = 4;       // copies per motif, at least 2
  std::size_t twin_leaves = 4;      // one-orbit motifs with an empty orbit
  std::size_t twin_cliques = 2;     // one-orbit motifs with a complete orbit
  std::size_t pendant_paths = 3;    // two-orbit motifs: copies of a hanging 2-path
  std::size_t pendant_3paths = 1;   // three-orbit motifs: copies of a hanging 3-path
  std::size_t wheels = 1;           // complex motifs: a cycle whose vertices share a hub
  bool random_weights = false;      // integer weights 1..3 on core edges
};

Graph PlantedSymmetryGraph(const PlantedOptions& options, std::uint64_t seed);

}  // namespace symnet
