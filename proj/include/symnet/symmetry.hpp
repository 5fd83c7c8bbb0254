#pragma once

#include "symnet/automorphism.hpp"
#include "symnet/decomposition.hpp"
#include "symnet/graph.hpp"
#include "symnet/quotient.hpp"

namespace symnet {

// Generators, decomposition and orbit map of one graph, with stage timings
// in seconds (t1: generators, t2: geometric decomposition).
struct SymmetryAnalysis {
  GeneratorSet generators;
  GeometricDecomposition decomposition;
  CharacteristicMap orbits;
  double t_generators = 0.0;
  double t_decomposition = 0.0;
};

// Uses the supplied generators instead of searching when given.
SymmetryAnalysis Analyze(const Graph& g, const GeneratorSet* supplied = nullptr);

}  // namespace symnet
