#include "symnet/symmetry.hpp"

#include <chrono>

namespace symnet {

SymmetryAnalysis Analyze(const Graph& g, const GeneratorSet* supplied) {
  using Clock = std::chrono::steady_clock;
  SymmetryAnalysis a;
  auto t0 = Clock::now();
  a.generators = supplied ? *supplied : FindGenerators(g);
  auto t1 = Clock::now();
  a.decomposition = Decompose(a.generators);
  a.orbits = OrbitMap(a.decomposition);
  auto t2 = Clock::now();
  a.t_generators = std::chrono::duration<double>(t1 - t0).count();
  a.t_decomposition = std::chrono::duration<double>(t2 - t1).count();
  return a;
}

}  // namespace symnet
