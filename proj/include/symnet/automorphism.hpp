#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symnet/graph.hpp"
#include "symnet/permutation.hpp"
#include "symnet/schreier_sims.hpp"

namespace symnet {

struct OrderedPartition {
  std::vector<std::vector<Vertex>> cells;
};

struct GeneratorSet {
  std::size_t n = 0;
  std::vector<Permutation> generators;
  // Set by the search, which learns the order from its stabilizer chain.
  std::optional<BigInt> known_order;
};

// Coarsest equitable partition finer than p. Signatures are multisets of
// (neighbour cell, rounded weight, direction).
OrderedPartition RefineEquitable(const Graph& g, const OrderedPartition& p);

struct SearchStats {
  std::size_t tree_nodes = 0;
  std::size_t quick_hits = 0;
  std::size_t leaves = 0;
};

// Generators of Aut(g) by individualization-refinement with orbit pruning.
GeneratorSet FindGenerators(const Graph& g, SearchStats* stats = nullptr);

// True iff weight(s(i), s(j)) == weight(i, j) for all pairs, comparing
// weights rounded to 12 significant digits.
bool VerifyAutomorphism(const Graph& g, const Permutation& s);

// Exact group order: the cached search order if present, otherwise
// Schreier-Sims on each support-disjoint class of generators.
BigInt GroupOrder(const GeneratorSet& gs);
BigInt SchreierSimsOrder(const std::vector<Permutation>& generators, std::size_t n);
// floor(log10(x)) for x >= 1.
int Log10Floor(const BigInt& x);

// One permutation per line in cycle notation over graph labels; '#' starts a
// comment. Every generator is verified against the graph.
GeneratorSet ImportGenerators(std::istream& in, const Graph& g);
// Same format over the labels 1..n without verification.
GeneratorSet ImportGenerators(std::istream& in, std::size_t n);
void ExportGenerators(const GeneratorSet& gs, const Graph& g, std::ostream& out);

}  // namespace symnet
