#include "symnet/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "json_util.hpp"
#include "symnet/parallel.hpp"
#include "symnet/schreier_sims.hpp"
#include "symnet/union_find.hpp"

namespace symnet {

namespace {

Orbits CollectOrbits(UnionFind& uf, const VertexSet& points) {
  std::map<int, VertexSet> by_root;
  for (Vertex v : points) by_root[uf.Find(v)].push_back(v);
  Orbits orbits;
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return orbits;
}

BigInt Factorial(std::size_t k) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

Orbits OrbitPartition(const GeneratorSet& gs) {
  UnionFind uf(gs.n);
  for (const Permutation& p : gs.generators) {
    for (auto [from, to] : p.moves()) uf.Union(from, to);
  }
  VertexSet all(gs.n);
  std::iota(all.begin(), all.end(), 0);
  return CollectOrbits(uf, all);
}

Orbits MotifOrbits(const SymmetricMotif& m) {
  if (m.vertices.empty()) return {};
  const Vertex hi = m.vertices.back();
  UnionFind uf(static_cast<std::size_t>(hi) + 1);
  for (const Permutation& p : m.local_generators) {
    for (auto [from, to] : p.moves()) uf.Union(from, to);
  }
  return CollectOrbits(uf, m.vertices);
}

int MotifType(const SymmetricMotif& m) {
  if (m.orbits.empty()) return 0;
  const std::size_t k = m.orbits.front().size();
  for (const VertexSet& o : m.orbits) {
    if (o.size() != k) return 0;
  }
  if (k <= 2) return static_cast<int>(k);
  const BigInt full = Factorial(k);
  for (const VertexSet& orbit : m.orbits) {
    std::unordered_map<Vertex, int> local;
    for (std::size_t i = 0; i < orbit.size(); ++i) local[orbit[i]] = static_cast<int>(i);
    std::vector<StabilizerChain::Perm> induced;
    bool all_transpositions = true;
    for (const Permutation& p : m.local_generators) {
      StabilizerChain::Perm q(k);
      std::iota(q.begin(), q.end(), 0);
      std::size_t moved = 0;
      for (auto [from, to] : p.moves()) {
        auto it = local.find(from);
        if (it == local.end()) continue;
        q[it->second] = local.at(to);
        ++moved;
      }
      if (moved == 0) continue;
      all_transpositions = all_transpositions && moved == 2;
      induced.push_back(std::move(q));
    }
    // Transpositions acting transitively generate the full symmetric group.
    if (all_transpositions) continue;
    if (StabilizerChain(k, induced).Order() != full) return 0;
  }
  return static_cast<int>(k);
}

GeometricDecomposition Decompose(const GeneratorSet& gs) {
  GeometricDecomposition d;
  d.n = gs.n;
  d.motif_of.assign(gs.n, -1);
  UnionFind uf(gs.n);
  std::vector<char> moved(gs.n, 0);
  for (const Permutation& p : gs.generators) {
    const auto& mv = p.moves();
    for (std::size_t k = 0; k < mv.size(); ++k) {
      moved[mv[k].first] = 1;
      if (k > 0) uf.Union(mv[0].first, mv[k].first);
    }
  }
  std::map<int, std::size_t> root_to_motif;
  std::vector<std::pair<Vertex, int>> firsts;
  for (std::size_t v = 0; v < gs.n; ++v) {
    if (!moved[v]) {
      d.fixed_points.push_back(static_cast<Vertex>(v));
      continue;
    }
    int root = uf.Find(static_cast<int>(v));
    auto [it, inserted] = root_to_motif.emplace(root, d.motifs.size());
    if (inserted) d.motifs.emplace_back();
    d.motifs[it->second].vertices.push_back(static_cast<Vertex>(v));
    d.motif_of[v] = static_cast<int>(it->second);
  }
  for (const Permutation& p : gs.generators) {
    if (p.IsIdentity()) continue;
    d.motifs[d.motif_of[p.moves()[0].first]].local_generators.push_back(p);
  }
  ParallelFor(d.motifs.size(), [&](std::size_t i) {
    d.motifs[i].orbits = MotifOrbits(d.motifs[i]);
    d.motifs[i].type = MotifType(d.motifs[i]);
  });
  return d;
}

std::string DecompositionToJson(const GeometricDecomposition& d, const Graph& g) {
  nlohmann::json motifs = nlohmann::json::array();
  for (const SymmetricMotif& m : d.motifs) {
    nlohmann::json orbits = nlohmann::json::array();
    for (const VertexSet& o : m.orbits) orbits.push_back(detail::LabelList(g, o));
    motifs.push_back(
        {{"vertices", detail::LabelList(g, m.vertices)}, {"orbits", orbits}, {"type", m.type}});
  }
  nlohmann::json doc = {{"fixed_points", detail::LabelList(g, d.fixed_points)},
                        {"motifs", motifs}};
  return doc.dump();
}

}  // namespace symnet
