#include "symnet/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace symnet {

Graph PlantedSymmetryGraph(const PlantedOptions& options, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t core = std::max<std::size_t>(options.core_vertices, 2);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
  };
  std::set<std::pair<Vertex, Vertex>> core_edges;
  auto add_core = [&](Vertex a, Vertex b) {
    if (a != b) core_edges.emplace(std::min(a, b), std::max(a, b));
  };
  // Random recursive tree keeps the core connected; extra edges raise the degree.
  for (std::size_t v = 1; v < core; ++v) add_core(static_cast<Vertex>(v), static_cast<Vertex>(rng() % v));
  const auto target =
      static_cast<std::size_t>(options.core_mean_degree * static_cast<double>(core) / 2.0);
  for (std::size_t tries = 0; core_edges.size() < target && tries < 20 * target; ++tries) {
    add_core(static_cast<Vertex>(rng() % core), static_cast<Vertex>(rng() % core));
  }

  std::vector<Triplet> edges;
  for (auto [a, b] : core_edges) {
    double w = options.random_weights ? static_cast<double>(uniform(1, 3)) : 1.0;
    edges.push_back({a, b, w});
  }
  auto next = static_cast<Vertex>(core);
  auto core_vertex = [&] { return static_cast<Vertex>(rng() % core); };
  auto copies = [&] { return uniform(2, std::max<std::size_t>(2, options.max_copies)); };

  for (std::size_t t = 0; t < options.twin_leaves + options.twin_cliques; ++t) {
    const bool clique = t >= options.twin_leaves;
    std::vector<Vertex> anchors{core_vertex()};
    if (rng() % 3 == 0) anchors.push_back(core_vertex());
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    std::vector<Vertex> twins;
    for (std::size_t c = copies(); c > 0; --c) twins.push_back(next++);
    for (Vertex x : twins) {
      for (Vertex a : anchors) edges.push_back({x, a, 1.0});
    }
    if (clique) {
      for (std::size_t i = 0; i < twins.size(); ++i) {
        for (std::size_t j = i + 1; j < twins.size(); ++j) edges.push_back({twins[i], twins[j], 1.0});
      }
    }
  }
  auto hang_paths = [&](std::size_t count, std::size_t length) {
    for (std::size_t t = 0; t < count; ++t) {
      const Vertex anchor = core_vertex();
      for (std::size_t c = copies(); c > 0; --c) {
        Vertex prev = anchor;
        for (std::size_t s = 0; s < length; ++s) {
          edges.push_back({prev, next, 1.0});
          prev = next++;
        }
      }
    }
  };
  hang_paths(options.pendant_paths, 2);
  hang_paths(options.pendant_3paths, 3);
  for (std::size_t t = 0; t < options.wheels; ++t) {
    const Vertex hub = core_vertex();
    const std::size_t len = uniform(5, 6);
    const Vertex first = next;
    for (std::size_t s = 0; s < len; ++s) {
      const Vertex v = next++;
      edges.push_back({v, hub, 1.0});
      edges.push_back({v, s + 1 < len ? v + 1 : first, 1.0});
    }
  }
  return Graph::FromTriplets(static_cast<std::size_t>(next), false, edges);
}

}  // namespace symnet
