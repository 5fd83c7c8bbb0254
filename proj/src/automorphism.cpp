#include "symnet/automorphism.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "refiner.hpp"
#include "symnet/error.hpp"
#include "symnet/union_find.hpp"

namespace symnet {

namespace {

using detail::Refiner;
using detail::RoundWeight;

bool SameWeight(double a, double b) { return a == b || RoundWeight(a) == RoundWeight(b); }

// Checks only rows and columns of moved vertices; rows of fixed vertices are
// covered through the symmetric column check.
bool VerifyMoves(const Graph& g, const Permutation& s) {
  for (auto [x, y] : s.moves()) {
    if (g.out_degree(x) != g.out_degree(y)) return false;
    for (const Graph::Entry& e : g.out(x)) {
      if (!SameWeight(e.weight, g.weight(y, s[e.target]))) return false;
    }
    if (g.directed()) {
      if (g.in(x).size() != g.in(y).size()) return false;
      for (const Graph::Entry& e : g.in(x)) {
        if (!SameWeight(e.weight, g.weight(s[e.target], y))) return false;
      }
    }
  }
  return true;
}

std::vector<std::pair<int, int>> MergeIntervals(std::vector<std::pair<int, int>> splits) {
  std::vector<std::pair<int, int>> iv;
  for (auto [s, l] : splits) iv.emplace_back(s, s + l);
  std::sort(iv.begin(), iv.end());
  std::vector<std::pair<int, int>> merged;
  for (auto [b, e] : iv) {
    if (!merged.empty() && b <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, e);
    } else {
      merged.emplace_back(b, e);
    }
  }
  return merged;
}

class Search {
 public:
  Search(const Graph& g, SearchStats* stats) : g_(g), refiner_(g), stats_(stats) {}

  GeneratorSet Run() {
    const std::size_t n = g_.num_vertices();
    GeneratorSet result;
    result.n = n;
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    refiner_.Reset({all});

    // First path down to a discrete leaf.
    while (!refiner_.Discrete()) {
      Level level;
      level.target = refiner_.TargetCell();
      level.target_len = refiner_.cell_length(level.target);
      level.mark = refiner_.Mark();
      level.chosen = *std::min_element(refiner_.elements().begin() + level.target,
                                       refiner_.elements().begin() + level.target + level.target_len);
      level.hash = refiner_.Individualize(level.chosen);
      level.cells = refiner_.num_cells();
      path_.push_back(level);
      Count(&SearchStats::tree_nodes);
    }
    first_leaf_ = refiner_.elements();

    UnionFind orbits(n);
    BigInt order = 1;
    for (std::size_t k = path_.size(); k-- > 0;) {
      const Level& level = path_[k];
      refiner_.Undo(level.mark);
      TakeSnapshot(level.chosen);
      std::vector<Vertex> candidates(refiner_.elements().begin() + level.target,
                                     refiner_.elements().begin() + level.target + level.target_len);
      std::sort(candidates.begin(), candidates.end());
      std::vector<Vertex> failed;
      for (Vertex w : candidates) {
        if (orbits.Find(w) == orbits.Find(level.chosen)) continue;
        bool known_bad = false;
        for (Vertex f : failed) known_bad = known_bad || orbits.Find(f) == orbits.Find(w);
        if (known_bad) continue;
        auto gamma = TryBranch(k, w);
        if (!gamma) {
          failed.push_back(w);
          continue;
        }
        for (auto [from, to] : gamma->moves()) orbits.Union(from, to);
        result.generators.push_back(std::move(*gamma));
      }
      order *= orbits.SizeOf(level.chosen);
    }
    result.known_order = order;
    return result;
  }

 private:
  struct Level {
    int target = 0;
    int target_len = 0;
    std::size_t mark = 0;
    Vertex chosen = 0;
    std::uint64_t hash = 0;
    int cells = 0;
  };
  struct Frame {
    std::size_t depth;
    std::size_t mark;
    std::vector<Vertex> candidates;
    std::size_t next = 0;
  };

  void Count(std::size_t SearchStats::*field) {
    if (stats_) ++(stats_->*field);
  }

  // Records the cells touched when the first-path vertex is individualized.
  void TakeSnapshot(Vertex chosen) {
    const std::size_t mark = refiner_.Mark();
    refiner_.Individualize(chosen);
    snap_intervals_ = MergeIntervals(refiner_.SplitsSince(mark));
    snap_elements_.clear();
    snap_cell_start_.clear();
    snap_cell_len_.clear();
    for (auto [b, e] : snap_intervals_) {
      for (int p = b; p < e; ++p) {
        const Vertex v = refiner_.elements()[p];
        snap_elements_.push_back(v);
        snap_cell_start_.push_back(refiner_.cell_start(v));
        snap_cell_len_.push_back(refiner_.cell_length(refiner_.cell_start(v)));
      }
    }
    refiner_.Undo(mark);
  }

  bool Matches(std::size_t depth, std::uint64_t hash) const {
    return hash == path_[depth].hash && refiner_.num_cells() == path_[depth].cells;
  }

  std::optional<Permutation> TryBranch(std::size_t k, Vertex w) {
    const std::size_t mark = refiner_.Mark();
    const std::uint64_t hash = refiner_.Individualize(w);
    Count(&SearchStats::tree_nodes);
    std::optional<Permutation> result;
    if (Matches(k, hash)) {
      result = QuickCandidate(mark);
      if (result) {
        Count(&SearchStats::quick_hits);
      } else {
        result = DeepSearch(k + 1);
      }
    }
    refiner_.Undo(mark);
    return result;
  }

  // Guesses the automorphism that differs from the identity only on the
  // cells split by this individualization.
  std::optional<Permutation> QuickCandidate(std::size_t mark) {
    if (MergeIntervals(refiner_.SplitsSince(mark)) != snap_intervals_) return std::nullopt;
    std::vector<Permutation::Move> moves;
    std::size_t idx = 0;
    std::vector<Vertex> a_cell, b_cell;
    for (auto [b, e] : snap_intervals_) {
      for (int p = b; p < e; ++p, ++idx) {
        const Vertex a = snap_elements_[idx];
        const Vertex x = refiner_.elements()[p];
        const int start = refiner_.cell_start(x);
        const int len = refiner_.cell_length(start);
        if (start != snap_cell_start_[idx] || len != snap_cell_len_[idx]) return std::nullopt;
        if (len == 1) {
          if (a != x) moves.emplace_back(a, x);
        } else if (p == start) {
          a_cell.assign(snap_elements_.begin() + static_cast<std::ptrdiff_t>(idx),
                        snap_elements_.begin() + static_cast<std::ptrdiff_t>(idx) + len);
          b_cell.assign(refiner_.elements().begin() + p, refiner_.elements().begin() + p + len);
          std::sort(a_cell.begin(), a_cell.end());
          std::sort(b_cell.begin(), b_cell.end());
          if (a_cell != b_cell) return std::nullopt;
        }
      }
    }
    Permutation gamma;
    try {
      gamma = Permutation::FromMoves(g_.num_vertices(), std::move(moves));
    } catch (const ContractError&) {
      return std::nullopt;
    }
    if (gamma.IsIdentity() || !VerifyMoves(g_, gamma)) return std::nullopt;
    return gamma;
  }

  std::optional<Permutation> LeafCandidate() {
    Count(&SearchStats::leaves);
    std::vector<Permutation::Move> moves;
    const auto& leaf = refiner_.elements();
    for (std::size_t p = 0; p < leaf.size(); ++p) {
      if (first_leaf_[p] != leaf[p]) moves.emplace_back(first_leaf_[p], leaf[p]);
    }
    Permutation gamma = Permutation::FromMoves(g_.num_vertices(), std::move(moves));
    if (gamma.IsIdentity() || !VerifyMoves(g_, gamma)) return std::nullopt;
    return gamma;
  }

  bool OpenNode(std::size_t depth, std::vector<Frame>& stack) {
    const int target = refiner_.TargetCell();
    if (depth >= path_.size() || target != path_[depth].target ||
        refiner_.cell_length(target) != path_[depth].target_len) {
      return false;
    }
    Frame f{depth, refiner_.Mark(), {}, 0};
    f.candidates.assign(refiner_.elements().begin() + target,
                        refiner_.elements().begin() + target + path_[depth].target_len);
    std::sort(f.candidates.begin(), f.candidates.end());
    stack.push_back(std::move(f));
    return true;
  }

  // Exhaustive search below the current node for a leaf equivalent to the
  // first leaf, pruning on trace mismatches.
  std::optional<Permutation> DeepSearch(std::size_t depth) {
    if (refiner_.Discrete()) return LeafCandidate();
    std::vector<Frame> stack;
    const std::size_t base_mark = refiner_.Mark();
    if (!OpenNode(depth, stack)) return std::nullopt;
    std::optional<Permutation> found;
    while (!stack.empty() && !found) {
      Frame& f = stack.back();
      if (f.next == f.candidates.size()) {
        refiner_.Undo(f.mark);
        stack.pop_back();
        continue;
      }
      refiner_.Undo(f.mark);
      const Vertex u = f.candidates[f.next++];
      const std::size_t d = f.depth;
      const std::uint64_t hash = refiner_.Individualize(u);
      Count(&SearchStats::tree_nodes);
      if (!Matches(d, hash)) continue;
      if (refiner_.Discrete()) {
        found = LeafCandidate();
        continue;
      }
      OpenNode(d + 1, stack);
    }
    refiner_.Undo(base_mark);
    return found;
  }

  const Graph& g_;
  Refiner refiner_;
  SearchStats* stats_;
  std::vector<Level> path_;
  std::vector<Vertex> first_leaf_;
  std::vector<std::pair<int, int>> snap_intervals_;
  std::vector<Vertex> snap_elements_;
  std::vector<int> snap_cell_start_;
  std::vector<int> snap_cell_len_;
};

}  // namespace

OrderedPartition RefineEquitable(const Graph& g, const OrderedPartition& p) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::size_t count = 0;
  for (const auto& cell : p.cells) {
    for (Vertex v : cell) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) {
        throw ContractError("cells do not partition the vertex set");
      }
      seen[v] = 1;
      ++count;
    }
  }
  if (count != n) throw ContractError("cells do not partition the vertex set");
  if (n == 0) return {};
  Refiner r(g);
  r.Reset(p.cells);
  return {r.Cells()};
}

GeneratorSet FindGenerators(const Graph& g, SearchStats* stats) {
  if (g.num_vertices() <= 1) return {g.num_vertices(), {}, BigInt(1)};
  Search search(g, stats);
  return search.Run();
}

bool VerifyAutomorphism(const Graph& g, const Permutation& s) {
  if (s.size() != g.num_vertices()) throw ContractError("permutation length does not match graph");
  return VerifyMoves(g, s);
}

BigInt SchreierSimsOrder(const std::vector<Permutation>& generators, std::size_t n) {
  UnionFind uf(n);
  for (const Permutation& p : generators) {
    if (p.size() != n) throw ContractError("generator degree mismatch");
    const auto& mv = p.moves();
    for (std::size_t k = 1; k < mv.size(); ++k) uf.Union(mv[0].first, mv[k].first);
  }
  std::map<int, std::vector<const Permutation*>> classes;
  for (const Permutation& p : generators) {
    if (!p.IsIdentity()) classes[uf.Find(p.moves()[0].first)].push_back(&p);
  }
  BigInt order = 1;
  for (const auto& [root, members] : classes) {
    std::vector<Vertex> points;
    for (const Permutation* p : members) {
      for (auto [from, to] : p->moves()) points.push_back(from);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::unordered_map<Vertex, int> local;
    for (std::size_t i = 0; i < points.size(); ++i) local[points[i]] = static_cast<int>(i);
    std::vector<StabilizerChain::Perm> gens;
    for (const Permutation* p : members) {
      StabilizerChain::Perm q(points.size());
      std::iota(q.begin(), q.end(), 0);
      for (auto [from, to] : p->moves()) q[local[from]] = local[to];
      gens.push_back(std::move(q));
    }
    order *= StabilizerChain(points.size(), gens).Order();
  }
  return order;
}

BigInt GroupOrder(const GeneratorSet& gs) {
  if (gs.known_order) return *gs.known_order;
  return SchreierSimsOrder(gs.generators, gs.n);
}

int Log10Floor(const BigInt& x) {
  if (x < 1) throw ContractError("logarithm of a non-positive number");
  return static_cast<int>(x.str().size()) - 1;
}

namespace {

GeneratorSet ReadGenerators(std::istream& in, std::size_t n, const LabelResolver& resolve,
                            const Graph* verify_against) {
  GeneratorSet gs;
  gs.n = n;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Permutation p;
    try {
      p = ParseCycles(line, n, resolve);
    } catch (const ContractError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (p.IsIdentity()) continue;
    if (verify_against && !VerifyAutomorphism(*verify_against, p)) {
      throw ContractError("line " + std::to_string(line_no) + ": not an automorphism");
    }
    gs.generators.push_back(std::move(p));
  }
  return gs;
}

}  // namespace

GeneratorSet ImportGenerators(std::istream& in, const Graph& g) {
  return ReadGenerators(
      in, g.num_vertices(), [&g](const std::string& label) { return g.index_of(label); }, &g);
}

GeneratorSet ImportGenerators(std::istream& in, std::size_t n) {
  return ReadGenerators(
      in, n,
      [n](const std::string& label) -> std::optional<Vertex> {
        if (!IsIntegerLabel(label) || label.size() > 9) return std::nullopt;
        long v = std::stol(label);
        if (v < 1 || static_cast<std::size_t>(v) > n) return std::nullopt;
        return static_cast<Vertex>(v - 1);
      },
      nullptr);
}

void ExportGenerators(const GeneratorSet& gs, const Graph& g, std::ostream& out) {
  for (const Permutation& p : gs.generators) out << FormatCycles(p, g.labels()) << '\n';
}

}  // namespace symnet
