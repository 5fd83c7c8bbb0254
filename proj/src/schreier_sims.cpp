#include "symnet/schreier_sims.hpp"

#include <algorithm>

#include "symnet/error.hpp"

namespace symnet {

int StabilizerChain::Sparse::operator()(int x) const {
  auto it = std::lower_bound(moves.begin(), moves.end(), x,
                             [](const std::pair<int, int>& m, int v) { return m.first < v; });
  return it != moves.end() && it->first == x ? it->second : x;
}

StabilizerChain::Sparse StabilizerChain::Compose(const Sparse& first, const Sparse& second) {
  if (first.moves.empty()) return second;
  if (second.moves.empty()) return first;
  Sparse r;
  r.moves.reserve(first.moves.size() + second.moves.size());
  auto emit = [&](int x) {
    const int y = second(first(x));
    if (y != x) r.moves.emplace_back(x, y);
  };
  auto a = first.moves.begin();
  auto b = second.moves.begin();
  while (a != first.moves.end() || b != second.moves.end()) {
    if (b == second.moves.end() || (a != first.moves.end() && a->first < b->first)) {
      emit((a++)->first);
    } else if (a == first.moves.end() || b->first < a->first) {
      emit((b++)->first);
    } else {
      emit(a->first);
      ++a;
      ++b;
    }
  }
  return r;
}

StabilizerChain::Sparse StabilizerChain::Invert(const Sparse& p) {
  Sparse r;
  r.moves.reserve(p.moves.size());
  for (auto [from, to] : p.moves) r.moves.emplace_back(to, from);
  std::sort(r.moves.begin(), r.moves.end());
  return r;
}

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Perm>& generators)
    : degree_(degree) {
  std::vector<Sparse> gens;
  for (const Perm& g : generators) {
    if (g.size() != degree) throw ContractError("generator degree mismatch");
    Sparse s;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] != static_cast<int>(i)) s.moves.emplace_back(static_cast<int>(i), g[i]);
    }
    if (!s.moves.empty()) gens.push_back(std::move(s));
  }
  for (const Sparse& g : gens) {
    bool fixes_base = true;
    for (const Level& l : levels_) fixes_base = fixes_base && g(l.base_point) == l.base_point;
    if (fixes_base) AddBasePoint(g.moves.front().first);
  }
  for (Sparse& g : gens) {
    const std::size_t pooled = AddToPool(std::move(g));
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      AddGenerator(l, pooled);
      const int b = levels_[l].base_point;
      if (pool_[pooled](b) != b) break;
    }
  }

  // Check every Schreier generator, deepest level first; restart from the
  // deepest level touched whenever a new strong generator is added.
  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    for (std::size_t s = 0; s < levels_[i].gens.size() && !restarted; ++s) {
      while (levels_[i].checked[s] < levels_[i].orbit.size()) {
        const Level& level = levels_[i];
        const int p = level.orbit[level.checked[s]];
        const int q = gen(level, s)(p);
        ++levels_[i].checked[s];
        // Tree edges give the identity by construction.
        if (level.parent_gen.at(q) == static_cast<int>(s) && inverse_gen(level, s)(q) == p) continue;
        Sparse h = Compose(Compose(Transversal(level, p), gen(level, s)),
                           Invert(Transversal(level, q)));
        if (h.moves.empty()) continue;
        const std::size_t j = Strip(h, static_cast<std::size_t>(i) + 1);
        if (j == levels_.size() && h.moves.empty()) continue;
        if (j == levels_.size()) AddBasePoint(h.moves.front().first);
        const std::size_t pooled = AddToPool(std::move(h));
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) AddGenerator(l, pooled);
        i = static_cast<long>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

void StabilizerChain::AddBasePoint(int point) {
  Level level;
  level.base_point = point;
  level.parent_gen[point] = -2;
  level.orbit.push_back(point);
  levels_.push_back(std::move(level));
}

std::size_t StabilizerChain::AddToPool(Sparse g) {
  inverse_pool_.push_back(Invert(g));
  pool_.push_back(std::move(g));
  return pool_.size() - 1;
}

void StabilizerChain::AddGenerator(std::size_t index, std::size_t pooled) {
  Level& level = levels_[index];
  level.gens.push_back(pooled);
  level.checked.push_back(0);
  ExtendOrbit(level, level.gens.size() - 1);
}

void StabilizerChain::ExtendOrbit(Level& level, std::size_t first_new_gen) {
  auto visit = [&](int from, std::size_t s) {
    const int q = gen(level, s)(from);
    if (level.parent_gen.emplace(q, static_cast<int>(s)).second) level.orbit.push_back(q);
  };
  const std::size_t old_size = level.orbit.size();
  for (std::size_t idx = 0; idx < old_size; ++idx) {
    for (std::size_t s = first_new_gen; s < level.gens.size(); ++s) visit(level.orbit[idx], s);
  }
  for (std::size_t idx = old_size; idx < level.orbit.size(); ++idx) {
    for (std::size_t s = 0; s < level.gens.size(); ++s) visit(level.orbit[idx], s);
  }
}

// Element mapping the base point to point.
StabilizerChain::Sparse StabilizerChain::Transversal(const Level& level, int point) const {
  std::vector<std::size_t> path;
  for (int p = point;;) {
    const int s = level.parent_gen.at(p);
    if (s < 0) break;
    path.push_back(static_cast<std::size_t>(s));
    p = inverse_gen(level, static_cast<std::size_t>(s))(p);
  }
  Sparse u;
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = Compose(u, gen(level, *it));
  return u;
}

std::size_t StabilizerChain::Strip(Sparse& p, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    if (p.moves.empty()) return levels_.size();
    const int base = levels_[l].base_point;
    const int image = p(base);
    if (image == base) continue;
    if (!levels_[l].parent_gen.count(image)) return l;
    p = Compose(p, Invert(Transversal(levels_[l], image)));
  }
  return levels_.size();
}

BigInt StabilizerChain::Order() const {
  BigInt order = 1;
  for (const Level& l : levels_) order *= l.orbit.size();
  return order;
}

bool StabilizerChain::Contains(const Perm& p) const {
  if (p.size() != degree_) return false;
  Sparse h;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= static_cast<int>(degree_)) return false;
    if (p[i] != static_cast<int>(i)) h.moves.emplace_back(static_cast<int>(i), p[i]);
  }
  return Strip(h, 0) == levels_.size() && h.moves.empty();
}

std::vector<int> StabilizerChain::Base() const {
  std::vector<int> base;
  for (const Level& l : levels_) base.push_back(l.base_point);
  return base;
}

std::vector<std::size_t> StabilizerChain::BasicOrbitSizes() const {
  std::vector<std::size_t> sizes;
  for (const Level& l : levels_) sizes.push_back(l.orbit.size());
  return sizes;
}

}  // namespace symnet
