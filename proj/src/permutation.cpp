#include "symnet/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "symnet/error.hpp"

namespace symnet {

Permutation::Permutation(const std::vector<Vertex>& image) : n_(image.size()) {
  std::vector<char> seen(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    Vertex v = image[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n_ || seen[v]) {
      throw ContractError("image is not a bijection");
    }
    seen[v] = 1;
    if (v != static_cast<Vertex>(i)) moves_.emplace_back(static_cast<Vertex>(i), v);
  }
}

Permutation Permutation::FromMoves(std::size_t n, std::vector<Move> moves) {
  std::sort(moves.begin(), moves.end());
  Permutation p;
  p.n_ = n;
  std::vector<Vertex> images;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    auto [from, to] = moves[k];
    if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= n ||
        static_cast<std::size_t>(to) >= n || (k > 0 && moves[k - 1].first == from)) {
      throw ContractError("moves do not define a permutation");
    }
    if (from != to) {
      p.moves_.push_back(moves[k]);
      images.push_back(to);
    }
  }
  // A partial map is a bijection iff its images are exactly its moved points.
  std::sort(images.begin(), images.end());
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (images[k] != p.moves_[k].first) throw ContractError("moves do not define a permutation");
  }
  return p;
}

Permutation Permutation::Identity(std::size_t n) {
  Permutation p;
  p.n_ = n;
  return p;
}

Vertex Permutation::operator[](Vertex i) const {
  auto it = std::lower_bound(moves_.begin(), moves_.end(), i,
                             [](const Move& m, Vertex v) { return m.first < v; });
  return (it != moves_.end() && it->first == i) ? it->second : i;
}

std::vector<Vertex> Permutation::image() const {
  std::vector<Vertex> img(n_);
  std::iota(img.begin(), img.end(), 0);
  for (auto [from, to] : moves_) img[from] = to;
  return img;
}

bool Permutation::IsIdentity() const { return moves_.empty(); }

std::vector<Vertex> Permutation::Support() const {
  std::vector<Vertex> s;
  s.reserve(moves_.size());
  for (auto [from, to] : moves_) s.push_back(from);
  return s;
}

Permutation Permutation::Inverse() const {
  std::vector<Move> inv;
  inv.reserve(moves_.size());
  for (auto [from, to] : moves_) inv.emplace_back(to, from);
  std::sort(inv.begin(), inv.end());
  Permutation p;
  p.n_ = n_;
  p.moves_ = std::move(inv);
  return p;
}

Permutation Permutation::Then(const Permutation& other) const {
  if (other.size() != size()) throw ContractError("permutation degree mismatch");
  std::vector<Vertex> points = Support();
  for (auto [from, to] : other.moves_) points.push_back(from);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Permutation p;
  p.n_ = n_;
  for (Vertex v : points) {
    Vertex w = other[(*this)[v]];
    if (w != v) p.moves_.emplace_back(v, w);
  }
  return p;
}

std::vector<std::vector<Vertex>> Permutation::Cycles() const {
  std::vector<std::vector<Vertex>> cycles;
  std::unordered_set<Vertex> done;
  for (auto [start, unused] : moves_) {
    if (done.count(start)) continue;
    std::vector<Vertex> cycle;
    Vertex v = start;
    do {
      cycle.push_back(v);
      v = (*this)[v];
    } while (v != start);
    done.insert(cycle.begin(), cycle.end());
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::string FormatCycles(const Permutation& p, const std::vector<std::string>& labels) {
  auto cycles = p.Cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += labels.empty() ? std::to_string(cycle[k] + 1) : labels[cycle[k]];
    }
    out += ')';
  }
  return out;
}

Permutation ParseCycles(const std::string& text, std::size_t n, const LabelResolver& resolve) {
  std::vector<Permutation::Move> moves;
  std::unordered_set<Vertex> used;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<Vertex> cycle;
    while (true) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
      if (i >= text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != ',' &&
             text[i] != ')' && text[i] != '(') {
        ++i;
      }
      std::string token = text.substr(start, i - start);
      auto v = resolve(token);
      if (!v || *v < 0 || static_cast<std::size_t>(*v) >= n) {
        throw ParseError("point '" + token + "' out of range");
      }
      if (!used.insert(*v).second) throw ParseError("point '" + token + "' repeated");
      cycle.push_back(*v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      moves.emplace_back(cycle[k], cycle[(k + 1) % cycle.size()]);
    }
    skip_space();
  }
  return Permutation::FromMoves(n, std::move(moves));
}

}  // namespace symnet
