#include "refiner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace symnet::detail {

namespace {

std::uint64_t Mix(std::uint64_t h, std::uint64_t x) {
  std::uint64_t z = h + 0x9e3779b97f4a7c15ULL + x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

double RoundWeight(double w) {
  if (w == 0.0 || !std::isfinite(w)) return w;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", w);
  return std::strtod(buf, nullptr);
}

Refiner::Refiner(const Graph& g) : n_(g.num_vertices()) {
  std::vector<double> weights;
  for (const Triplet& t : g.triplets()) weights.push_back(RoundWeight(t.weight));
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  auto color = [&](double w) {
    return static_cast<std::uint32_t>(
        std::lower_bound(weights.begin(), weights.end(), RoundWeight(w)) - weights.begin());
  };

  // contrib_[x] lists the codes that x contributes to other vertices when x
  // lies in a splitter cell.
  contrib_offsets_.assign(n_ + 1, 0);
  for (std::size_t x = 0; x < n_; ++x) {
    const auto v = static_cast<Vertex>(x);
    if (g.directed()) {
      for (const Graph::Entry& e : g.in(v)) contrib_.push_back({e.target, 2 * color(e.weight)});
      for (const Graph::Entry& e : g.out(v)) {
        contrib_.push_back({e.target, 2 * color(e.weight) + 1});
      }
    } else {
      for (const Graph::Entry& e : g.out(v)) contrib_.push_back({e.target, color(e.weight)});
    }
    contrib_offsets_[x + 1] = contrib_.size();
  }

  elements_.resize(n_);
  pos_.resize(n_);
  cell_start_.resize(n_);
  cell_len_.assign(n_, 0);
  in_queue_.assign(n_, 0);
  sig_begin_.assign(n_, 0);
  sig_end_.assign(n_, 0);
}

std::uint64_t Refiner::Reset(const std::vector<std::vector<Vertex>>& cells) {
  trail_.clear();
  nonsingleton_.clear();
  queue_.clear();
  std::fill(in_queue_.begin(), in_queue_.end(), 0);
  num_cells_ = 0;
  int p = 0;
  for (const auto& cell : cells) {
    if (cell.empty()) continue;
    const int start = p;
    for (Vertex v : cell) {
      elements_[p] = v;
      pos_[v] = p;
      cell_start_[v] = start;
      ++p;
    }
    cell_len_[start] = static_cast<int>(cell.size());
    if (cell.size() > 1) nonsingleton_.emplace(static_cast<int>(cell.size()), start);
    ++num_cells_;
    Enqueue(start);
  }
  return Refine();
}

void Refiner::Enqueue(int start) {
  if (!in_queue_[start]) {
    in_queue_[start] = 1;
    queue_.push_back(start);
  }
}

std::uint64_t Refiner::Individualize(Vertex v) {
  const int c = cell_start_[v];
  const int len = cell_len_[c];
  std::uint64_t h = Mix(Mix(0, static_cast<std::uint64_t>(c)), static_cast<std::uint64_t>(len));
  if (len == 1) return h;
  const int pv = pos_[v];
  const Vertex u = elements_[c];
  elements_[pv] = u;
  pos_[u] = pv;
  elements_[c] = v;
  pos_[v] = c;
  SplitCell(c, len, {1, len - 1}, h);
  return Mix(h, Refine());
}

void Refiner::SplitCell(int start, int len, const std::vector<int>& part_lengths,
                        std::uint64_t& hash) {
  trail_.push_back({start, len});
  if (len > 1) nonsingleton_.erase({len, start});
  int s = start;
  for (std::size_t k = 0; k < part_lengths.size(); ++k) {
    const int l = part_lengths[k];
    cell_len_[s] = l;
    if (k > 0) {
      for (int p = s; p < s + l; ++p) cell_start_[elements_[p]] = s;
    }
    if (l > 1) nonsingleton_.emplace(l, s);
    hash = Mix(hash, static_cast<std::uint64_t>(l));
    s += l;
  }
  num_cells_ += static_cast<int>(part_lengths.size()) - 1;

  // Hopcroft's rule: a cell already waiting is replaced by all its parts,
  // otherwise every part but the first largest is enough.
  if (in_queue_[start]) {
    s = start + part_lengths[0];
    for (std::size_t k = 1; k < part_lengths.size(); ++k) {
      Enqueue(s);
      s += part_lengths[k];
    }
  } else {
    std::size_t largest = 0;
    for (std::size_t k = 1; k < part_lengths.size(); ++k) {
      if (part_lengths[k] > part_lengths[largest]) largest = k;
    }
    s = start;
    for (std::size_t k = 0; k < part_lengths.size(); ++k) {
      if (k != largest) Enqueue(s);
      s += part_lengths[k];
    }
  }
}

std::uint64_t Refiner::Refine() {
  std::uint64_t hash = 0;
  std::vector<Vertex> verts;
  std::vector<int> parts;
  while (!queue_.empty()) {
    const int w = queue_.front();
    queue_.pop_front();
    in_queue_[w] = 0;
    const int wlen = cell_len_[w];

    touched_.clear();
    for (int p = w; p < w + wlen; ++p) {
      const Vertex x = elements_[p];
      for (std::size_t k = contrib_offsets_[x]; k < contrib_offsets_[x + 1]; ++k) {
        const Code& c = contrib_[k];
        if (cell_len_[cell_start_[c.vertex]] > 1) touched_.push_back(c);
      }
    }
    if (touched_.empty()) continue;
    std::sort(touched_.begin(), touched_.end(), [this](const Code& a, const Code& b) {
      const int ca = cell_start_[a.vertex], cb = cell_start_[b.vertex];
      if (ca != cb) return ca < cb;
      if (a.vertex != b.vertex) return a.vertex < b.vertex;
      return a.code < b.code;
    });

    auto sig_compare = [this](Vertex a, Vertex b) {
      return std::lexicographical_compare(
          touched_.begin() + static_cast<std::ptrdiff_t>(sig_begin_[a]),
          touched_.begin() + static_cast<std::ptrdiff_t>(sig_end_[a]),
          touched_.begin() + static_cast<std::ptrdiff_t>(sig_begin_[b]),
          touched_.begin() + static_cast<std::ptrdiff_t>(sig_end_[b]),
          [](const Code& x, const Code& y) { return x.code < y.code; });
    };
    auto sig_equal = [&](Vertex a, Vertex b) { return !sig_compare(a, b) && !sig_compare(b, a); };
    auto sig_hash = [this](Vertex a) {
      std::uint64_t h = sig_end_[a] - sig_begin_[a];
      for (std::size_t k = sig_begin_[a]; k < sig_end_[a]; ++k) h = Mix(h, touched_[k].code);
      return h;
    };

    std::size_t i = 0;
    while (i < touched_.size()) {
      const int c = cell_start_[touched_[i].vertex];
      verts.clear();
      std::size_t j = i;
      while (j < touched_.size() && cell_start_[touched_[j].vertex] == c) {
        const Vertex v = touched_[j].vertex;
        std::size_t k = j;
        while (k < touched_.size() && touched_[k].vertex == v) ++k;
        sig_begin_[v] = j;
        sig_end_[v] = k;
        verts.push_back(v);
        j = k;
      }
      i = j;

      const int len = cell_len_[c];
      const int t = static_cast<int>(verts.size());
      if (t == len) {
        bool uniform = true;
        for (Vertex v : verts) uniform = uniform && sig_equal(v, verts[0]);
        if (uniform) continue;
      }
      // Touched vertices move to the tail; untouched ones keep the front.
      int b = c + len;
      for (Vertex v : verts) {
        --b;
        const int pv = pos_[v];
        const Vertex u = elements_[b];
        elements_[pv] = u;
        pos_[u] = pv;
        elements_[b] = v;
        pos_[v] = b;
      }
      const int tail = c + len - t;
      std::sort(elements_.begin() + tail, elements_.begin() + c + len, [&](Vertex a, Vertex b2) {
        if (sig_compare(a, b2)) return true;
        if (sig_compare(b2, a)) return false;
        return a < b2;
      });
      for (int p = tail; p < c + len; ++p) pos_[elements_[p]] = p;

      parts.clear();
      hash = Mix(hash, static_cast<std::uint64_t>(c));
      if (t < len) {
        parts.push_back(len - t);
        hash = Mix(hash, 0);
      }
      for (int p = tail; p < c + len;) {
        int q = p + 1;
        while (q < c + len && sig_equal(elements_[p], elements_[q])) ++q;
        parts.push_back(q - p);
        hash = Mix(hash, sig_hash(elements_[p]));
        p = q;
      }
      if (parts.size() > 1) SplitCell(c, len, parts, hash);
    }
  }
  return hash;
}

void Refiner::Undo(std::size_t mark) {
  while (trail_.size() > mark) {
    const SplitRecord rec = trail_.back();
    trail_.pop_back();
    int first = cell_len_[rec.start];
    if (first > 1) nonsingleton_.erase({first, rec.start});
    int parts = 1;
    for (int s = rec.start + first; s < rec.start + rec.len;) {
      const int l = cell_len_[s];
      if (l > 1) nonsingleton_.erase({l, s});
      for (int p = s; p < s + l; ++p) cell_start_[elements_[p]] = rec.start;
      s += l;
      ++parts;
    }
    cell_len_[rec.start] = rec.len;
    if (rec.len > 1) nonsingleton_.emplace(rec.len, rec.start);
    num_cells_ -= parts - 1;
  }
}

std::vector<std::pair<int, int>> Refiner::SplitsSince(std::size_t mark) const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = mark; k < trail_.size(); ++k) out.emplace_back(trail_[k].start, trail_[k].len);
  return out;
}

int Refiner::TargetCell() const {
  return nonsingleton_.empty() ? -1 : nonsingleton_.begin()->second;
}

std::vector<std::vector<Vertex>> Refiner::Cells() const {
  std::vector<std::vector<Vertex>> cells;
  for (int s = 0; s < static_cast<int>(n_); s += cell_len_[s]) {
    cells.emplace_back(elements_.begin() + s, elements_.begin() + s + cell_len_[s]);
  }
  return cells;
}

}  // namespace symnet::detail
