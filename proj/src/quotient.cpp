#include "symnet/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "symnet/error.hpp"

namespace symnet {

namespace {

template <typename Visit>
void ForEachEntry(const Graph& g, Visit&& visit) {
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    for (const Graph::Entry& e : g.out(static_cast<Vertex>(i))) {
      visit(static_cast<Vertex>(i), e.target, e.weight);
    }
  }
}

template <typename Visit>
void ForEachEntry(const DenseMatrix& a, Visit&& visit) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != 0.0) visit(static_cast<Vertex>(i), static_cast<Vertex>(j), a(i, j));
    }
  }
}

struct BlockSum {
  int k;
  int l;
  double sum;
};

// Sums of a over orbit blocks V_k x V_l, sorted by (k, l), zeros omitted.
std::vector<BlockSum> BlockSums(const Graph& g, const CharacteristicMap& cmap) {
  std::vector<BlockSum> raw;
  raw.reserve(g.num_entries());
  ForEachEntry(g, [&](Vertex i, Vertex j, double w) {
    raw.push_back({cmap.orbit_of[i], cmap.orbit_of[j], w});
  });
  std::sort(raw.begin(), raw.end(), [](const BlockSum& a, const BlockSum& b) {
    return a.k != b.k ? a.k < b.k : a.l < b.l;
  });
  std::vector<BlockSum> out;
  for (const BlockSum& e : raw) {
    if (!out.empty() && out.back().k == e.k && out.back().l == e.l) {
      out.back().sum += e.sum;
    } else {
      out.push_back(e);
    }
  }
  std::erase_if(out, [](const BlockSum& e) { return e.sum == 0.0; });
  return out;
}

std::vector<BlockSum> BlockSums(const DenseMatrix& a, const CharacteristicMap& cmap) {
  const auto m = static_cast<Eigen::Index>(cmap.num_orbits());
  DenseMatrix as = DenseMatrix::Zero(a.rows(), m);
  for (Eigen::Index j = 0; j < a.cols(); ++j) as.col(cmap.orbit_of[j]) += a.col(j);
  DenseMatrix sums = DenseMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < a.rows(); ++i) sums.row(cmap.orbit_of[i]) += as.row(i);
  std::vector<BlockSum> out;
  for (Eigen::Index k = 0; k < m; ++k) {
    for (Eigen::Index l = 0; l < m; ++l) {
      if (sums(k, l) != 0.0) out.push_back({static_cast<int>(k), static_cast<int>(l), sums(k, l)});
    }
  }
  return out;
}

template <typename Source>
QuotientNetwork BuildQuotient(const Source& a, std::size_t n, const CharacteristicMap& cmap,
                              bool symmetric) {
  if (n != cmap.num_vertices()) throw ContractError("partition does not cover the matrix");
  std::vector<BlockSum> sums = BlockSums(a, cmap);
  if (symmetric) {
    // For symmetric input the two mirrored block sums agree up to rounding;
    // averaging them makes the result exactly symmetric.
    auto find = [&](int k, int l) -> const BlockSum* {
      auto it = std::lower_bound(sums.begin(), sums.end(), std::make_pair(k, l),
                                 [](const BlockSum& e, std::pair<int, int> key) {
                                   return std::make_pair(e.k, e.l) < key;
                                 });
      return (it != sums.end() && it->k == k && it->l == l) ? &*it : nullptr;
    };
    bool mirrored = true;
    for (const BlockSum& e : sums) {
      const BlockSum* t = find(e.l, e.k);
      if (!t || std::abs(t->sum - e.sum) > 1e-12 * std::max(std::abs(e.sum), std::abs(t->sum))) {
        mirrored = false;
        break;
      }
    }
    if (mirrored) {
      std::vector<double> avg(sums.size());
      for (std::size_t i = 0; i < sums.size(); ++i) {
        avg[i] = sums[i].k == sums[i].l ? sums[i].sum
                                        : 0.5 * (sums[i].sum + find(sums[i].l, sums[i].k)->sum);
      }
      for (std::size_t i = 0; i < sums.size(); ++i) sums[i].sum = avg[i];
    }
  }
  std::vector<Eigen::Triplet<double>> ts;
  for (const BlockSum& e : sums) {
    const double nk = static_cast<double>(cmap.orbit_sizes[e.k]);
    const double nl = static_cast<double>(cmap.orbit_sizes[e.l]);
    const double b = symmetric ? e.sum / std::sqrt(nk * nl) : e.sum / nk;
    if (b != 0.0) ts.emplace_back(e.k, e.l, b);
  }
  const auto m = static_cast<Eigen::Index>(cmap.num_orbits());
  QuotientNetwork q;
  q.B.resize(m, m);
  q.B.setFromTriplets(ts.begin(), ts.end());
  q.cmap = cmap;
  q.symmetric_variant = symmetric;
  return q;
}

template <typename Source>
bool CheckEquitable(const Source& a, std::size_t n, const CharacteristicMap& cmap, double tol) {
  if (n != cmap.num_vertices()) throw ContractError("partition does not cover the matrix");
  QuotientNetwork q = BuildQuotient(a, n, cmap, false);
  // Row i of AS, accumulated per vertex.
  std::vector<std::map<int, double>> rows(n);
  ForEachEntry(a, [&](Vertex i, Vertex j, double w) { rows[i][cmap.orbit_of[j]] += w; });
  for (std::size_t i = 0; i < n; ++i) {
    const int k = cmap.orbit_of[i];
    for (SparseMatrix::InnerIterator it(q.B, k); it; ++it) {
      auto r = rows[i].find(static_cast<int>(it.col()));
      const double as = r == rows[i].end() ? 0.0 : r->second;
      if (std::abs(as - it.value()) > tol) return false;
    }
    for (const auto& [l, as] : rows[i]) {
      if (std::abs(as - q.B.coeff(k, l)) > tol) return false;
    }
  }
  return true;
}

template <typename Source>
SparseMatrix SumMatrix(const Source& a, std::size_t n, const CharacteristicMap& cmap) {
  if (n != cmap.num_vertices()) throw ContractError("partition does not cover the matrix");
  std::vector<Eigen::Triplet<double>> ts;
  for (const BlockSum& e : BlockSums(a, cmap)) ts.emplace_back(e.k, e.l, e.sum);
  const auto m = static_cast<Eigen::Index>(cmap.num_orbits());
  SparseMatrix b(m, m);
  b.setFromTriplets(ts.begin(), ts.end());
  return b;
}

}  // namespace

SparseMatrix OrbitBlockSums(const Graph& g, const CharacteristicMap& cmap) {
  return SumMatrix(g, g.num_vertices(), cmap);
}

SparseMatrix OrbitBlockSums(const DenseMatrix& a, const CharacteristicMap& cmap) {
  if (a.rows() != a.cols()) throw ContractError("matrix is not square");
  return SumMatrix(a, static_cast<std::size_t>(a.rows()), cmap);
}

SparseMatrix CharacteristicMap::S() const {
  std::vector<Eigen::Triplet<double>> ts;
  for (std::size_t i = 0; i < orbit_of.size(); ++i) {
    ts.emplace_back(static_cast<int>(i), orbit_of[i], 1.0);
  }
  SparseMatrix s(static_cast<Eigen::Index>(num_vertices()), static_cast<Eigen::Index>(num_orbits()));
  s.setFromTriplets(ts.begin(), ts.end());
  return s;
}

CharacteristicMap MakeCharacteristicMap(const Orbits& partition, std::size_t n) {
  CharacteristicMap c;
  c.orbit_of.assign(n, -1);
  std::size_t covered = 0;
  for (const VertexSet& cell : partition) {
    if (cell.empty()) throw ContractError("empty cell in partition");
    VertexSet sorted = cell;
    std::sort(sorted.begin(), sorted.end());
    c.members.push_back(std::move(sorted));
  }
  std::sort(c.members.begin(), c.members.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  for (std::size_t k = 0; k < c.members.size(); ++k) {
    for (Vertex v : c.members[k]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw ContractError("vertex out of range");
      if (c.orbit_of[v] != -1) throw ContractError("cells overlap");
      c.orbit_of[v] = static_cast<int>(k);
      ++covered;
    }
    c.orbit_sizes.push_back(c.members[k].size());
  }
  if (covered != n) throw ContractError("cells do not cover all vertices");
  return c;
}

CharacteristicMap OrbitMap(const GeometricDecomposition& d) {
  Orbits cells;
  for (const SymmetricMotif& m : d.motifs) cells.insert(cells.end(), m.orbits.begin(), m.orbits.end());
  for (Vertex v : d.fixed_points) cells.push_back({v});
  return MakeCharacteristicMap(cells, d.n);
}

CharacteristicMap BasicMap(const GeometricDecomposition& d) {
  Orbits cells;
  for (const SymmetricMotif& m : d.motifs) {
    if (m.basic()) {
      cells.insert(cells.end(), m.orbits.begin(), m.orbits.end());
    } else {
      for (Vertex v : m.vertices) cells.push_back({v});
    }
  }
  for (Vertex v : d.fixed_points) cells.push_back({v});
  return MakeCharacteristicMap(cells, d.n);
}

QuotientNetwork Quotient(const Graph& g, const CharacteristicMap& cmap) {
  return BuildQuotient(g, g.num_vertices(), cmap, false);
}

QuotientNetwork Quotient(const DenseMatrix& a, const CharacteristicMap& cmap) {
  if (a.rows() != a.cols()) throw ContractError("matrix is not square");
  return BuildQuotient(a, static_cast<std::size_t>(a.rows()), cmap, false);
}

QuotientNetwork SymmetricQuotient(const Graph& g, const CharacteristicMap& cmap) {
  return BuildQuotient(g, g.num_vertices(), cmap, true);
}

QuotientNetwork SymmetricQuotient(const DenseMatrix& a, const CharacteristicMap& cmap) {
  if (a.rows() != a.cols()) throw ContractError("matrix is not square");
  return BuildQuotient(a, static_cast<std::size_t>(a.rows()), cmap, true);
}

QuotientNetwork BasicQuotient(const Graph& g, const GeometricDecomposition& d) {
  return Quotient(g, BasicMap(d));
}

bool VerifyEquitable(const Graph& g, const CharacteristicMap& cmap, double tol) {
  return CheckEquitable(g, g.num_vertices(), cmap, tol);
}

bool VerifyEquitable(const DenseMatrix& a, const CharacteristicMap& cmap, double tol) {
  return CheckEquitable(a, static_cast<std::size_t>(a.rows()), cmap, tol);
}

Graph Skeleton(const QuotientNetwork& q) {
  std::vector<Triplet> edges;
  for (Eigen::Index k = 0; k < q.B.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(q.B, k); it; ++it) {
      if (it.row() != it.col() && it.value() != 0.0) {
        edges.push_back({static_cast<Vertex>(it.row()), static_cast<Vertex>(it.col()), 1.0});
      }
    }
  }
  return Graph::FromTriplets(q.cmap.num_orbits(), false, edges);
}

}  // namespace symnet
