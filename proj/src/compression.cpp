#include "symnet/compression.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "symnet/error.hpp"
#include "symnet/parallel.hpp"

namespace symnet {

namespace {

void CheckSquare(const DenseMatrix& a, const CharacteristicMap& cmap) {
  if (a.rows() != a.cols() || static_cast<std::size_t>(a.rows()) != cmap.num_vertices()) {
    throw ContractError("matrix dimension does not match the partition");
  }
}

// Finds delta and the alignment of orbit o2 to orbit o1 in a.
PairAnnotation AlignPair(const DenseMatrix& a, const VertexSet& o1, const VertexSet& o2,
                         double tol) {
  PairAnnotation p;
  const std::size_t n = o1.size();
  auto close = [tol](double x, double y) { return std::abs(x - y) <= tol; };
  const Vertex v1 = o1.front();
  bool uniform = true;
  for (Vertex w : o2) uniform = uniform && close(a(v1, w), a(v1, o2.front()));
  if (uniform) {
    p.delta = a(v1, o2.front());
    p.perm = o2;
    return p;
  }
  if (n == 2) {
    p.delta = a(v1, o2.front());
  } else {
    // delta is the value that occurs exactly once in the row of v1.
    bool found = false;
    for (Vertex w : o2) {
      std::size_t hits = 0;
      for (Vertex u : o2) hits += close(a(v1, u), a(v1, w)) ? 1 : 0;
      if (hits == 1) {
        p.delta = a(v1, w);
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("no uniform-join structure between motif orbits");
  }
  std::vector<char> used(o2.size(), 0);
  for (Vertex v : o1) {
    bool matched = false;
    for (std::size_t j = 0; j < o2.size(); ++j) {
      if (!used[j] && close(a(v, o2[j]), p.delta)) {
        used[j] = 1;
        p.perm.push_back(o2[j]);
        matched = true;
        break;
      }
    }
    if (!matched) throw InternalError("alignment search failed on a basic motif");
  }
  return p;
}

}  // namespace

SparseMatrix AverageCompress(const DenseMatrix& a, const CharacteristicMap& cmap) {
  CheckSquare(a, cmap);
  return OrbitBlockSums(a, cmap);
}

SparseMatrix AverageCompress(const Graph& g, const CharacteristicMap& cmap) {
  return OrbitBlockSums(g, cmap);
}

DenseMatrix AverageDecompress(const SparseMatrix& b, const CharacteristicMap& cmap) {
  const auto n = static_cast<Eigen::Index>(cmap.num_vertices());
  DenseMatrix a = DenseMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < b.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(b, k); it; ++it) {
      const double value = it.value() / (static_cast<double>(cmap.orbit_sizes[it.row()]) *
                                         static_cast<double>(cmap.orbit_sizes[it.col()]));
      for (Vertex i : cmap.members[it.row()]) {
        for (Vertex j : cmap.members[it.col()]) a(i, j) = value;
      }
    }
  }
  return a;
}

CompressedMeasure LosslessCompress(const DenseMatrix& a, const GeometricDecomposition& d,
                                   std::vector<std::string> labels) {
  CompressedMeasure c;
  c.cmap = BasicMap(d);
  CheckSquare(a, c.cmap);
  c.B = AverageCompress(a, c.cmap);
  c.labels = std::move(labels);
  const double tol = 1e-9 * std::max(1.0, a.cwiseAbs().maxCoeff());

  std::vector<Annotation> per_motif(d.motifs.size());
  ParallelFor(d.motifs.size(), [&](std::size_t mi) {
    const SymmetricMotif& m = d.motifs[mi];
    Annotation& out = per_motif[mi];
    if (m.basic() && m.orbits.size() <= 2) {
      for (const VertexSet& o : m.orbits) {
        out.orbits.push_back({c.cmap.orbit_of[o.front()], a(o.front(), o.front())});
      }
      if (m.orbits.size() == 2) {
        for (int dir = 0; dir < 2; ++dir) {
          const VertexSet& o1 = m.orbits[dir];
          const VertexSet& o2 = m.orbits[1 - dir];
          PairAnnotation p = AlignPair(a, o1, o2, tol);
          p.motif = static_cast<int>(mi);
          p.orbit1 = c.cmap.orbit_of[o1.front()];
          p.orbit2 = c.cmap.orbit_of[o2.front()];
          out.pairs.push_back(std::move(p));
        }
      }
    } else {
      RawBlock block;
      block.motif = static_cast<int>(mi);
      block.vertices = m.vertices;
      const auto k = static_cast<Eigen::Index>(m.vertices.size());
      block.values.resize(k, k);
      for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) block.values(i, j) = a(m.vertices[i], m.vertices[j]);
      }
      out.raw_blocks.push_back(std::move(block));
    }
  });
  for (Annotation& part : per_motif) {
    for (auto& o : part.orbits) c.annotation.orbits.push_back(o);
    for (auto& p : part.pairs) c.annotation.pairs.push_back(std::move(p));
    for (auto& r : part.raw_blocks) c.annotation.raw_blocks.push_back(std::move(r));
  }
  return c;
}

DenseMatrix LosslessDecompress(const CompressedMeasure& c) {
  const CharacteristicMap& cmap = c.cmap;
  DenseMatrix a = AverageDecompress(c.B, cmap);
  std::vector<double> beta(cmap.num_orbits(), 0.0);
  for (const OrbitAnnotation& o : c.annotation.orbits) {
    if (o.orbit < 0 || static_cast<std::size_t>(o.orbit) >= cmap.num_orbits()) {
      throw ContractError("annotation refers to an unknown orbit");
    }
    beta[o.orbit] = o.beta;
    const VertexSet& members = cmap.members[o.orbit];
    const double n = static_cast<double>(members.size());
    const double alpha =
        members.size() > 1 ? (c.B.coeff(o.orbit, o.orbit) / n - o.beta) / (n - 1.0) : 0.0;
    for (Vertex i : members) {
      for (Vertex j : members) a(i, j) = i == j ? o.beta : alpha;
    }
  }
  for (const PairAnnotation& p : c.annotation.pairs) {
    const VertexSet& o1 = cmap.members.at(p.orbit1);
    const VertexSet& o2 = cmap.members.at(p.orbit2);
    if (o1.size() != o2.size() || p.perm.size() != o1.size()) {
      throw ContractError("inconsistent pair annotation");
    }
    const double n = static_cast<double>(o1.size());
    const double gamma =
        o1.size() > 1 ? (c.B.coeff(p.orbit1, p.orbit2) / n - p.delta) / (n - 1.0) : p.delta;
    for (Vertex i : o1) {
      for (Vertex j : o2) a(i, j) = gamma;
    }
    for (std::size_t k = 0; k < o1.size(); ++k) a(o1[k], p.perm[k]) = p.delta;
  }
  for (const RawBlock& r : c.annotation.raw_blocks) {
    const auto k = static_cast<Eigen::Index>(r.vertices.size());
    if (r.values.rows() != k || r.values.cols() != k) throw ContractError("raw block size mismatch");
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) a(r.vertices[i], r.vertices[j]) = r.values(i, j);
    }
  }
  return a;
}

CompressionRatios ComputeCompressionRatios(const GeometricDecomposition& d, const Graph& g) {
  CompressionRatios r;
  CharacteristicMap cmap = OrbitMap(d);
  QuotientNetwork q = Quotient(g, cmap);
  std::set<std::pair<int, int>> pattern;
  for (Eigen::Index k = 0; k < q.B.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(q.B, k); it; ++it) {
      const int a = static_cast<int>(it.row()), b = static_cast<int>(it.col());
      pattern.emplace(std::min(a, b), std::max(a, b));
    }
  }
  r.n_g = g.num_vertices();
  r.m_g = g.num_edges();
  r.n_q = cmap.num_orbits();
  r.m_q = pattern.size();
  r.n_ratio = r.n_g ? static_cast<double>(r.n_q) / static_cast<double>(r.n_g) : 1.0;
  r.m_ratio = r.m_g ? static_cast<double>(r.m_q) / static_cast<double>(r.m_g) : 1.0;
  r.c_full = r.n_ratio * r.n_ratio;
  r.c_sparse = r.m_ratio;
  return r;
}

}  // namespace symnet
