#include "symnet/measures.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "symnet/error.hpp"
#include "symnet/parallel.hpp"
#include "symnet/spectral.hpp"

namespace symnet {

namespace {

void RequireUndirected(const Graph& g, const char* what) {
  if (g.directed()) throw ContractError(std::string(what) + " needs an undirected graph");
}

void RequireConnected(const Graph& g, const char* what) {
  if (!IsConnected(g)) throw ContractError(std::string(what) + " needs a connected graph");
}

std::vector<int> Bfs(const Graph& g, Vertex source) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const auto& e : g.out(v)) {
      if (dist[e.target] < 0) {
        dist[e.target] = dist[v] + 1;
        queue.push_back(e.target);
      }
    }
  }
  return dist;
}

DenseMatrix FromEigen(const DenseMatrix& u, const Eigen::VectorXd& fd) {
  DenseMatrix out = u * fd.asDiagonal() * u.transpose();
  return 0.5 * (out + out.transpose());
}

}  // namespace

DenseMatrix MeasureNetwork::dense() const {
  if (const auto* m = std::get_if<DenseMatrix>(&matrix)) return *m;
  return std::get<Graph>(matrix).dense();
}

MeasureNetwork Laplacian(const Graph& g) {
  RequireUndirected(g, "laplacian");
  std::vector<Triplet> t;
  for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
    double degree = 0.0;
    double loop = 0.0;
    for (const auto& e : g.out(v)) {
      degree += e.weight;
      if (e.target == v) {
        loop = e.weight;
      } else if (v < e.target) {
        t.push_back({v, e.target, -e.weight});
      }
    }
    t.push_back({v, v, degree - loop});
  }
  return {Graph::FromTriplets(g.num_vertices(), false, t, g.labels()), MeasureKind::kSparse};
}

DenseMatrix MotifLaplacian(const SymmetricMotif& m, const Graph& g) {
  RequireUndirected(g, "motif laplacian");
  const auto k = static_cast<Eigen::Index>(m.vertices.size());
  DenseMatrix out = DenseMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Vertex v = m.vertices[static_cast<std::size_t>(i)];
    for (const auto& e : g.out(v)) {
      if (e.target == v) continue;
      out(i, i) += e.weight;
      auto it = std::lower_bound(m.vertices.begin(), m.vertices.end(), e.target);
      if (it != m.vertices.end() && *it == e.target) out(i, it - m.vertices.begin()) -= e.weight;
    }
  }
  return out;
}

double AnalyticFunction::operator()(double x) const {
  switch (kind) {
    case Kind::kExp:
      return std::exp(x);
    case Kind::kPolynomial: {
      double acc = 0.0;
      for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
      return acc;
    }
    case Kind::kResolvent:
      return 1.0 / (1.0 - t * x);
  }
  return 0.0;
}

namespace {

void CheckResolvent(const AnalyticFunction& f, const Eigen::VectorXd& values) {
  if (f.kind != AnalyticFunction::Kind::kResolvent || values.size() == 0) return;
  const double rho = values.cwiseAbs().maxCoeff();
  if (std::abs(f.t) * rho >= 1.0) {
    throw ContractError("resolvent parameter t=" + FormatDouble(f.t) +
                        " outside the convergence region |t| < " + FormatDouble(1.0 / rho));
  }
}

Eigen::VectorXd Map(const AnalyticFunction& f, const Eigen::VectorXd& values) {
  CheckResolvent(f, values);
  return values.unaryExpr([&f](double x) { return f(x); });
}

}  // namespace

MeasureNetwork Communicability(const Graph& g, const GeometricDecomposition& d,
                               const AnalyticFunction& f) {
  RequireUndirected(g, "communicability");
  const SymEigenDecomposition es = SymmetryEig(g, OrbitMap(d), d);
  return {FromEigen(es.vectors, Map(f, es.values)), MeasureKind::kFull};
}

DenseMatrix ApplySymmetric(const DenseMatrix& a, const AnalyticFunction& f) {
  const DenseEigen es = EigSymmetric(a);
  return FromEigen(es.vectors, Map(f, es.values));
}

bool QuotientCommutationCheck(const Graph& g, const CharacteristicMap& cmap,
                              const AnalyticFunction& f, double tol) {
  RequireUndirected(g, "commutation check");
  // Q = L^{-1/2} Q_sym L^{1/2}, so f(Q) = L^{-1/2} f(Q_sym) L^{1/2}.
  const DenseMatrix q_sym = DenseMatrix(SymmetricQuotient(g, cmap).B);
  const DenseMatrix f_sym = ApplySymmetric(q_sym, f);
  Eigen::VectorXd root(static_cast<Eigen::Index>(cmap.num_orbits()));
  for (std::size_t k = 0; k < cmap.num_orbits(); ++k) {
    root(static_cast<Eigen::Index>(k)) = std::sqrt(static_cast<double>(cmap.orbit_sizes[k]));
  }
  const DenseMatrix f_q = root.cwiseInverse().asDiagonal() * f_sym * root.asDiagonal();
  const DenseMatrix q_f = DenseMatrix(Quotient(ApplySymmetric(g.dense(), f), cmap).B);
  return (f_q - q_f).cwiseAbs().maxCoeff() <= tol;
}

int DistanceTable::operator()(Vertex u, Vertex v) const {
  const int mu = motif_of[u];
  if (mu >= 0 && mu == motif_of[v]) {
    const std::size_t k = motif_vertices[static_cast<std::size_t>(mu)].size();
    return motif_distance[static_cast<std::size_t>(mu)]
                         [static_cast<std::size_t>(index_in_motif[u]) * k +
                          static_cast<std::size_t>(index_in_motif[v])];
  }
  return between_orbits(orbit_of[u], orbit_of[v]);
}

DenseMatrix DistanceTable::dense() const {
  const auto n = static_cast<Eigen::Index>(size());
  DenseMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = (*this)(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return out;
}

DistanceTable ShortestPathsQuotient(const Graph& g, const GeometricDecomposition& d) {
  RequireUndirected(g, "shortest paths");
  if (g.is_weighted()) throw ContractError("shortest paths need an unweighted graph");
  RequireConnected(g, "shortest paths");
  if (d.n != g.num_vertices()) throw ContractError("decomposition does not match graph");

  DistanceTable t;
  const CharacteristicMap cmap = OrbitMap(d);
  t.orbit_of = cmap.orbit_of;
  t.orbit_sizes = cmap.orbit_sizes;
  t.motif_of = d.motif_of;
  t.orbit_motif.resize(cmap.num_orbits());
  for (std::size_t k = 0; k < cmap.num_orbits(); ++k) t.orbit_motif[k] = d.motif_of[cmap.members[k].front()];

  const Graph skeleton = Skeleton(Quotient(g, cmap));
  const std::size_t m = cmap.num_orbits();
  t.orbit_distance.assign(m * m, 0);
  ParallelFor(m, [&](std::size_t k) {
    const std::vector<int> dist = Bfs(skeleton, static_cast<Vertex>(k));
    std::copy(dist.begin(), dist.end(), t.orbit_distance.begin() + static_cast<std::ptrdiff_t>(k * m));
  });

  t.index_in_motif.assign(g.num_vertices(), -1);
  t.motif_distance.resize(d.motifs.size());
  std::vector<std::pair<int, int>> sources;  // (motif, index in motif)
  for (std::size_t mi = 0; mi < d.motifs.size(); ++mi) {
    const VertexSet& vs = d.motifs[mi].vertices;
    t.motif_vertices.push_back(vs);
    t.motif_distance[mi].assign(vs.size() * vs.size(), 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      t.index_in_motif[vs[i]] = static_cast<int>(i);
      sources.emplace_back(static_cast<int>(mi), static_cast<int>(i));
    }
  }
  ParallelFor(sources.size(), [&](std::size_t s) {
    const auto [mi, i] = sources[s];
    const VertexSet& vs = t.motif_vertices[static_cast<std::size_t>(mi)];
    const std::vector<int> dist = Bfs(g, vs[static_cast<std::size_t>(i)]);
    auto& row = t.motif_distance[static_cast<std::size_t>(mi)];
    for (std::size_t j = 0; j < vs.size(); ++j) row[static_cast<std::size_t>(i) * vs.size() + j] = dist[vs[j]];
  });
  return t;
}

std::vector<double> Closeness(const DistanceTable& t, bool exact) {
  const std::size_t n = t.size();
  const std::size_t m = t.num_orbits();
  // Per orbit: sum of distances to every vertex outside its own motif.
  std::vector<double> outer(m, 0.0);
  ParallelFor(m, [&](std::size_t k) {
    const int own = t.orbit_motif[k];
    double acc = 0.0;
    for (std::size_t l = 0; l < m; ++l) {
      if (own >= 0 && t.orbit_motif[l] == own) continue;
      acc += static_cast<double>(t.orbit_sizes[l]) * t.between_orbits(static_cast<int>(k), static_cast<int>(l));
    }
    outer[k] = acc;
  });
  std::vector<double> cc(n);
  for (std::size_t v = 0; v < n; ++v) {
    double acc = outer[static_cast<std::size_t>(t.orbit_of[v])];
    const int mi = t.motif_of[v];
    if (exact && mi >= 0) {
      const std::size_t k = t.motif_vertices[static_cast<std::size_t>(mi)].size();
      const auto& row = t.motif_distance[static_cast<std::size_t>(mi)];
      const std::size_t base = static_cast<std::size_t>(t.index_in_motif[v]) * k;
      for (std::size_t j = 0; j < k; ++j) acc += row[base + j];
    }
    cc[v] = acc / static_cast<double>(n);
  }
  return cc;
}

std::vector<double> DegreeQuotient(const QuotientNetwork& q) {
  std::vector<double> out(static_cast<std::size_t>(q.B.rows()), 0.0);
  for (Eigen::Index k = 0; k < q.B.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(q.B, k); it; ++it) out[static_cast<std::size_t>(k)] += it.value();
  }
  return out;
}

std::vector<double> EigenvectorCentrality(const Graph& g, const CharacteristicMap& cmap) {
  RequireUndirected(g, "eigenvector centrality");
  RequireConnected(g, "eigenvector centrality");
  for (const Triplet& t : g.triplets()) {
    if (t.weight < 0) throw ContractError("eigenvector centrality needs nonnegative weights");
  }
  const SparseMatrix b = SymmetricQuotient(g, cmap).B;
  const auto m = static_cast<Eigen::Index>(cmap.num_orbits());
  Eigen::VectorXd w;
  if (m <= 3000) {
    const DenseEigen es = EigSymmetric(DenseMatrix(b));
    w = es.vectors.col(m - 1);
  } else {
    // Shifting by I makes the iteration converge on bipartite graphs too.
    w = Eigen::VectorXd::Ones(m).normalized();
    for (int iter = 0; iter < 100000; ++iter) {
      Eigen::VectorXd next = b * w + w;
      next.normalize();
      const double change = (next - w).cwiseAbs().maxCoeff();
      w = std::move(next);
      if (change < 1e-14) break;
    }
  }
  std::vector<double> v(g.num_vertices());
  double norm = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int k = cmap.orbit_of[i];
    v[i] = w(k) / std::sqrt(static_cast<double>(cmap.orbit_sizes[static_cast<std::size_t>(k)]));
    norm += v[i] * v[i];
    sum += v[i];
  }
  const double scale = (sum < 0 ? -1.0 : 1.0) / std::sqrt(norm);
  for (double& x : v) x *= scale;
  return v;
}

MeasureNetwork ResistanceDistance(const Graph& g, const GeometricDecomposition& d) {
  RequireUndirected(g, "resistance distance");
  RequireConnected(g, "resistance distance");
  const DenseMatrix l = Laplacian(g).dense();
  const SymEigenDecomposition es = SymmetryEig(l, OrbitMap(d), d);
  const double cutoff = 1e-9 * std::max(1.0, es.values.cwiseAbs().maxCoeff());
  const Eigen::VectorXd inv =
      es.values.unaryExpr([cutoff](double x) { return std::abs(x) <= cutoff ? 0.0 : 1.0 / x; });
  const DenseMatrix pinv = FromEigen(es.vectors, inv);
  const Eigen::VectorXd diag = pinv.diagonal();
  const auto n = l.rows();
  DenseMatrix r = diag.replicate(1, n) + diag.transpose().replicate(n, 1) - 2.0 * pinv;
  r.diagonal().setZero();
  return {DenseMatrix(0.5 * (r + r.transpose())), MeasureKind::kFull};
}

std::vector<double> VertexCompress(const std::vector<double>& v, const CharacteristicMap& cmap,
                                   double tol) {
  if (v.size() != cmap.num_vertices()) throw ContractError("vertex measure has the wrong length");
  std::vector<double> w(cmap.num_orbits());
  for (std::size_t k = 0; k < cmap.num_orbits(); ++k) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sum = 0.0;
    for (Vertex u : cmap.members[k]) {
      lo = std::min(lo, v[u]);
      hi = std::max(hi, v[u]);
      sum += v[u];
    }
    if (hi - lo > tol * std::max(1.0, std::max(std::abs(lo), std::abs(hi)))) {
      throw ContractError("vertex measure is not constant on orbit " + std::to_string(k) +
                          " (vertex index " + std::to_string(cmap.members[k].front()) + ")");
    }
    w[k] = sum / static_cast<double>(cmap.orbit_sizes[k]);
  }
  return w;
}

std::vector<double> VertexDecompress(const std::vector<double>& w, const CharacteristicMap& cmap) {
  if (w.size() != cmap.num_orbits()) throw ContractError("orbit measure has the wrong length");
  std::vector<double> v(cmap.num_vertices());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = w[static_cast<std::size_t>(cmap.orbit_of[i])];
  return v;
}

EccentricityReport Eccentricity(const DistanceTable& t) {
  const std::size_t m = t.num_orbits();
  std::vector<int> outer(m, 0);
  ParallelFor(m, [&](std::size_t k) {
    const int own = t.orbit_motif[k];
    int best = 0;
    for (std::size_t l = 0; l < m; ++l) {
      if (own >= 0 && t.orbit_motif[l] == own) continue;
      best = std::max(best, t.between_orbits(static_cast<int>(k), static_cast<int>(l)));
    }
    outer[k] = best;
  });
  EccentricityReport r;
  r.eccentricity.resize(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) {
    int e = outer[static_cast<std::size_t>(t.orbit_of[v])];
    const int mi = t.motif_of[v];
    if (mi >= 0) {
      const std::size_t k = t.motif_vertices[static_cast<std::size_t>(mi)].size();
      const auto& row = t.motif_distance[static_cast<std::size_t>(mi)];
      const std::size_t base = static_cast<std::size_t>(t.index_in_motif[v]) * k;
      for (std::size_t j = 0; j < k; ++j) e = std::max(e, row[base + j]);
    }
    r.eccentricity[v] = e;
  }
  if (!r.eccentricity.empty()) {
    r.radius = *std::min_element(r.eccentricity.begin(), r.eccentricity.end());
    r.diameter = *std::max_element(r.eccentricity.begin(), r.eccentricity.end());
  }
  return r;
}

}  // namespace symnet
