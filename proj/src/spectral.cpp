#include "symnet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "symnet/error.hpp"
#include "symnet/parallel.hpp"

namespace symnet {

namespace {

struct Column {
  double value;
  EigenTag tag;
  int motif;
  std::vector<std::pair<Vertex, double>> entries;  // sparse for redundant columns
  Eigen::VectorXd dense;                            // used for quotient columns
};

struct MotifResult {
  std::vector<double> values;
  DenseMatrix vectors;  // |M| x count
};

// [begin, end) ranges of values that lie within rel_tol of their neighbour.
std::vector<std::pair<Eigen::Index, Eigen::Index>> GapClusters(const Eigen::VectorXd& sorted,
                                                               double rel_tol) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> groups;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() ||
        sorted(i) - sorted(i - 1) > rel_tol * std::max(1.0, std::abs(sorted(i)))) {
      groups.emplace_back(start, i);
      start = i;
    }
  }
  return groups;
}

// Orbit-local characteristic matrix of a motif.
DenseMatrix LocalS(const SymmetricMotif& m) {
  DenseMatrix s = DenseMatrix::Zero(static_cast<Eigen::Index>(m.vertices.size()),
                                    static_cast<Eigen::Index>(m.orbits.size()));
  for (std::size_t k = 0; k < m.orbits.size(); ++k) {
    for (Vertex v : m.orbits[k]) {
      auto it = std::lower_bound(m.vertices.begin(), m.vertices.end(), v);
      s(it - m.vertices.begin(), static_cast<Eigen::Index>(k)) = 1.0;
    }
  }
  return s;
}

// Subtracts orbit means and orthonormalizes columns that share an eigenvalue.
void Polish(const DenseMatrix& a_sm, const DenseMatrix& s_local, MotifResult& r) {
  if (r.vectors.cols() == 0) return;
  const Eigen::VectorXd sizes = s_local.colwise().sum().transpose();
  for (Eigen::Index c = 0; c < r.vectors.cols(); ++c) {
    Eigen::VectorXd means = (s_local.transpose() * r.vectors.col(c)).cwiseQuotient(sizes);
    r.vectors.col(c) -= s_local * means;
  }
  Eigen::VectorXd values = Eigen::Map<Eigen::VectorXd>(r.values.data(), static_cast<Eigen::Index>(r.values.size()));
  for (auto [b, e] : GapClusters(values, 1e-8)) {
    const Eigen::Index len = e - b;
    Eigen::HouseholderQR<DenseMatrix> qr(r.vectors.middleCols(b, len));
    DenseMatrix q = qr.householderQ() * DenseMatrix::Identity(r.vectors.rows(), len);
    r.vectors.middleCols(b, len) = q;
  }
  for (Eigen::Index c = 0; c < r.vectors.cols(); ++c) {
    r.vectors.col(c).normalize();
    r.values[static_cast<std::size_t>(c)] = r.vectors.col(c).dot(a_sm * r.vectors.col(c));
  }
}

// Redundant eigenpairs by eigendecomposing the block and taking, per
// eigenvalue group, the null space of S^T U.
MotifResult NullSpaceRedundant(const DenseEigen& es, const DenseMatrix& s_local) {
  MotifResult r;
  std::vector<Eigen::VectorXd> cols;
  for (auto [b, e] : GapClusters(es.values, 1e-8)) {
    const DenseMatrix u = es.vectors.middleCols(b, e - b);
    const DenseMatrix x = s_local.transpose() * u;
    Eigen::JacobiSVD<DenseMatrix> svd(x, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double sigma_max = sv.size() ? sv(0) : 0.0;
    const double threshold = 1e-10 * std::max(sigma_max, 1.0);
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) rank += sv(k) > threshold ? 1 : 0;
    const Eigen::Index d = u.cols() - rank;
    if (d <= 0) continue;
    const DenseMatrix w = u * svd.matrixV().rightCols(d);
    const double lambda = es.values.segment(b, e - b).mean();
    for (Eigen::Index k = 0; k < d; ++k) {
      cols.push_back(w.col(k));
      r.values.push_back(lambda);
    }
  }
  r.vectors.resize(s_local.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) r.vectors.col(static_cast<Eigen::Index>(k)) = cols[k];
  return r;
}

// Eigenpairs of the block restricted to the orbit-zero-sum subspace.
MotifResult ProjectedRedundant(const DenseMatrix& a_sm, const DenseMatrix& s_local) {
  const Eigen::Index k = s_local.rows();
  std::vector<Eigen::VectorXd> diffs;
  for (Eigen::Index o = 0; o < s_local.cols(); ++o) {
    Eigen::Index first = -1;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (s_local(i, o) == 0.0) continue;
      if (first < 0) {
        first = i;
        continue;
      }
      Eigen::VectorXd v = Eigen::VectorXd::Zero(k);
      v(first) = 1.0;
      v(i) = -1.0;
      diffs.push_back(v);
    }
  }
  MotifResult r;
  if (diffs.empty()) return r;
  DenseMatrix basis(k, static_cast<Eigen::Index>(diffs.size()));
  for (std::size_t i = 0; i < diffs.size(); ++i) basis.col(static_cast<Eigen::Index>(i)) = diffs[i];
  Eigen::HouseholderQR<DenseMatrix> qr(basis);
  const DenseMatrix p = qr.householderQ() * DenseMatrix::Identity(k, basis.cols());
  DenseEigen inner = EigSymmetric(p.transpose() * a_sm * p);
  r.vectors = p * inner.vectors;
  r.values.assign(inner.values.data(), inner.values.data() + inner.values.size());
  return r;
}

template <typename BlockFn>
SymEigenDecomposition SymmetryEigImpl(std::size_t n, const DenseMatrix& b_sym,
                                      const CharacteristicMap& cmap,
                                      const GeometricDecomposition& d, BlockFn&& block) {
  if (cmap.num_vertices() != n || d.n != n) throw ContractError("decomposition does not match matrix");
  for (const SymmetricMotif& m : d.motifs) {
    for (const VertexSet& o : m.orbits) {
      if (cmap.members[cmap.orbit_of[o.front()]] != o) {
        throw ContractError("characteristic map is not the orbit map of the decomposition");
      }
    }
  }
  std::vector<Column> columns;
  columns.reserve(n);

  const DenseEigen q = EigSymmetric(b_sym);
  for (Eigen::Index c = 0; c < q.values.size(); ++c) {
    Column col{q.values(c), EigenTag::kQuotient, -1, {}, Eigen::VectorXd(static_cast<Eigen::Index>(n))};
    for (std::size_t i = 0; i < n; ++i) {
      const int k = cmap.orbit_of[i];
      col.dense(static_cast<Eigen::Index>(i)) =
          q.vectors(k, c) / std::sqrt(static_cast<double>(cmap.orbit_sizes[k]));
    }
    col.dense.normalize();
    columns.push_back(std::move(col));
  }

  std::vector<MotifResult> results(d.motifs.size());
  ParallelFor(d.motifs.size(), [&](std::size_t mi) {
    const SymmetricMotif& m = d.motifs[mi];
    const DenseMatrix a_sm = block(m.vertices);
    const DenseMatrix s_local = LocalS(m);
    const auto expected = static_cast<Eigen::Index>(m.vertices.size() - m.orbits.size());
    MotifResult r = NullSpaceRedundant(EigSymmetric(a_sm), s_local);
    if (r.vectors.cols() != expected) r = ProjectedRedundant(a_sm, s_local);
    if (r.vectors.cols() != expected) throw InternalError("redundant eigenpair count mismatch");
    Polish(a_sm, s_local, r);
    results[mi] = std::move(r);
  });
  for (std::size_t mi = 0; mi < d.motifs.size(); ++mi) {
    const SymmetricMotif& m = d.motifs[mi];
    const MotifResult& r = results[mi];
    for (Eigen::Index c = 0; c < r.vectors.cols(); ++c) {
      Column col{r.values[static_cast<std::size_t>(c)], EigenTag::kRedundant, static_cast<int>(mi), {}, {}};
      for (std::size_t i = 0; i < m.vertices.size(); ++i) {
        col.entries.emplace_back(m.vertices[i], r.vectors(static_cast<Eigen::Index>(i), c));
      }
      columns.push_back(std::move(col));
    }
  }
  if (columns.size() != n) throw InternalError("eigenpair count does not match dimension");

  std::stable_sort(columns.begin(), columns.end(),
                   [](const Column& x, const Column& y) { return x.value < y.value; });
  SymEigenDecomposition out;
  const auto nn = static_cast<Eigen::Index>(n);
  out.values.resize(nn);
  out.vectors = DenseMatrix::Zero(nn, nn);
  for (Eigen::Index c = 0; c < nn; ++c) {
    Column& col = columns[static_cast<std::size_t>(c)];
    out.values(c) = col.value;
    out.tags.push_back(col.tag);
    out.motif.push_back(col.motif);
    if (col.tag == EigenTag::kQuotient) {
      out.vectors.col(c) = col.dense;
    } else {
      for (auto [v, x] : col.entries) out.vectors(v, c) = x;
    }
  }
  return out;
}

}  // namespace

DenseEigen EigSymmetric(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw ContractError("matrix is not square");
  DenseEigen out;
  if (m.rows() == 0) return out;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ContractError("matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(0.5 * (m + m.transpose()));
  if (es.info() != Eigen::Success) throw InternalError("eigensolver did not converge");
  out.values = es.eigenvalues();
  out.vectors = es.eigenvectors();
  return out;
}

std::vector<std::pair<double, std::size_t>> SymEigenDecomposition::Grouped(double rel_tol) const {
  std::vector<std::pair<double, std::size_t>> out;
  for (auto [b, e] : GapClusters(values, rel_tol)) {
    out.emplace_back(values.segment(b, e - b).mean(), static_cast<std::size_t>(e - b));
  }
  return out;
}

std::vector<double> SymEigenDecomposition::RedundantValues() const {
  std::vector<double> out;
  for (std::size_t c = 0; c < tags.size(); ++c) {
    if (tags[c] == EigenTag::kRedundant) out.push_back(values(static_cast<Eigen::Index>(c)));
  }
  return out;
}

SymEigenDecomposition SymmetryEig(const DenseMatrix& a, const CharacteristicMap& cmap,
                                  const GeometricDecomposition& d) {
  if (a.rows() != a.cols()) throw ContractError("matrix is not square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ContractError("matrix is not symmetric");
  }
  const DenseMatrix b_sym = DenseMatrix(SymmetricQuotient(a, cmap).B);
  return SymmetryEigImpl(static_cast<std::size_t>(a.rows()), b_sym, cmap, d,
                         [&a](const VertexSet& vs) {
                           const auto k = static_cast<Eigen::Index>(vs.size());
                           DenseMatrix block(k, k);
                           for (Eigen::Index i = 0; i < k; ++i) {
                             for (Eigen::Index j = 0; j < k; ++j) block(i, j) = a(vs[i], vs[j]);
                           }
                           return block;
                         });
}

SymEigenDecomposition SymmetryEig(const Graph& g, const CharacteristicMap& cmap,
                                  const GeometricDecomposition& d) {
  if (g.directed()) throw ContractError("symmetry eigendecomposition needs an undirected graph");
  const DenseMatrix b_sym = DenseMatrix(SymmetricQuotient(g, cmap).B);
  return SymmetryEigImpl(g.num_vertices(), b_sym, cmap, d, [&g](const VertexSet& vs) {
    const auto k = static_cast<Eigen::Index>(vs.size());
    DenseMatrix block = DenseMatrix::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) block(i, j) = g.weight(vs[i], vs[j]);
    }
    return block;
  });
}

BsmSpectrum RedundantEigs1Orbit(std::size_t n, double alpha, double beta) {
  if (n < 2) throw ContractError("orbit size must be at least 2");
  return {{beta - alpha, n - 1, 0.0}};
}

BsmSpectrum RedundantEigs2Orbit(std::size_t n, double alpha1, double beta1, double alpha2,
                                double beta2, double gamma, double delta) {
  if (n < 2) throw ContractError("orbit size must be at least 2");
  const double a = alpha1 - beta1;
  const double b = alpha2 - beta2;
  const double c = gamma - delta;
  if (c == 0.0) throw ContractError("gamma equals delta: the orbits form two separate motifs");
  const double root = std::sqrt((a - b) * (a - b) + 4.0 * c * c);
  BsmSpectrum out;
  for (double sign : {-1.0, 1.0}) {
    const double lambda = (-(a + b) + sign * root) / 2.0;
    out.push_back({lambda, n - 1, (-b - lambda) / c});
  }
  return out;
}

double LaplacianRedundant1Orbit(std::size_t m, double d, bool complete) {
  if (m < 2) throw ContractError("orbit size must be at least 2");
  return complete ? d + static_cast<double>(m) : d;
}

SpectrumReport DiscreteSpectrumReport(const std::vector<double>& values_full,
                                      const std::vector<double>& values_explained,
                                      int round_digits, double bin_width) {
  const double scale = std::pow(10.0, round_digits);
  auto repeated_mass = [scale](const std::vector<double>& values) {
    std::map<long long, std::size_t> counts;
    for (double v : values) ++counts[std::llround(v * scale)];
    std::size_t mass = 0;
    for (const auto& [key, m] : counts) mass += m > 1 ? m : 0;
    return mass;
  };
  SpectrumReport r;
  const std::size_t den = repeated_mass(values_full);
  const std::size_t num = repeated_mass(values_explained);
  r.fraction_explained = den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
  std::map<long long, std::size_t> bins;
  for (double v : values_full) ++bins[static_cast<long long>(std::floor(v / bin_width))];
  for (const auto& [bin, count] : bins) r.histogram.emplace_back(static_cast<double>(bin) * bin_width, count);
  return r;
}

}  // namespace symnet
