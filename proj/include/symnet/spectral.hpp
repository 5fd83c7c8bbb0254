#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "symnet/decomposition.hpp"
#include "symnet/graph.hpp"
#include "symnet/quotient.hpp"

namespace symnet {

struct DenseEigen {
  Eigen::VectorXd values;  // ascending
  DenseMatrix vectors;     // orthonormal columns
};

// Full eigendecomposition of a symmetric matrix. Throws ContractError when
// the input is not symmetric within 1e-12 relative to its largest entry.
DenseEigen EigSymmetric(const DenseMatrix& m);

enum class EigenTag { kQuotient, kRedundant };

struct SymEigenDecomposition {
  Eigen::VectorXd values;  // ascending
  DenseMatrix vectors;
  std::vector<EigenTag> tags;
  std::vector<int> motif;  // motif index for redundant pairs, -1 otherwise

  // (value, multiplicity) after merging values within a relative tolerance.
  std::vector<std::pair<double, std::size_t>> Grouped(double rel_tol = 1e-8) const;
  std::vector<double> RedundantValues() const;
};

// Eigendecomposition that solves the symmetric quotient for the orbit-constant
// eigenpairs and each motif block for the redundant ones.
SymEigenDecomposition SymmetryEig(const DenseMatrix& a, const CharacteristicMap& cmap,
                                  const GeometricDecomposition& d);
SymEigenDecomposition SymmetryEig(const Graph& g, const CharacteristicMap& cmap,
                                  const GeometricDecomposition& d);

struct BsmEigenvalue {
  double value = 0.0;
  std::size_t multiplicity = 0;
  // Eigenvectors are (kappa e_i | e_i) with e_i = 1 at the first member and
  // -1 at member i; kappa is unused for one orbit.
  double kappa = 0.0;
};

using BsmSpectrum = std::vector<BsmEigenvalue>;

// Redundant spectrum of an orbit with off-diagonal alpha and diagonal beta.
BsmSpectrum RedundantEigs1Orbit(std::size_t n, double alpha, double beta);
// Two orbits (alpha_i, beta_i) joined by delta on aligned pairs and gamma elsewhere.
BsmSpectrum RedundantEigs2Orbit(std::size_t n, double alpha1, double beta1, double alpha2,
                                double beta2, double gamma, double delta);
// d for an empty orbit, d + m for a complete one.
double LaplacianRedundant1Orbit(std::size_t m, double d, bool complete);

struct SpectrumReport {
  double fraction_explained = 0.0;
  std::vector<std::pair<double, std::size_t>> histogram;  // (bin start, count)
};

// Share of the repeated spectrum of values_full (multiplicities > 1 after
// rounding to round_digits) that is accounted for by the second list.
SpectrumReport DiscreteSpectrumReport(const std::vector<double>& values_full,
                                      const std::vector<double>& values_explained,
                                      int round_digits = 8, double bin_width = 0.1);

}  // namespace symnet
