#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symnet/graph.hpp"

namespace oracle {

using symnet::DenseMatrix;
using symnet::Graph;
using symnet::Vertex;

// Every permutation p with A(p(i), p(j)) == A(i, j), by enumerating all n!.
std::vector<std::vector<Vertex>> AllAutomorphisms(const Graph& g);
// Orbit partition from the full automorphism list, sorted by smallest member.
std::vector<std::vector<Vertex>> OrbitsFrom(const std::vector<std::vector<Vertex>>& autos,
                                            std::size_t n);
// Distances by BFS from every vertex; -1 when unreachable.
std::vector<std::vector<int>> AllPairsBfs(const Graph& g);
// Erdos-Renyi graph with edge probability p.
Graph RandomGraph(std::size_t n, double p, std::mt19937_64& rng, bool directed = false);
// Orbit-pair mean of a over V_k x V_l for the vertex pair (i, j).
DenseMatrix OrbitMeans(const DenseMatrix& a, const std::vector<int>& orbit_of);
// Dense eigenvalues of A restricted to vectors summing to zero on each orbit.
std::vector<double> ZeroSumSpectrum(const DenseMatrix& a, const std::vector<int>& orbit_of);
// Moore-Penrose pseudoinverse of a symmetric matrix.
DenseMatrix PseudoInverse(const DenseMatrix& a);
// Leading eigenvector of a nonnegative symmetric matrix by power iteration,
// unit norm and positive orientation.
Eigen::VectorXd PowerIteration(const DenseMatrix& a, int max_iter = 20000, double tol = 1e-13);

}  // namespace oracle
