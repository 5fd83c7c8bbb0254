#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace symnet {

using Vertex = int;
using DenseMatrix = Eigen::MatrixXd;
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct Triplet {
  Vertex row;
  Vertex col;
  double weight;
};

// Sparse weighted adjacency with a dense 0..n-1 index space. For undirected
// graphs both (i,j) and (j,i) are stored. Immutable once built.
class Graph {
 public:
  struct Entry {
    Vertex target;
    double weight;
  };

  Graph() = default;

  // Builds from stored entries. Zero weights are dropped, later duplicates win.
  // For undirected graphs every triplet is mirrored.
  static Graph FromTriplets(std::size_t n, bool directed, const std::vector<Triplet>& triplets,
                            std::vector<std::string> labels = {});
  static Graph FromDense(const DenseMatrix& m, std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return labels_.size(); }
  bool directed() const { return directed_; }
  // Number of stored (i,j) entries.
  std::size_t num_entries() const { return out_targets_.size(); }
  // Edges counted once per unordered pair for undirected graphs, loops included.
  std::size_t num_edges() const;
  bool has_loops() const;
  bool is_weighted() const;

  std::span<const Entry> out(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Entry> in(Vertex v) const {
    if (!directed_) return out(v);
    return {in_targets_.data() + in_offsets_[v], in_targets_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(Vertex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  double weight(Vertex i, Vertex j) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_[v]; }
  std::optional<Vertex> index_of(const std::string& label) const;

  std::vector<Triplet> triplets() const;
  DenseMatrix dense() const;
  SparseMatrix sparse() const;

 private:
  bool directed_ = false;
  std::vector<std::string> labels_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Entry> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Entry> in_targets_;
  std::unordered_map<std::string, Vertex> label_index_;
};

struct EdgeListOptions {
  bool directed = false;
  bool weighted = false;
  std::vector<std::string> comment_prefixes{"#", "%"};
};

Graph LoadEdgeList(std::istream& in, const EdgeListOptions& options = {});
Graph LoadEdgeListFile(const std::string& path, const EdgeListOptions& options = {});
Graph ParseEdgeList(const std::string& text, const EdgeListOptions& options = {});

// "u v w" lines with original labels; undirected pairs written once.
void WriteEdgeList(const Graph& g, std::ostream& out);
// {n, directed, edges:[[u,v,w],...]} with original labels.
std::string GraphToJson(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> parent;  // subgraph index -> index in the source graph
};

// Vertices are kept in increasing index order; labels carry over.
InducedSubgraph Induce(const Graph& g, std::vector<Vertex> vertices);
Graph LargestConnectedComponent(const Graph& g);
// Weakly connected component id per vertex, ids ordered by smallest member.
std::vector<int> ConnectedComponents(const Graph& g, int* count = nullptr);
bool IsConnected(const Graph& g);

// Shortest decimal text that parses back to the same double.
std::string FormatDouble(double x);
// True when the label is an optionally signed decimal integer.
bool IsIntegerLabel(const std::string& label);

}  // namespace symnet
