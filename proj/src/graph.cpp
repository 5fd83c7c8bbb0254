#include "symnet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "json_util.hpp"
#include "symnet/error.hpp"

namespace symnet {

namespace {

std::vector<std::string> DefaultLabels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  return labels;
}

void BuildCsr(std::size_t n, std::vector<Triplet>& entries, bool transpose,
              std::vector<std::size_t>& offsets, std::vector<Graph::Entry>& targets) {
  offsets.assign(n + 1, 0);
  for (const Triplet& t : entries) ++offsets[(transpose ? t.col : t.row) + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  targets.resize(entries.size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const Triplet& t : entries) {
    Vertex from = transpose ? t.col : t.row;
    Vertex to = transpose ? t.row : t.col;
    targets[fill[from]++] = {to, t.weight};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(targets.begin() + offsets[v], targets.begin() + offsets[v + 1],
              [](const Graph::Entry& a, const Graph::Entry& b) { return a.target < b.target; });
  }
}

}  // namespace

Graph Graph::FromTriplets(std::size_t n, bool directed, const std::vector<Triplet>& triplets,
                          std::vector<std::string> labels) {
  if (labels.empty()) labels = DefaultLabels(n);
  if (labels.size() != n) throw ContractError("label count does not match vertex count");
  std::vector<Triplet> entries;
  entries.reserve(directed ? triplets.size() : 2 * triplets.size());
  for (const Triplet& t : triplets) {
    if (t.row < 0 || t.col < 0 || static_cast<std::size_t>(t.row) >= n ||
        static_cast<std::size_t>(t.col) >= n) {
      throw ContractError("edge endpoint out of range");
    }
    entries.push_back(t);
    if (!directed && t.row != t.col) entries.push_back({t.col, t.row, t.weight});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  // Last duplicate wins, then zeros are dropped.
  std::vector<Triplet> kept;
  kept.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i + 1 < entries.size() && entries[i + 1].row == entries[i].row &&
        entries[i + 1].col == entries[i].col) {
      continue;
    }
    if (entries[i].weight != 0.0) kept.push_back(entries[i]);
  }

  Graph g;
  g.directed_ = directed;
  g.labels_ = std::move(labels);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.label_index_.emplace(g.labels_[i], static_cast<Vertex>(i)).second) {
      throw ContractError("duplicate vertex label '" + g.labels_[i] + "'");
    }
  }
  BuildCsr(n, kept, false, g.out_offsets_, g.out_targets_);
  if (directed) BuildCsr(n, kept, true, g.in_offsets_, g.in_targets_);
  return g;
}

Graph Graph::FromDense(const DenseMatrix& m, std::vector<std::string> labels) {
  if (m.rows() != m.cols()) throw ContractError("matrix is not square");
  const bool symmetric = (m.array() == m.transpose().array()).all();
  std::vector<Triplet> triplets;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = symmetric ? i : 0; j < m.cols(); ++j) {
      if (m(i, j) != 0.0) {
        triplets.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), m(i, j)});
      }
    }
  }
  return FromTriplets(static_cast<std::size_t>(m.rows()), !symmetric, triplets, std::move(labels));
}

std::size_t Graph::num_edges() const {
  if (directed_) return num_entries();
  std::size_t loops = 0;
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    if (weight(static_cast<Vertex>(v), static_cast<Vertex>(v)) != 0.0) ++loops;
  }
  return (num_entries() - loops) / 2 + loops;
}

bool Graph::has_loops() const {
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    if (weight(static_cast<Vertex>(v), static_cast<Vertex>(v)) != 0.0) return true;
  }
  return false;
}

bool Graph::is_weighted() const {
  return std::any_of(out_targets_.begin(), out_targets_.end(),
                     [](const Entry& e) { return e.weight != 1.0; });
}

double Graph::weight(Vertex i, Vertex j) const {
  auto row = out(i);
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Entry& e, Vertex t) { return e.target < t; });
  return (it != row.end() && it->target == j) ? it->weight : 0.0;
}

std::optional<Vertex> Graph::index_of(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Triplet> Graph::triplets() const {
  std::vector<Triplet> result;
  result.reserve(num_entries());
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    for (const Entry& e : out(static_cast<Vertex>(i))) {
      result.push_back({static_cast<Vertex>(i), e.target, e.weight});
    }
  }
  return result;
}

DenseMatrix Graph::dense() const {
  const auto n = static_cast<Eigen::Index>(num_vertices());
  DenseMatrix m = DenseMatrix::Zero(n, n);
  for (const Triplet& t : triplets()) m(t.row, t.col) = t.weight;
  return m;
}

SparseMatrix Graph::sparse() const {
  const auto n = static_cast<Eigen::Index>(num_vertices());
  std::vector<Eigen::Triplet<double>> ts;
  ts.reserve(num_entries());
  for (const Triplet& t : triplets()) ts.emplace_back(t.row, t.col, t.weight);
  SparseMatrix m(n, n);
  m.setFromTriplets(ts.begin(), ts.end());
  return m;
}

bool IsIntegerLabel(const std::string& label) {
  if (label.empty()) return false;
  std::size_t start = (label[0] == '-' || label[0] == '+') ? 1 : 0;
  if (start == label.size()) return false;
  return std::all_of(label.begin() + static_cast<std::ptrdiff_t>(start), label.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::string FormatDouble(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

Graph LoadEdgeList(std::istream& in, const EdgeListOptions& options) {
  struct RawEdge {
    std::string u, v;
    double w;
  };
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    bool comment = false;
    for (const std::string& prefix : options.comment_prefixes) {
      if (!prefix.empty() && line.compare(first, prefix.size(), prefix) == 0) comment = true;
    }
    if (comment) continue;
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string tok; tokens >> tok;) fields.push_back(tok);
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v [w]'");
    }
    double w = 1.0;
    if (fields.size() == 3) {
      const std::string& f = fields[2];
      double parsed = 0.0;
      auto res = std::from_chars(f.data(), f.data() + f.size(), parsed);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": non-numeric weight '" + f + "'");
      }
      if (options.weighted) w = parsed;
    }
    raw.push_back({fields[0], fields[1], w});
  }
  if (raw.empty()) throw ParseError("empty input");

  std::vector<std::string> order;
  std::unordered_map<std::string, Vertex> index;
  for (const RawEdge& e : raw) {
    for (const std::string* l : {&e.u, &e.v}) {
      if (index.emplace(*l, 0).second) order.push_back(*l);
    }
  }
  bool numeric = std::all_of(order.begin(), order.end(), [](const std::string& l) {
    return IsIntegerLabel(l) && l.size() < 19;
  });
  if (numeric) {
    std::stable_sort(order.begin(), order.end(), [](const std::string& a, const std::string& b) {
      return std::stoll(a) < std::stoll(b);
    });
  }
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<Vertex>(i);

  std::vector<Triplet> triplets;
  triplets.reserve(raw.size());
  for (const RawEdge& e : raw) triplets.push_back({index[e.u], index[e.v], e.w});
  const std::size_t n = order.size();
  return Graph::FromTriplets(n, options.directed, triplets, std::move(order));
}

Graph LoadEdgeListFile(const std::string& path, const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return LoadEdgeList(in, options);
}

Graph ParseEdgeList(const std::string& text, const EdgeListOptions& options) {
  std::istringstream in(text);
  return LoadEdgeList(in, options);
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  for (const Triplet& t : g.triplets()) {
    if (!g.directed() && t.col < t.row) continue;
    out << g.label(t.row) << ' ' << g.label(t.col) << ' ' << FormatDouble(t.weight) << '\n';
  }
}

std::string GraphToJson(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Triplet& t : g.triplets()) {
    if (!g.directed() && t.col < t.row) continue;
    edges.push_back({detail::LabelValue(g.label(t.row)), detail::LabelValue(g.label(t.col)),
                     t.weight});
  }
  nlohmann::json doc = {{"n", g.num_vertices()}, {"directed", g.directed()}, {"edges", edges}};
  return doc.dump();
}

InducedSubgraph Induce(const Graph& g, std::vector<Vertex> vertices) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= n) {
      throw ContractError("vertex " + std::to_string(vertices[i]) + " out of range");
    }
    local[vertices[i]] = static_cast<Vertex>(i);
    labels.push_back(g.label(vertices[i]));
  }
  std::vector<Triplet> triplets;
  for (Vertex v : vertices) {
    for (const Graph::Entry& e : g.out(v)) {
      if (local[e.target] < 0) continue;
      if (!g.directed() && e.target < v) continue;
      triplets.push_back({local[v], local[e.target], e.weight});
    }
  }
  InducedSubgraph sub;
  sub.graph = Graph::FromTriplets(vertices.size(), g.directed(), triplets, std::move(labels));
  sub.parent = std::move(vertices);
  return sub;
}

std::vector<int> ConnectedComponents(const Graph& g, int* count) {
  const auto n = g.num_vertices();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (auto nbrs : {g.out(v), g.in(v)}) {
        for (const Graph::Entry& e : nbrs) {
          if (comp[e.target] < 0) {
            comp[e.target] = next;
            stack.push_back(e.target);
          }
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool IsConnected(const Graph& g) {
  int count = 0;
  ConnectedComponents(g, &count);
  return count <= 1;
}

Graph LargestConnectedComponent(const Graph& g) {
  int count = 0;
  std::vector<int> comp = ConnectedComponents(g, &count);
  if (count <= 1) return g;
  std::vector<std::size_t> sizes(static_cast<std::size_t>(count), 0);
  for (int c : comp) ++sizes[c];
  // Component ids already follow smallest member, so the first maximum wins ties.
  int best = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<Vertex> keep;
  for (std::size_t v = 0; v < comp.size(); ++v) {
    if (comp[v] == best) keep.push_back(static_cast<Vertex>(v));
  }
  return Induce(g, keep).graph;
}

}  // namespace symnet
