#include "symnet/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "json_util.hpp"
#include "symnet/compression.hpp"
#include "symnet/container.hpp"
#include "symnet/error.hpp"
#include "symnet/generators.hpp"
#include "symnet/measures.hpp"
#include "symnet/parallel.hpp"
#include "symnet/quotient.hpp"
#include "symnet/spectral.hpp"

namespace symnet {

using nlohmann::json;

namespace {

double Percent(double x) { return 100.0 * x; }

std::string Fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

}  // namespace

StatsReport ComputeStats(const Graph& g, const SymmetryAnalysis& a) {
  const GeometricDecomposition& d = a.decomposition;
  StatsReport r;
  r.n_g = g.num_vertices();
  r.m_g = g.num_edges();
  r.gen = a.generators.generators.size();
  const BigInt order = GroupOrder(a.generators);
  r.order = order.str();
  r.order_log10 = Log10Floor(order);
  r.sm = d.motifs.size();
  std::size_t basic = 0;
  for (const SymmetricMotif& m : d.motifs) basic += m.basic() ? 1 : 0;
  r.bsm = r.sm == 0 ? 0.0 : Percent(static_cast<double>(basic) / static_cast<double>(r.sm));
  r.mv = r.n_g == 0 ? 0.0 : Percent(static_cast<double>(d.moved_vertices()) / static_cast<double>(r.n_g));
  const CompressionRatios c = ComputeCompressionRatios(d, g);
  r.n_q = Percent(c.n_ratio);
  r.m_q = Percent(c.m_ratio);
  r.c_full = Percent(c.c_full);
  r.sp = Percent(c.n_ratio * c.n_ratio * c.n_ratio);
  std::size_t internal = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
    for (const auto& e : g.out(v)) {
      if (!g.directed() && e.target < v) continue;
      const int mv = d.motif_of[v];
      if (mv >= 0 && mv == d.motif_of[e.target]) ++internal;
    }
  }
  r.ext_s = r.m_g == 0 ? 100.0
                       : Percent(1.0 - static_cast<double>(internal) / static_cast<double>(r.m_g));
  r.t1 = a.t_generators;
  r.t2 = a.t_decomposition;
  return r;
}

std::string StatsToJson(const StatsReport& r, bool timings) {
  json doc = {{"n_G", r.n_g},       {"m_G", r.m_g},   {"gen", r.gen},
              {"order", r.order},   {"order_log10", r.order_log10},
              {"sm", r.sm},         {"bsm", r.bsm},   {"mv", r.mv},
              {"n_Q", r.n_q},       {"m_Q", r.m_q},   {"ext_s", r.ext_s},
              {"c_full", r.c_full}, {"sp", r.sp}};
  if (timings) doc["timings"] = {{"t1", r.t1}, {"t2", r.t2}};
  return doc.dump(2);
}

std::string StatsToText(const StatsReport& r, bool timings) {
  std::vector<std::pair<std::string, std::string>> cols = {
      {"n_G", std::to_string(r.n_g)},
      {"m_G", std::to_string(r.m_g)},
      {"gen", std::to_string(r.gen)},
      {"|Aut|", r.order_log10 >= 6 ? "10^" + std::to_string(r.order_log10) : r.order},
      {"sm", std::to_string(r.sm)},
      {"bsm%", Fixed(r.bsm, 1)},
      {"mv%", Fixed(r.mv, 1)},
      {"n_Q%", Fixed(r.n_q, 1)},
      {"m_Q%", Fixed(r.m_q, 1)},
      {"ext_s%", Fixed(r.ext_s, 3)},
      {"c_full%", Fixed(r.c_full, 1)},
      {"sp%", Fixed(r.sp, 1)},
  };
  if (timings) {
    cols.emplace_back("t1(s)", Fixed(r.t1, 3));
    cols.emplace_back("t2(s)", Fixed(r.t2, 3));
  }
  std::string head;
  std::string row;
  for (const auto& [name, value] : cols) {
    const std::size_t w = std::max(name.size(), value.size()) + 2;
    head += std::string(w - name.size(), ' ') + name;
    row += std::string(w - value.size(), ' ') + value;
  }
  return head + "\n" + row + "\n";
}

namespace {

struct GlobalOptions {
  bool directed = false;
  bool weighted = false;
  bool lcc = false;
  CLI::Option* lcc_option = nullptr;
  std::optional<double> tol;
  std::string format;
  std::string use_generators;
  std::size_t threads = 0;
  bool timings = false;
};

struct Loaded {
  Graph g;
  SymmetryAnalysis a;
};

Graph LoadInput(const std::string& path, const GlobalOptions& o, bool default_lcc) {
  EdgeListOptions eo;
  eo.directed = o.directed;
  eo.weighted = o.weighted;
  Graph g = LoadEdgeListFile(path, eo);
  const bool lcc = o.lcc_option && o.lcc_option->count() > 0 ? o.lcc : default_lcc;
  return lcc ? LargestConnectedComponent(g) : g;
}

Loaded LoadAndAnalyze(const std::string& path, const GlobalOptions& o, bool default_lcc,
                      std::ostream& err) {
  Loaded l{LoadInput(path, o, default_lcc), {}};
  if (!o.use_generators.empty()) {
    std::ifstream in(o.use_generators);
    if (!in) throw ParseError("cannot read " + o.use_generators);
    const GeneratorSet gs = ImportGenerators(in, l.g);
    l.a = Analyze(l.g, &gs);
  } else {
    l.a = Analyze(l.g);
  }
  err << "timings: t1=" << Fixed(l.a.t_generators, 6) << "s t2=" << Fixed(l.a.t_decomposition, 6)
      << "s\n";
  return l;
}

void WithOutput(const std::string& path, std::ostream& out,
                const std::function<void(std::ostream&)>& write, bool binary = false) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
  if (!f) throw ContractError("cannot write " + path);
  write(f);
  if (!f) throw ContractError("failed writing " + path);
}

void WriteMatrixCsv(const DenseMatrix& m, std::ostream& out) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << FormatDouble(m(i, j));
    }
    out << '\n';
  }
}

bool IsVertexMeasure(const std::string& name) {
  return name == "closeness" || name == "closeness:approx" || name == "degree" ||
         name == "eigencentrality" || name == "eccentricity";
}

DenseMatrix PairwiseMeasure(const std::string& name, const Loaded& l) {
  const Graph& g = l.g;
  const GeometricDecomposition& d = l.a.decomposition;
  if (name == "adjacency") return g.dense();
  if (name == "laplacian") return Laplacian(g).dense();
  if (name == "exp") return Communicability(g, d, AnalyticFunction::Exp()).dense();
  if (name.rfind("resolvent:", 0) == 0) {
    const std::string arg = name.substr(10);
    double t = 0.0;
    try {
      std::size_t used = 0;
      t = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw ParseError("bad resolvent parameter '" + arg + "'");
    }
    return Communicability(g, d, AnalyticFunction::Resolvent(t)).dense();
  }
  if (name == "distance") return ShortestPathsQuotient(g, d).dense();
  if (name == "resistance") return ResistanceDistance(g, d).dense();
  throw ParseError("unknown measure '" + name + "'");
}

void WriteVertexMeasure(const std::string& name, const Loaded& l, const GlobalOptions& o,
                        std::ostream& out, std::ostream& err) {
  const Graph& g = l.g;
  const GeometricDecomposition& d = l.a.decomposition;
  std::vector<double> values;
  std::optional<EccentricityReport> ecc;
  if (name == "closeness" || name == "closeness:approx") {
    values = Closeness(ShortestPathsQuotient(g, d), name == "closeness");
  } else if (name == "degree") {
    values = VertexDecompress(DegreeQuotient(Quotient(g, l.a.orbits)), l.a.orbits);
  } else if (name == "eigencentrality") {
    values = EigenvectorCentrality(g, l.a.orbits);
  } else {
    ecc = Eccentricity(ShortestPathsQuotient(g, d));
    values.assign(ecc->eccentricity.begin(), ecc->eccentricity.end());
  }
  if (o.format == "json") {
    json doc = {{"measure", name}, {"labels", json::array()}, {"values", values}};
    for (const std::string& s : g.labels()) doc["labels"].push_back(detail::LabelValue(s));
    if (ecc) {
      doc["radius"] = ecc->radius;
      doc["diameter"] = ecc->diameter;
    }
    out << doc.dump() << '\n';
    return;
  }
  out << "vertex," << name << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << g.label(static_cast<Vertex>(i)) << ',' << FormatDouble(values[i]) << '\n';
  }
  if (ecc) err << "radius=" << ecc->radius << " diameter=" << ecc->diameter << '\n';
}

int Fail(std::ostream& err, const std::string& kind, const std::string& message, int code) {
  std::string line = message;
  for (char& c : line) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  err << "error: " << kind << ": " << line << '\n';
  return code;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetry analysis, compression and spectral tools for networks", "symnet"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions o;
  app.add_flag("--directed", o.directed, "Treat edges as directed");
  app.add_flag("--weighted", o.weighted, "Read a third column as the edge weight");
  o.lcc_option = app.add_flag("--lcc,!--no-lcc", o.lcc, "Restrict to the largest connected component");
  app.add_option("--tol", o.tol, "Numerical tolerance for equitability checks");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--use-generators", o.use_generators, "Read automorphism generators from FILE");
  app.add_option("--threads", o.threads, "Worker thread cap");
  app.add_flag("--timings", o.timings, "Include stage timings in reports");

  std::string input;
  std::string output;

  auto* stats = app.add_subcommand("stats", "Symmetry statistics of the largest component");
  stats->add_option("input", input, "Edge list")->required();

  auto* decompose = app.add_subcommand("decompose", "Geometric decomposition as JSON");
  decompose->add_option("input", input, "Edge list")->required();
  decompose->add_option("-o,--output", output, "Output file");

  bool symmetric = false;
  bool basic = false;
  auto* quotient = app.add_subcommand("quotient", "Orbit quotient network");
  quotient->add_option("input", input, "Edge list")->required();
  quotient->add_option("-o,--output", output, "Write PREFIX.edges and PREFIX.json");
  quotient->add_flag("--symmetric", symmetric, "Symmetric quotient");
  quotient->add_flag("--basic", basic, "Collapse only orbits of basic motifs");

  std::string measure = "adjacency";
  auto* compress = app.add_subcommand("compress", "Lossless compression of a pairwise measure");
  compress->add_option("input", input, "Edge list")->required();
  compress->add_option("--measure", measure, "adjacency, laplacian, exp, resolvent:t, distance, resistance");
  compress->add_option("-o,--output", output, "Container file");

  auto* decompress = app.add_subcommand("decompress", "Dense matrix from a container");
  decompress->add_option("input", input, "Container file")->required();
  decompress->add_option("-o,--output", output, "Output file");

  bool tags = false;
  std::string vectors_path;
  std::string histogram_path;
  auto* eig = app.add_subcommand("eig", "Eigendecomposition through the quotient and motifs");
  eig->add_option("input", input, "Edge list")->required();
  eig->add_option("--measure", measure, "adjacency or laplacian");
  eig->add_flag("--tags", tags, "Tag eigenpairs as QUOTIENT or REDUNDANT");
  eig->add_option("--vectors", vectors_path, "Write eigenvectors as raw float64 after a JSON header line");
  eig->add_option("--histogram", histogram_path, "Write the spectral density histogram as CSV");
  eig->add_option("-o,--output", output, "Output file");

  std::string measure_name;
  auto* measure_cmd = app.add_subcommand("measure", "Compute a structural measure");
  measure_cmd->add_option("name", measure_name,
                          "laplacian, exp, resolvent:t, distance, closeness[:approx], degree, "
                          "eigencentrality, resistance, eccentricity")
      ->required();
  measure_cmd->add_option("input", input, "Edge list")->required();
  measure_cmd->add_option("-o,--output", output, "Output file");

  std::uint64_t seed = 0;
  PlantedOptions planted;
  auto* generate = app.add_subcommand("generate", "Random graph with planted symmetric motifs");
  generate->add_option("--seed", seed, "Random seed")->required();
  generate->add_option("--core", planted.core_vertices, "Core vertices");
  generate->add_option("--mean-degree", planted.core_mean_degree, "Mean degree of the core");
  generate->add_option("--twin-leaves", planted.twin_leaves, "One-orbit motifs with empty orbits");
  generate->add_option("--twin-cliques", planted.twin_cliques, "One-orbit motifs with complete orbits");
  generate->add_option("--paths", planted.pendant_paths, "Two-orbit hanging paths");
  generate->add_option("--long-paths", planted.pendant_3paths, "Three-orbit hanging paths");
  generate->add_option("--wheels", planted.wheels, "Complex motifs");
  generate->add_flag("--random-weights", planted.random_weights, "Integer weights 1..3 on core edges");
  generate->add_option("-o,--output", output, "Output file");

  auto* generators = app.add_subcommand("generators", "Export automorphism group generators");
  generators->add_option("input", input, "Edge list")->required();
  generators->add_option("-o,--output", output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    return Fail(err, "parse_error", e.what(), 2);
  }

  try {
    if (o.threads > 0) SetThreadCount(o.threads);

    if (stats->parsed()) {
      const Loaded l = LoadAndAnalyze(input, o, true, err);
      const StatsReport r = ComputeStats(l.g, l.a);
      out << (o.format == "text" ? StatsToText(r, o.timings) : StatsToJson(r, o.timings) + "\n");
    } else if (decompose->parsed()) {
      const Loaded l = LoadAndAnalyze(input, o, false, err);
      WithOutput(output, out, [&](std::ostream& s) {
        json doc = json::parse(DecompositionToJson(l.a.decomposition, l.g));
        doc["generators"] = l.a.generators.generators.size();
        doc["group_order"] = GroupOrder(l.a.generators).str();
        if (o.timings) doc["timings"] = {{"t1", l.a.t_generators}, {"t2", l.a.t_decomposition}};
        s << doc.dump(2) << '\n';
      });
    } else if (quotient->parsed()) {
      const Loaded l = LoadAndAnalyze(input, o, false, err);
      const CharacteristicMap cmap = basic ? BasicMap(l.a.decomposition) : l.a.orbits;
      const QuotientNetwork q = symmetric ? SymmetricQuotient(l.g, cmap) : Quotient(l.g, cmap);
      const double tol = o.tol.value_or(1e-9);
      if (!VerifyEquitable(l.g, cmap, tol)) throw InternalError("orbit partition is not equitable");
      json orbits = json::array();
      for (const VertexSet& vs : cmap.members) orbits.push_back(detail::LabelList(l.g, vs));
      json edges = json::array();
      for (Eigen::Index k = 0; k < q.B.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(q.B, k); it; ++it) {
          edges.push_back({it.row() + 1, it.col() + 1, it.value()});
        }
      }
      json doc = {{"n", cmap.num_orbits()},
                  {"symmetric", symmetric},
                  {"basic", basic},
                  {"orbits", orbits},
                  {"edges", edges}};
      if (output.empty()) {
        out << doc.dump() << '\n';
      } else {
        WithOutput(output + ".edges", out, [&](std::ostream& s) {
          for (Eigen::Index k = 0; k < q.B.outerSize(); ++k) {
            for (SparseMatrix::InnerIterator it(q.B, k); it; ++it) {
              s << it.row() + 1 << ' ' << it.col() + 1 << ' ' << FormatDouble(it.value()) << '\n';
            }
          }
        });
        doc.erase("edges");
        WithOutput(output + ".json", out, [&](std::ostream& s) { s << doc.dump(2) << '\n'; });
      }
    } else if (compress->parsed()) {
      const Loaded l = LoadAndAnalyze(input, o, false, err);
      const DenseMatrix a = PairwiseMeasure(measure, l);
      const CompressedMeasure c = LosslessCompress(a, l.a.decomposition, l.g.labels());
      WithOutput(output, out, [&](std::ostream& s) { WriteCompressed(c, s, measure); });
    } else if (decompress->parsed()) {
      std::ifstream in(input);
      if (!in) throw ParseError("cannot read " + input);
      std::string name;
      const CompressedMeasure c = ReadCompressed(in, &name);
      const DenseMatrix a = LosslessDecompress(c);
      WithOutput(output, out, [&](std::ostream& s) {
        if (o.format == "json") {
          json rows = json::array();
          for (Eigen::Index i = 0; i < a.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
            rows.push_back(row);
          }
          json labels = json::array();
          for (const std::string& lab : c.labels) labels.push_back(detail::LabelValue(lab));
          s << json{{"measure", name}, {"labels", labels}, {"matrix", rows}}.dump() << '\n';
        } else {
          WriteMatrixCsv(a, s);
        }
      });
    } else if (eig->parsed()) {
      const Loaded l = LoadAndAnalyze(input, o, false, err);
      SymEigenDecomposition es;
      if (measure == "adjacency") {
        es = SymmetryEig(l.g, l.a.orbits, l.a.decomposition);
      } else if (measure == "laplacian") {
        es = SymmetryEig(Laplacian(l.g).dense(), l.a.orbits, l.a.decomposition);
      } else {
        throw ParseError("eig supports the adjacency and laplacian measures, not '" + measure + "'");
      }
      const std::vector<double> full(es.values.data(), es.values.data() + es.values.size());
      const SpectrumReport report = DiscreteSpectrumReport(full, es.RedundantValues());
      auto tag_name = [](EigenTag t) { return t == EigenTag::kQuotient ? "QUOTIENT" : "REDUNDANT"; };
      WithOutput(output, out, [&](std::ostream& s) {
        if (o.format == "json") {
          json doc = {{"values", full}, {"fraction_explained", report.fraction_explained}};
          if (tags) {
            json t = json::array();
            for (EigenTag tag : es.tags) t.push_back(tag_name(tag));
            doc["tags"] = t;
            doc["motif"] = es.motif;
          }
          s << doc.dump() << '\n';
          return;
        }
        s << (tags ? "index,value,tag,motif\n" : "index,value\n");
        for (Eigen::Index i = 0; i < es.values.size(); ++i) {
          s << i << ',' << FormatDouble(es.values(i));
          if (tags) s << ',' << tag_name(es.tags[static_cast<std::size_t>(i)]) << ',' << es.motif[static_cast<std::size_t>(i)];
          s << '\n';
        }
      });
      if (!vectors_path.empty()) {
        WithOutput(
            vectors_path, out,
            [&](std::ostream& s) {
              const json header = {{"rows", es.vectors.rows()},
                                   {"cols", es.vectors.cols()},
                                   {"dtype", "float64"},
                                   {"order", "column-major"}};
              s << header.dump() << '\n';
              s.write(reinterpret_cast<const char*>(es.vectors.data()),
                      static_cast<std::streamsize>(es.vectors.size() * sizeof(double)));
            },
            true);
      }
      if (!histogram_path.empty()) {
        WithOutput(histogram_path, out, [&](std::ostream& s) {
          s << "bin_start,count\n";
          for (const auto& [bin, count] : report.histogram) s << FormatDouble(bin) << ',' << count << '\n';
        });
      }
      err << "fraction_explained=" << FormatDouble(report.fraction_explained) << '\n';
    } else if (measure_cmd->parsed()) {
      const Loaded l = LoadAndAnalyze(input, o, false, err);
      if (IsVertexMeasure(measure_name)) {
        WithOutput(output, out, [&](std::ostream& s) { WriteVertexMeasure(measure_name, l, o, s, err); });
      } else {
        const DenseMatrix a = PairwiseMeasure(measure_name, l);
        WithOutput(output, out, [&](std::ostream& s) {
          if (o.format == "csv") {
            WriteMatrixCsv(a, s);
          } else {
            WriteCompressed(LosslessCompress(a, l.a.decomposition, l.g.labels()), s, measure_name);
          }
        });
      }
    } else if (generate->parsed()) {
      const Graph g = PlantedSymmetryGraph(planted, seed);
      WithOutput(output, out, [&](std::ostream& s) { WriteEdgeList(g, s); });
    } else if (generators->parsed()) {
      const Loaded l = LoadAndAnalyze(input, o, false, err);
      WithOutput(output, out, [&](std::ostream& s) { ExportGenerators(l.a.generators, l.g, s); });
    }
  } catch (const Error& e) {
    return Fail(err, e.kind(), e.what(), e.exit_code());
  } catch (const std::bad_alloc&) {
    return Fail(err, "internal_error", "out of memory", 4);
  } catch (const std::exception& e) {
    return Fail(err, "internal_error", e.what(), 4);
  }
  return 0;
}

}  // namespace symnet
