#include "symnet/container.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "symnet/error.hpp"

namespace symnet {

using nlohmann::json;

std::string HexDouble(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", x);
  return buf;
}

double ParseHexDouble(const std::string& text) {
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw ParseError("bad floating-point value '" + text + "'");
  }
  return x;
}

void WriteCompressed(const CompressedMeasure& c, std::ostream& out, const std::string& measure) {
  json b = json::array();
  for (Eigen::Index k = 0; k < c.B.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(c.B, k); it; ++it) {
      b.push_back({it.row(), it.col(), HexDouble(it.value())});
    }
  }
  json orbits = json::array();
  for (const OrbitAnnotation& o : c.annotation.orbits) {
    orbits.push_back({{"orbit", o.orbit}, {"beta", HexDouble(o.beta)}});
  }
  json pairs = json::array();
  for (const PairAnnotation& p : c.annotation.pairs) {
    pairs.push_back({{"motif", p.motif},
                     {"orbit1", p.orbit1},
                     {"orbit2", p.orbit2},
                     {"delta", HexDouble(p.delta)},
                     {"perm", p.perm}});
  }
  json raw = json::array();
  for (const RawBlock& r : c.annotation.raw_blocks) {
    json values = json::array();
    for (Eigen::Index i = 0; i < r.values.rows(); ++i) {
      for (Eigen::Index j = 0; j < r.values.cols(); ++j) values.push_back(HexDouble(r.values(i, j)));
    }
    raw.push_back({{"motif", r.motif}, {"vertices", r.vertices}, {"values", values}});
  }
  json doc = {{"format", "symnet-compressed"},
              {"format_version", kContainerVersion},
              {"n", c.cmap.num_vertices()},
              {"m", c.cmap.num_orbits()},
              {"measure", measure},
              {"orbits", c.cmap.members},
              {"B", b},
              {"annotation", {{"orbits", orbits}, {"pairs", pairs}, {"raw_blocks", raw}}},
              {"labels", c.labels}};
  out << doc.dump() << '\n';
}

CompressedMeasure ReadCompressed(std::istream& in, std::string* measure) {
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("container is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("format") != "symnet-compressed") throw ParseError("not a compressed container");
    if (doc.at("format_version").get<int>() != kContainerVersion) {
      throw ParseError("unsupported container version");
    }
    const auto n = doc.at("n").get<std::size_t>();
    CompressedMeasure c;
    c.cmap = MakeCharacteristicMap(doc.at("orbits").get<Orbits>(), n);
    if (c.cmap.num_orbits() != doc.at("m").get<std::size_t>()) {
      throw ParseError("orbit count does not match header");
    }
    const auto m = static_cast<Eigen::Index>(c.cmap.num_orbits());
    std::vector<Eigen::Triplet<double>> ts;
    for (const json& t : doc.at("B")) {
      const auto k = t.at(0).get<Eigen::Index>();
      const auto l = t.at(1).get<Eigen::Index>();
      if (k < 0 || l < 0 || k >= m || l >= m) throw ParseError("B entry out of range");
      ts.emplace_back(k, l, ParseHexDouble(t.at(2).get<std::string>()));
    }
    c.B.resize(m, m);
    c.B.setFromTriplets(ts.begin(), ts.end());
    const json& ann = doc.at("annotation");
    for (const json& o : ann.at("orbits")) {
      c.annotation.orbits.push_back(
          {o.at("orbit").get<int>(), ParseHexDouble(o.at("beta").get<std::string>())});
    }
    for (const json& p : ann.at("pairs")) {
      PairAnnotation pa;
      pa.motif = p.at("motif").get<int>();
      pa.orbit1 = p.at("orbit1").get<int>();
      pa.orbit2 = p.at("orbit2").get<int>();
      pa.delta = ParseHexDouble(p.at("delta").get<std::string>());
      pa.perm = p.at("perm").get<std::vector<Vertex>>();
      c.annotation.pairs.push_back(std::move(pa));
    }
    for (const json& r : ann.at("raw_blocks")) {
      RawBlock block;
      block.motif = r.at("motif").get<int>();
      block.vertices = r.at("vertices").get<std::vector<Vertex>>();
      const auto k = static_cast<Eigen::Index>(block.vertices.size());
      const json& values = r.at("values");
      if (values.size() != static_cast<std::size_t>(k * k)) throw ParseError("raw block size mismatch");
      block.values.resize(k, k);
      for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
          block.values(i, j) = ParseHexDouble(values.at(static_cast<std::size_t>(i * k + j)).get<std::string>());
        }
      }
      c.annotation.raw_blocks.push_back(std::move(block));
    }
    c.labels = doc.at("labels").get<std::vector<std::string>>();
    if (measure) *measure = doc.value("measure", "");
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed container: ") + e.what());
  } catch (const ContractError& e) {
    throw ParseError(std::string("malformed container: ") + e.what());
  }
}

}  // namespace symnet
