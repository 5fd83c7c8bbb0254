#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symnet/graph.hpp"

namespace symnet::detail {

inline nlohmann::json LabelValue(const std::string& label) {
  if (IsIntegerLabel(label)) {
    try {
      return nlohmann::json(std::stoll(label));
    } catch (...) {
    }
  }
  return nlohmann::json(label);
}

inline nlohmann::json LabelList(const Graph& g, const std::vector<Vertex>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : vs) out.push_back(LabelValue(g.label(v)));
  return out;
}

}  // namespace symnet::detail
