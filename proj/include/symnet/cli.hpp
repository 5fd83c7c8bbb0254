#pragma once

#include <iosfwd>
#include <string>

#include "symnet/automorphism.hpp"
#include "symnet/graph.hpp"
#include "symnet/symmetry.hpp"

namespace symnet {

struct StatsReport {
  std::size_t n_g = 0;
  std::size_t m_g = 0;
  std::size_t gen = 0;
  std::string order;  // exact decimal
  int order_log10 = 0;
  std::size_t sm = 0;
  double bsm = 0.0;  // percentages from here on
  double mv = 0.0;
  double n_q = 0.0;
  double m_q = 0.0;
  double ext_s = 0.0;
  double c_full = 0.0;
  double sp = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
};

StatsReport ComputeStats(const Graph& g, const SymmetryAnalysis& a);
// Timings are included only when asked for so that output is reproducible.
std::string StatsToJson(const StatsReport& r, bool timings);
std::string StatsToText(const StatsReport& r, bool timings);

// Entry point of the symnet tool. Errors are reported on err as one line
// "error: <kind>: <message>" and mapped to exit codes 2, 3 and 4.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symnet
