#pragma once

#include <cstdint>
#include <deque>
#include <set>
#include <utility>
#include <vector>

#include "symnet/graph.hpp"

namespace symnet::detail {

// Rounds to 12 significant digits so that computed weights compare stably.
double RoundWeight(double w);

// Ordered partition with trail-based undo and equitable refinement. Cells
// are contiguous ranges of `elements`; a cell is identified by its start.
class Refiner {
 public:
  explicit Refiner(const Graph& g);

  // Installs an initial ordered partition and refines it.
  std::uint64_t Reset(const std::vector<std::vector<Vertex>>& cells);
  // Splits v off the front of its cell and refines. Returns a trace hash
  // that depends only on positions, sizes and signatures.
  std::uint64_t Individualize(Vertex v);

  std::size_t Mark() const { return trail_.size(); }
  void Undo(std::size_t mark);
  // (start, length) of every cell split since the mark.
  std::vector<std::pair<int, int>> SplitsSince(std::size_t mark) const;

  // Start of the first smallest non-singleton cell, or -1 if discrete.
  int TargetCell() const;
  bool Discrete() const { return num_cells_ == static_cast<int>(n_); }
  int num_cells() const { return num_cells_; }

  const std::vector<Vertex>& elements() const { return elements_; }
  int cell_start(Vertex v) const { return cell_start_[v]; }
  int cell_length(int start) const { return cell_len_[start]; }
  std::vector<std::vector<Vertex>> Cells() const;

 private:
  struct Code {
    Vertex vertex;
    std::uint32_t code;
  };
  struct SplitRecord {
    int start;
    int len;
  };

  std::uint64_t Refine();
  void SplitCell(int start, int len, const std::vector<int>& part_lengths, std::uint64_t& hash);
  void Enqueue(int start);

  std::size_t n_;
  std::vector<std::size_t> contrib_offsets_;
  std::vector<Code> contrib_;

  std::vector<Vertex> elements_;
  std::vector<int> pos_;
  std::vector<int> cell_start_;
  std::vector<int> cell_len_;
  int num_cells_ = 0;
  std::set<std::pair<int, int>> nonsingleton_;  // (length, start)
  std::vector<SplitRecord> trail_;
  std::deque<int> queue_;
  std::vector<char> in_queue_;

  std::vector<Code> touched_;
  std::vector<std::size_t> sig_begin_;
  std::vector<std::size_t> sig_end_;
};

}  // namespace symnet::detail
