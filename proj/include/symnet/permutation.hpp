#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symnet/graph.hpp"

namespace symnet {

// A bijection on 0..n-1. Only moved points are stored, so generators of
// large sparse graphs stay proportional to their support.
class Permutation {
 public:
  using Move = std::pair<Vertex, Vertex>;

  Permutation() = default;
  // Throws ContractError if image is not a bijection on 0..n-1.
  explicit Permutation(const std::vector<Vertex>& image);
  // Points not listed are fixed. Throws ContractError unless the moves form a bijection.
  static Permutation FromMoves(std::size_t n, std::vector<Move> moves);
  static Permutation Identity(std::size_t n);

  std::size_t size() const { return n_; }
  Vertex operator[](Vertex i) const;
  std::vector<Vertex> image() const;
  // Moved points with their images, ascending by point.
  const std::vector<Move>& moves() const { return moves_; }

  bool IsIdentity() const;
  // Vertices moved by the permutation, ascending.
  std::vector<Vertex> Support() const;
  Permutation Inverse() const;
  // Applies *this first, then other.
  Permutation Then(const Permutation& other) const;
  // Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<Vertex>> Cycles() const;

  bool operator==(const Permutation& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Move> moves_;
};

using LabelResolver = std::function<std::optional<Vertex>(const std::string&)>;

// Disjoint-cycle notation such as "(1 2)(3 4)"; the identity prints as "()".
std::string FormatCycles(const Permutation& p, const std::vector<std::string>& labels);
// Parses one line of cycle notation. Throws ParseError on repeated points,
// unknown labels or malformed syntax.
Permutation ParseCycles(const std::string& text, std::size_t n, const LabelResolver& resolve);

}  // namespace symnet
