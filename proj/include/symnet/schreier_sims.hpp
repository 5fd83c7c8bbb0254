#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symnet {

using BigInt = boost::multiprecision::cpp_int;

// Base and strong generating set built with the deterministic Schreier-Sims
// algorithm. Points are 0..degree-1; products apply the left factor first.
// Group elements are kept as sorted lists of moved points, so work scales
// with supports rather than the degree.
class StabilizerChain {
 public:
  using Perm = std::vector<int>;

  StabilizerChain(std::size_t degree, const std::vector<Perm>& generators);

  BigInt Order() const;
  bool Contains(const Perm& p) const;
  std::vector<int> Base() const;
  std::vector<std::size_t> BasicOrbitSizes() const;

 private:
  struct Sparse {
    std::vector<std::pair<int, int>> moves;  // sorted by source point
    int operator()(int x) const;
  };

  struct Level {
    int base_point = 0;
    std::vector<std::size_t> gens;  // indices into the shared pool
    std::vector<int> orbit;
    std::unordered_map<int, int> parent_gen;  // -2 for the base point
    std::vector<std::size_t> checked;  // per generator: orbit prefix already verified
  };

  static Sparse Compose(const Sparse& first, const Sparse& second);
  static Sparse Invert(const Sparse& p);

  void AddBasePoint(int point);
  std::size_t AddToPool(Sparse g);
  void AddGenerator(std::size_t level, std::size_t pooled);
  void ExtendOrbit(Level& level, std::size_t first_new_gen);
  Sparse Transversal(const Level& level, int point) const;
  // Sifts p from the given level; returns the level where it stopped.
  std::size_t Strip(Sparse& p, std::size_t from) const;

  const Sparse& gen(const Level& level, std::size_t s) const { return pool_[level.gens[s]]; }
  const Sparse& inverse_gen(const Level& level, std::size_t s) const { return inverse_pool_[level.gens[s]]; }

  std::size_t degree_;
  std::vector<Level> levels_;
  std::vector<Sparse> pool_;
  std::vector<Sparse> inverse_pool_;
};

}  // namespace symnet
