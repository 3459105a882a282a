#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gridpeb/grid.hpp"

namespace gridpeb {

/// Non-negative pebble count per vertex of a grid, stored row-major.
class Distribution {
public:
  Distribution() = default;
  explicit Distribution(const GridDims& dims);
  /// Throws InvalidArgument on a size mismatch or a negative count.
  Distribution(const GridDims& dims, std::vector<int> counts);
  /// Sparse construction: listed vertices get the given counts, the rest 0.
  Distribution(const GridDims& dims, std::initializer_list<std::pair<Vertex, int>> pebbles);

  static Distribution uniform(const GridDims& dims, int per_vertex);

  const GridDims& dims() const { return dims_; }
  std::span<const int> counts() const { return counts_; }
  std::size_t size() const { return counts_.size(); }

  int operator[](const Vertex& v) const;
  int at(std::size_t index) const { return counts_[index]; }
  void set(const Vertex& v, int count);
  void add(const Vertex& v, int delta);

  /// |P|, the total number of pebbles.
  long total() const;
  /// Vertices holding no pebble, row-major.
  std::vector<Vertex> unoccupied() const;
  /// True when every count here is at least the corresponding count of other.
  bool dominates(const Distribution& other) const;

  std::string str() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

private:
  GridDims dims_;
  std::vector<int> counts_;
};

/// Canonical representative of dist's symmetry orbit: the image whose
/// row-major count vector is lexicographically greatest, i.e. pebbles are
/// pushed toward (0,0). Idempotent and constant on orbits.
Distribution canonicalize(const GridDims& dims, const Distribution& dist);
bool is_canonical(const Distribution& dist);

/// Canonical form over raw counts with precomputed permutations.
bool is_canonical_counts(std::span<const int> counts,
                         const std::vector<std::vector<std::size_t>>& perms);

}  // namespace gridpeb
