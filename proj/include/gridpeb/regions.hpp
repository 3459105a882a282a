#pragma once

#include <optional>
#include <vector>

#include "gridpeb/distribution.hpp"
#include "gridpeb/engine.hpp"

namespace gridpeb {

/// A region of reachability: a maximal connected set of 2-reachable vertices
/// (the core) together with all of their neighbors. Both lists are sorted
/// row-major.
struct Region {
  std::vector<Vertex> core;
  std::vector<Vertex> members;

  int k() const { return static_cast<int>(core.size()); }
  int N() const { return static_cast<int>(members.size()); }
  bool contains(const Vertex& v) const;
  bool in_core(const Vertex& v) const;
};

/// Regions plus the leftover set of occupied, exactly 1-reachable vertices
/// that belong to no region.
struct RegionPartition {
  GridDims dims;
  std::vector<Region> regions;
  std::vector<Vertex> leftover;

  /// Index into `regions` of the region containing v.
  std::optional<std::size_t> region_of(const Vertex& v) const;
};

/// Vertices that can receive two pebbles under classic (arity 2) moves.
std::vector<Vertex> two_reachable_set(const Distribution& dist, const ReachOptions& options = {});

/// Splits the grid of a solvable distribution into regions and leftover.
///
/// Throws Unsolvable for unsolvable input. After construction the structure is
/// checked: regions are pairwise disjoint, every leftover vertex carries
/// exactly one pebble and is exactly 1-reachable, and every region satisfies
/// N <= 3k + 2. A failed check raises StructureViolation.
RegionPartition decompose(const Distribution& dist, const ReachOptions& options = {});

/// Moves the pebble of each leftover vertex onto its first neighbor until the
/// leftover set is empty. Keeps the total and solvability.
Distribution normalize(const Distribution& dist, const ReachOptions& options = {});

/// Members of r with at least one neighbor inside a different region.
std::vector<Vertex> region_frontier(const RegionPartition& partition, const Region& r);

}  // namespace gridpeb
