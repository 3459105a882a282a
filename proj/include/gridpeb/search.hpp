#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gridpeb/distribution.hpp"
#include "gridpeb/engine.hpp"

namespace gridpeb {

struct SearchConfig {
  MoveRule rule{2};
  /// Largest total tried before giving up with CapExceeded.
  long max_total = 64;
  /// Enumerate one representative per symmetry orbit.
  bool use_symmetry = true;
  /// Worker threads for candidate checks; the result does not depend on it.
  int parallelism = 1;
};

struct PebblingNumber {
  int value = 0;
  /// First solvable distribution of that total in enumeration order.
  Distribution witness;
  /// Candidates that reached the full solvability check.
  long candidates_checked = 0;
};

/// Calls visit(counts) for every vector of `parts` non-negative integers
/// summing to total, in ascending lexicographic order. Stops early when visit
/// returns false; returns false in that case.
bool for_each_composition(std::size_t parts, int total,
                          const std::function<bool(std::span<const int>)>& visit);

/// Smallest total of a solvable distribution under cfg.rule.
///
/// Totals are tried in ascending order; within a total, canonical
/// representatives are visited in lexicographic order. A candidate is
/// discarded without search when some vertex has base-arity weight below 1.
PebblingNumber optimal_pebbling_number(const GridDims& dims, const SearchConfig& cfg = {});

/// x loses arity pebbles and each neighbor of x gains one. Requires
/// dist(x) >= arity + 1 (PreconditionFailed otherwise).
Distribution smoothen(const Distribution& dist, const MoveRule& rule, const Vertex& x);

/// Turns a solvable distribution into a solvable one with every vertex
/// occupied and no more pebbles. For each unoccupied vertex it replays a
/// witnessing move sequence, replacing every move by a smoothening at the
/// move's source. Requires arity >= 5.
Distribution flatten_to_occupied(const Distribution& dist, const MoveRule& rule,
                                 const ReachOptions& options = {});

/// Computes the optimal arity-pebbling number (arity >= 5) and compares it
/// with rows * cols.
bool verify_pi_k_equals_nm(const GridDims& dims, int arity, SearchConfig cfg = {});

/// Exact optimal 3- or 4-pebbling number of a small grid.
PebblingNumber pi_k_explore(const GridDims& dims, int arity, SearchConfig cfg = {});

}  // namespace gridpeb
