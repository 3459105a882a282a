#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gridpeb/distribution.hpp"
#include "gridpeb/grid.hpp"
#include "gridpeb/rational.hpp"

namespace gridpeb {

__extension__ using uint128 = unsigned __int128;

/// k-pebbling move rule: a move removes `arity` pebbles from a vertex and adds
/// one to a neighbor. The classic game is arity 2.
class MoveRule {
public:
  explicit MoveRule(int arity = 2);
  int arity() const { return arity_; }

  friend bool operator==(const MoveRule&, const MoveRule&) = default;

private:
  int arity_;
};

struct Move {
  Vertex from;
  Vertex to;

  friend bool operator==(const Move&, const Move&) = default;
};

struct ReachOptions {
  /// Inputs with more pebbles than this are rejected with CapExceeded before
  /// any search starts.
  long max_total = 64;
};

/// Returns the distribution after one move; throws IllegalMove when `to` is not
/// adjacent to `from` or `from` holds fewer than arity pebbles.
Distribution apply_move(const Distribution& dist, const MoveRule& rule, const Vertex& from,
                        const Vertex& to);

/// Sum over z of dist(z) * 2^{-d(z, target)}.
Rational weight(const Distribution& dist, const Vertex& target);

/// Decides k-reachability by depth-first search over distributions.
///
/// Each query keeps its own set of fully explored states. A state is pruned
/// when its base-arity weight  sum_z P(z) * arity^{-d(z,t)}  drops below k:
/// a move u -> w changes that weight by -arity^{1-d(u,t)} + arity^{-d(w,t)},
/// which is never positive because d(w,t) >= d(u,t) - 1, and the pebbles on t
/// never exceed it. For arity 2 this is the dyadic weight above. Moves are
/// tried in a fixed order (destinations nearest the target first), so traces
/// are reproducible.
class ReachabilityOracle {
public:
  ReachabilityOracle(const GridDims& dims, const MoveRule& rule, ReachOptions options = {});

  const GridDims& dims() const { return index_.dims(); }
  const MoveRule& rule() const { return rule_; }

  bool is_k_reachable(const Distribution& dist, const Vertex& target, int k) const;
  /// A legal move sequence ending with at least k pebbles on target, if any.
  std::optional<std::vector<Move>> witness(const Distribution& dist, const Vertex& target,
                                           int k) const;
  /// Largest k such that target is k-reachable (0 when unreachable).
  int reach_count(const Distribution& dist, const Vertex& target) const;
  bool is_solvable(const Distribution& dist) const;
  /// First vertex (row-major) that is not 1-reachable.
  std::optional<Vertex> first_unreachable(const Distribution& dist) const;

private:
  void check_input(const Distribution& dist) const;
  bool search(const Distribution& dist, std::size_t target, int k,
              std::vector<Move>* trace) const;

  GridIndex index_;
  MoveRule rule_;
  ReachOptions options_;
  // scale_[d] = arity^{diameter - d}; empty when the scaled weights would not
  // fit in 128 bits, which disables pruning.
  std::vector<uint128> scale_;
};

bool is_k_reachable(const Distribution& dist, const MoveRule& rule, const Vertex& target, int k,
                    const ReachOptions& options = {});
int reach_count(const Distribution& dist, const MoveRule& rule, const Vertex& target,
                const ReachOptions& options = {});
bool is_solvable(const Distribution& dist, const MoveRule& rule, const ReachOptions& options = {});

}  // namespace gridpeb
