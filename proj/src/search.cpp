#include "gridpeb/search.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <optional>

#include "gridpeb/error.hpp"

namespace gridpeb {

namespace {

bool compose(std::vector<int>& counts, std::size_t pos, int remaining,
             const std::function<bool(std::span<const int>)>& visit) {
  if (pos + 1 == counts.size()) {
    counts[pos] = remaining;
    return visit(counts);
  }
  for (int c = 0; c <= remaining; ++c) {
    counts[pos] = c;
    if (!compose(counts, pos + 1, remaining - c, visit)) return false;
  }
  return true;
}

// Necessary condition for solvability: every vertex has base-arity weight at
// least 1. Scaled by arity^diameter; disabled if that overflows.
class WeightFilter {
public:
  WeightFilter(const GridIndex& index, int arity, long max_total) : index_(index) {
    const int diam = index.dims().diameter();
    unsigned long long p = 1;
    std::vector<unsigned long long> scale(static_cast<std::size_t>(diam) + 1);
    const auto limit = std::numeric_limits<unsigned long long>::max() /
                       static_cast<unsigned long long>(max_total + 1);
    for (int e = 0; e <= diam; ++e) {
      scale[static_cast<std::size_t>(diam - e)] = p;
      if (e == diam) break;
      if (p > limit / static_cast<unsigned long long>(arity)) return;
      p *= static_cast<unsigned long long>(arity);
    }
    scale_ = std::move(scale);
  }

  bool passes(std::span<const int> counts) const {
    if (scale_.empty()) return true;
    const std::size_t n = index_.size();
    for (std::size_t v = 0; v < n; ++v) {
      unsigned long long w = 0;
      for (std::size_t z = 0; z < n && w < scale_[0]; ++z) {
        if (counts[z]) {
          w += static_cast<unsigned long long>(counts[z]) *
               scale_[static_cast<std::size_t>(index_.distance(v, z))];
        }
      }
      if (w < scale_[0]) return false;
    }
    return true;
  }

private:
  const GridIndex& index_;
  std::vector<unsigned long long> scale_;
};

// Index of the first solvable candidate, if any.
std::optional<std::size_t> first_solvable(const std::vector<Distribution>& candidates,
                                          const ReachabilityOracle& oracle, int workers) {
  if (workers <= 1 || candidates.size() < 2) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (oracle.is_solvable(candidates[i])) return i;
    }
    return std::nullopt;
  }
  const auto w = static_cast<std::size_t>(workers);
  std::vector<std::future<std::optional<std::size_t>>> jobs;
  for (std::size_t start = 0; start < w; ++start) {
    jobs.push_back(std::async(std::launch::async, [&, start] {
      std::optional<std::size_t> best;
      for (std::size_t i = start; i < candidates.size(); i += w) {
        if (oracle.is_solvable(candidates[i])) return std::optional<std::size_t>(i);
      }
      return best;
    }));
  }
  std::optional<std::size_t> best;
  for (auto& job : jobs) {
    const auto r = job.get();
    if (r && (!best || *r < *best)) best = r;
  }
  return best;
}

}  // namespace

bool for_each_composition(std::size_t parts, int total,
                          const std::function<bool(std::span<const int>)>& visit) {
  if (parts == 0) throw InvalidArgument("composition needs at least one part");
  if (total < 0) throw InvalidArgument("composition total must be non-negative");
  std::vector<int> counts(parts, 0);
  return compose(counts, 0, total, visit);
}

PebblingNumber optimal_pebbling_number(const GridDims& dims, const SearchConfig& cfg) {
  if (cfg.max_total < 1) throw InvalidArgument("max_total must be at least 1");
  const GridIndex index(dims);
  const ReachabilityOracle oracle(dims, cfg.rule, ReachOptions{cfg.max_total});
  const WeightFilter filter(index, cfg.rule.arity(), cfg.max_total);
  const auto perms = symmetry_permutations(dims);

  PebblingNumber out;
  for (int t = 1; t <= cfg.max_total; ++t) {
    std::vector<Distribution> candidates;
    for_each_composition(dims.size(), t, [&](std::span<const int> counts) {
      if (cfg.use_symmetry && !is_canonical_counts(counts, perms)) return true;
      if (!filter.passes(counts)) return true;
      candidates.emplace_back(dims, std::vector<int>(counts.begin(), counts.end()));
      return true;
    });
    out.candidates_checked += static_cast<long>(candidates.size());
    if (const auto hit = first_solvable(candidates, oracle, cfg.parallelism)) {
      out.value = t;
      out.witness = candidates[*hit];
      return out;
    }
  }
  throw CapExceeded("no solvable distribution on " + dims.str() + " with at most " +
                    std::to_string(cfg.max_total) + " pebbles");
}

Distribution smoothen(const Distribution& dist, const MoveRule& rule, const Vertex& x) {
  if (dist[x] < rule.arity() + 1) {
    throw PreconditionFailed("smoothening at " + to_string(x) + " needs at least " +
                             std::to_string(rule.arity() + 1) + " pebbles, found " +
                             std::to_string(dist[x]));
  }
  Distribution out = dist;
  out.add(x, -rule.arity());
  for (const Vertex& w : neighbors(dist.dims(), x)) out.add(w, 1);
  return out;
}

Distribution flatten_to_occupied(const Distribution& dist, const MoveRule& rule,
                                 const ReachOptions& options) {
  if (rule.arity() < 5) {
    throw PreconditionFailed("flattening needs arity >= 5 so a smoothening never adds pebbles");
  }
  const ReachabilityOracle oracle(dist.dims(), rule, options);
  if (const auto bad = oracle.first_unreachable(dist)) {
    throw Unsolvable("distribution is not solvable: " + to_string(*bad) + " is unreachable",
                     bad->row, bad->col);
  }
  Distribution current = dist;
  while (true) {
    const auto empty = current.unoccupied();
    if (empty.empty()) return current;
    const auto moves = oracle.witness(current, empty.front(), 1);
    if (!moves) throw StructureViolation("solvable distribution lost a reachable vertex");
    const long total_before = current.total();
    for (const Move& mv : *moves) {
      // The replayed state dominates the state of the original sequence, so
      // the source always has at least arity pebbles. With exactly arity we
      // smoothen as if one extra pebble were present, which keeps the source
      // occupied.
      if (current[mv.from] < rule.arity()) {
        throw StructureViolation("replayed move source lost its pebbles");
      }
      if (current[mv.from] == rule.arity()) current.add(mv.from, 1);
      current = smoothen(current, rule, mv.from);
    }
    if (current.unoccupied().size() >= empty.size() || current.total() > total_before) {
      throw StructureViolation("flattening step did not reduce the unoccupied set");
    }
  }
}

bool verify_pi_k_equals_nm(const GridDims& dims, int arity, SearchConfig cfg) {
  if (arity < 5) throw InvalidArgument("the pi_k = mn identity is stated for arity >= 5");
  cfg.rule = MoveRule(arity);
  cfg.max_total = std::max<long>(cfg.max_total, static_cast<long>(dims.size()));
  return optimal_pebbling_number(dims, cfg).value == static_cast<int>(dims.size());
}

PebblingNumber pi_k_explore(const GridDims& dims, int arity, SearchConfig cfg) {
  if (arity != 3 && arity != 4) throw InvalidArgument("pi_k exploration covers arity 3 and 4");
  cfg.rule = MoveRule(arity);
  cfg.max_total = std::max<long>(cfg.max_total, static_cast<long>(dims.size()));
  return optimal_pebbling_number(dims, cfg);
}

}  // namespace gridpeb
