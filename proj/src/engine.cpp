#include "gridpeb/engine.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "gridpeb/error.hpp"

namespace gridpeb {

namespace {

using u128 = uint128;
using State = std::u16string;

struct Edge {
  std::size_t from;
  std::size_t to;
};

// Depth-first search state for one query.
struct Search {
  const GridIndex& index;
  int arity;
  std::size_t target;
  int k;
  const std::vector<u128>* scale;  // nullptr: no pruning
  std::vector<Edge> edges;
  std::vector<int> dist_to_target;
  u128 threshold = 0;
  std::unordered_set<State> explored;
  std::vector<Move>* trace;

  bool run(State& s, u128 w) {
    if (static_cast<int>(s[target]) >= k) return true;
    if (!explored.insert(s).second) return false;
    for (const Edge& e : edges) {
      if (static_cast<int>(s[e.from]) < arity) continue;
      u128 next_w = 0;
      if (scale) {
        // w - arity * scale[d(from)] + scale[d(to)], computed without underflow
        const u128 gain = (*scale)[dist_to_target[e.to]];
        const u128 loss = static_cast<u128>(arity) * (*scale)[dist_to_target[e.from]];
        if (w + gain < loss + threshold) continue;
        next_w = w + gain - loss;
      }
      s[e.from] = static_cast<char16_t>(s[e.from] - arity);
      s[e.to] = static_cast<char16_t>(s[e.to] + 1);
      if (trace) {
        trace->push_back(
            {vertex_at(index.dims(), e.from), vertex_at(index.dims(), e.to)});
      }
      const bool found = run(s, next_w);
      s[e.from] = static_cast<char16_t>(s[e.from] + arity);
      s[e.to] = static_cast<char16_t>(s[e.to] - 1);
      if (found) return true;
      if (trace) trace->pop_back();
    }
    return false;
  }
};

}  // namespace

MoveRule::MoveRule(int arity) : arity_(arity) {
  if (arity < 2) throw InvalidArgument("move arity must be at least 2, got " + std::to_string(arity));
}

Distribution apply_move(const Distribution& dist, const MoveRule& rule, const Vertex& from,
                        const Vertex& to) {
  const GridDims& dims = dist.dims();
  require_vertex(dims, from);
  require_vertex(dims, to);
  if (distance(dims, from, to) != 1) {
    throw IllegalMove("vertices " + to_string(from) + " and " + to_string(to) + " are not adjacent");
  }
  if (dist[from] < rule.arity()) {
    throw IllegalMove("vertex " + to_string(from) + " holds " + std::to_string(dist[from]) +
                      " pebbles, a move needs " + std::to_string(rule.arity()));
  }
  Distribution out = dist;
  out.add(from, -rule.arity());
  out.add(to, 1);
  return out;
}

Rational weight(const Distribution& dist, const Vertex& target) {
  const GridDims& dims = dist.dims();
  require_vertex(dims, target);
  const int diam = dims.diameter();
  mpz_class scaled = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist.at(i) == 0) continue;
    const int d = distance(dims, vertex_at(dims, i), target);
    mpz_class term = dist.at(i);
    term <<= static_cast<unsigned>(diam - d);
    scaled += term;
  }
  mpz_class den = 1;
  den <<= static_cast<unsigned>(diam);
  return Rational(scaled, den);
}

ReachabilityOracle::ReachabilityOracle(const GridDims& dims, const MoveRule& rule,
                                       ReachOptions options)
    : index_(dims), rule_(rule), options_(options) {
  if (options_.max_total < 0) throw InvalidArgument("max_total must be non-negative");
  if (options_.max_total > std::numeric_limits<char16_t>::max()) {
    throw InvalidArgument("max_total exceeds the per-vertex state width");
  }
  const int diam = dims.diameter();
  constexpr u128 kLimit = static_cast<u128>(1) << 120;
  std::vector<u128> scale(static_cast<std::size_t>(diam) + 1);
  u128 p = 1;
  bool fits = true;
  for (int e = 0; e <= diam; ++e) {
    scale[static_cast<std::size_t>(diam - e)] = p;
    if (e < diam) {
      if (p > kLimit / static_cast<u128>(rule.arity())) {
        fits = false;
        break;
      }
      p *= static_cast<u128>(rule.arity());
    }
  }
  // total * arity * top scale must stay below 2^127
  if (fits && scale[0] > (kLimit / static_cast<u128>(options_.max_total + 1)) /
                             static_cast<u128>(rule.arity())) {
    fits = false;
  }
  if (fits) scale_ = std::move(scale);
}

void ReachabilityOracle::check_input(const Distribution& dist) const {
  if (!(dist.dims() == dims())) {
    throw InvalidArgument("distribution on " + dist.dims().str() + " passed to a " + dims().str() +
                          " oracle");
  }
  if (dist.total() > options_.max_total) {
    throw CapExceeded("distribution has " + std::to_string(dist.total()) +
                      " pebbles, above the search cap of " + std::to_string(options_.max_total));
  }
}

bool ReachabilityOracle::search(const Distribution& dist, std::size_t target, int k,
                                std::vector<Move>* trace) const {
  Search s{index_, rule_.arity(), target, k, scale_.empty() ? nullptr : &scale_, {}, {}, 0, {}, trace};
  const std::size_t n = index_.size();
  s.dist_to_target.resize(n);
  for (std::size_t v = 0; v < n; ++v) s.dist_to_target[v] = index_.distance(v, target);

  u128 w = 0;
  if (s.scale) {
    for (std::size_t v = 0; v < n; ++v) {
      w += static_cast<u128>(dist.at(v)) * scale_[static_cast<std::size_t>(s.dist_to_target[v])];
    }
    s.threshold = static_cast<u128>(k) * scale_[0];
    if (w < s.threshold) return false;
  }

  std::vector<std::tuple<int, int, std::size_t, std::size_t>> order;
  for (std::size_t u = 0; u < n; ++u) {
    const auto& nb = index_.neighbors(u);
    for (std::size_t j = 0; j < nb.size(); ++j) {
      order.emplace_back(s.dist_to_target[nb[j]], s.dist_to_target[u], u, j);
    }
  }
  std::sort(order.begin(), order.end());
  s.edges.reserve(order.size());
  for (const auto& [dw, du, u, j] : order) s.edges.push_back({u, index_.neighbors(u)[j]});

  State state(n, u'\0');
  for (std::size_t v = 0; v < n; ++v) state[v] = static_cast<char16_t>(dist.at(v));
  return s.run(state, w);
}

bool ReachabilityOracle::is_k_reachable(const Distribution& dist, const Vertex& target,
                                        int k) const {
  check_input(dist);
  require_vertex(dims(), target);
  if (k < 1) throw InvalidArgument("k must be at least 1");
  return search(dist, index_of(dims(), target), k, nullptr);
}

std::optional<std::vector<Move>> ReachabilityOracle::witness(const Distribution& dist,
                                                             const Vertex& target, int k) const {
  check_input(dist);
  require_vertex(dims(), target);
  if (k < 1) throw InvalidArgument("k must be at least 1");
  std::vector<Move> trace;
  if (!search(dist, index_of(dims(), target), k, &trace)) return std::nullopt;
  return trace;
}

int ReachabilityOracle::reach_count(const Distribution& dist, const Vertex& target) const {
  check_input(dist);
  require_vertex(dims(), target);
  const std::size_t t = index_of(dims(), target);
  int k = std::max(dist.at(t), 0);
  while (search(dist, t, k + 1, nullptr)) ++k;
  return k;
}

bool ReachabilityOracle::is_solvable(const Distribution& dist) const {
  return !first_unreachable(dist).has_value();
}

std::optional<Vertex> ReachabilityOracle::first_unreachable(const Distribution& dist) const {
  check_input(dist);
  for (std::size_t v = 0; v < index_.size(); ++v) {
    if (dist.at(v) > 0) continue;
    if (!search(dist, v, 1, nullptr)) return vertex_at(dims(), v);
  }
  return std::nullopt;
}

bool is_k_reachable(const Distribution& dist, const MoveRule& rule, const Vertex& target, int k,
                    const ReachOptions& options) {
  return ReachabilityOracle(dist.dims(), rule, options).is_k_reachable(dist, target, k);
}

int reach_count(const Distribution& dist, const MoveRule& rule, const Vertex& target,
                const ReachOptions& options) {
  return ReachabilityOracle(dist.dims(), rule, options).reach_count(dist, target);
}

bool is_solvable(const Distribution& dist, const MoveRule& rule, const ReachOptions& options) {
  return ReachabilityOracle(dist.dims(), rule, options).is_solvable(dist);
}

}  // namespace gridpeb
