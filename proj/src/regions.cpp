#include "gridpeb/regions.hpp"

#include <algorithm>
#include <queue>

#include "gridpeb/error.hpp"

namespace gridpeb {

namespace {

bool sorted_contains(const std::vector<Vertex>& vs, const Vertex& v) {
  return std::binary_search(vs.begin(), vs.end(), v);
}

RegionPartition build_partition(const Distribution& dist, const ReachabilityOracle& oracle) {
  const GridDims& dims = dist.dims();
  const std::size_t n = dims.size();

  std::vector<char> two_reachable(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    two_reachable[i] = oracle.is_k_reachable(dist, vertex_at(dims, i), 2) ? 1 : 0;
  }

  RegionPartition partition{dims, {}, {}};
  std::vector<int> component(n, -1);
  std::vector<int> owner(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (!two_reachable[start] || component[start] >= 0) continue;
    const int id = static_cast<int>(partition.regions.size());
    Region region;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    component[start] = id;
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      region.core.push_back(vertex_at(dims, v));
      for (const Vertex& w : neighbors(dims, vertex_at(dims, v))) {
        const std::size_t wi = index_of(dims, w);
        if (two_reachable[wi] && component[wi] < 0) {
          component[wi] = id;
          frontier.push(wi);
        }
      }
    }
    std::sort(region.core.begin(), region.core.end());
    std::vector<Vertex> members = region.core;
    for (const Vertex& c : region.core) {
      for (const Vertex& w : neighbors(dims, c)) members.push_back(w);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (const Vertex& m : members) {
      int& o = owner[index_of(dims, m)];
      if (o >= 0 && o != id) {
        throw StructureViolation("vertex " + to_string(m) + " lies in two regions");
      }
      o = id;
    }
    region.members = std::move(members);
    if (region.N() > 3 * region.k() + 2) {
      throw StructureViolation("region with k=" + std::to_string(region.k()) + " has N=" +
                               std::to_string(region.N()) + " > 3k+2");
    }
    partition.regions.push_back(std::move(region));
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (owner[i] >= 0) continue;
    const Vertex v = vertex_at(dims, i);
    if (dist.at(i) != 1 || oracle.reach_count(dist, v) != 1) {
      throw StructureViolation("leftover vertex " + to_string(v) + " is not an occupied, exactly "
                               "1-reachable vertex");
    }
    partition.leftover.push_back(v);
  }
  return partition;
}

}  // namespace

bool Region::contains(const Vertex& v) const { return sorted_contains(members, v); }
bool Region::in_core(const Vertex& v) const { return sorted_contains(core, v); }

std::optional<std::size_t> RegionPartition::region_of(const Vertex& v) const {
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (regions[i].contains(v)) return i;
  }
  return std::nullopt;
}

std::vector<Vertex> two_reachable_set(const Distribution& dist, const ReachOptions& options) {
  const ReachabilityOracle oracle(dist.dims(), MoveRule(2), options);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const Vertex v = vertex_at(dist.dims(), i);
    if (oracle.is_k_reachable(dist, v, 2)) out.push_back(v);
  }
  return out;
}

RegionPartition decompose(const Distribution& dist, const ReachOptions& options) {
  const ReachabilityOracle oracle(dist.dims(), MoveRule(2), options);
  if (const auto bad = oracle.first_unreachable(dist)) {
    throw Unsolvable("distribution is not solvable: " + to_string(*bad) + " is unreachable",
                     bad->row, bad->col);
  }
  return build_partition(dist, oracle);
}

Distribution normalize(const Distribution& dist, const ReachOptions& options) {
  if (dist.size() < 2) throw PreconditionFailed("normalize needs a grid with at least two vertices");
  Distribution q = dist;
  RegionPartition partition = decompose(q, options);
  while (!partition.leftover.empty()) {
    const Vertex x = partition.leftover.front();
    const Vertex u = neighbors(q.dims(), x).front();
    q.add(x, -1);
    q.add(u, 1);
    const std::size_t before = partition.leftover.size();
    partition = decompose(q, options);
    if (partition.leftover.size() >= before) {
      throw StructureViolation("normalization step did not shrink the leftover set");
    }
  }
  return q;
}

std::vector<Vertex> region_frontier(const RegionPartition& partition, const Region& r) {
  std::vector<Vertex> out;
  for (const Vertex& x : r.members) {
    for (const Vertex& w : neighbors(partition.dims, x)) {
      if (r.contains(w)) continue;
      if (partition.region_of(w).has_value()) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

}  // namespace gridpeb
