#include <doctest.h>

#include <algorithm>
#include <random>

#include "gridpeb/error.hpp"
#include "gridpeb/potential.hpp"
#include "gridpeb/regions.hpp"
#include "gridpeb/search.hpp"
#include "oracles.hpp"

using namespace gridpeb;

namespace {

const GridDims kPath5(1, 5);

bool has(const std::vector<Vertex>& vs, const Vertex& v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

// Every solvable canonical distribution of total <= max_total.
std::vector<Distribution> solvable_instances(const GridDims& dims, int max_total) {
  std::vector<Distribution> out;
  const auto perms = symmetry_permutations(dims);
  const ReachabilityOracle oracle(dims, MoveRule(2));
  for (int t = 0; t <= max_total; ++t) {
    for_each_composition(dims.size(), t, [&](std::span<const int> c) {
      if (!is_canonical_counts(c, perms)) return true;
      Distribution d(dims, std::vector<int>(c.begin(), c.end()));
      if (oracle.is_solvable(d)) out.push_back(std::move(d));
      return true;
    });
  }
  return out;
}

}  // namespace

TEST_SUITE("regions") {
  TEST_CASE("two_reachable_set examples") {
    const Distribution two(kPath5, {{{0, 2}, 2}});
    CHECK(two_reachable_set(two) == std::vector<Vertex>{{0, 2}});
    const Distribution four(kPath5, {{{0, 2}, 4}});
    CHECK(two_reachable_set(four) == std::vector<Vertex>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(two_reachable_set(Distribution(kPath5, {{{0, 2}, 1}})).empty());
  }

  TEST_CASE("uniform 2 is one region") {
    const Distribution d = Distribution::uniform(GridDims(3, 4), 2);
    const RegionPartition p = decompose(d);
    REQUIRE(p.regions.size() == 1);
    CHECK(p.regions[0].N() == 12);
    CHECK(p.regions[0].k() == 12);
    CHECK(p.leftover.empty());
    CHECK(region_frontier(p, p.regions[0]).empty());
  }

  TEST_CASE("path with two regions and a leftover vertex") {
    const Distribution d(kPath5, {{{0, 0}, 2}, {{0, 4}, 2}, {{0, 2}, 1}});
    const RegionPartition p = decompose(d);
    REQUIRE(p.regions.size() == 2);
    CHECK(p.regions[0].members == std::vector<Vertex>{{0, 0}, {0, 1}});
    CHECK(p.regions[1].members == std::vector<Vertex>{{0, 3}, {0, 4}});
    CHECK(p.leftover == std::vector<Vertex>{{0, 2}});
    CHECK(region_frontier(p, p.regions[0]).empty());
    CHECK(p.region_of({0, 3}) == 1u);
    CHECK_FALSE(p.region_of({0, 2}).has_value());
  }

  TEST_CASE("abutting regions share a frontier") {
    // Columns 0 and 3 are 2-reachable, columns 1 and 2 are not.
    const GridDims dims(2, 4);
    const Distribution d(dims, {{{0, 0}, 2}, {{1, 0}, 2}, {{0, 3}, 2}, {{1, 3}, 2}});
    const RegionPartition p = decompose(d);
    REQUIRE(p.regions.size() == 2);
    const auto f0 = region_frontier(p, p.regions[0]);
    const auto f1 = region_frontier(p, p.regions[1]);
    CHECK(f0 == std::vector<Vertex>{{0, 1}, {1, 1}});
    CHECK(f1 == std::vector<Vertex>{{0, 2}, {1, 2}});
  }

  TEST_CASE("decompose refuses unsolvable input") {
    CHECK_THROWS_AS(decompose(Distribution(kPath5, {{{0, 0}, 2}})), Unsolvable);
    try {
      decompose(Distribution(kPath5, {{{0, 0}, 2}}));
    } catch (const Unsolvable& e) {
      CHECK(e.row == 0);
      CHECK(e.col == 2);
    }
  }

  TEST_CASE("normalize examples") {
    const Distribution u = Distribution::uniform(GridDims(2, 2), 2);
    CHECK(normalize(u) == u);
    const Distribution five(kPath5, {{{0, 0}, 2}, {{0, 4}, 2}, {{0, 2}, 1}});
    const Distribution q = normalize(five);
    CHECK(q.total() == 5);
    CHECK(is_solvable(q, MoveRule(2)));
    CHECK(decompose(q).leftover.empty());
    const GridDims path3(1, 3);
    CHECK(normalize(Distribution(path3, {{{0, 0}, 2}, {{0, 2}, 1}})) ==
          Distribution(path3, {{{0, 0}, 2}, {{0, 1}, 1}}));
    CHECK_THROWS_AS(normalize(Distribution(GridDims(1, 1), {{{0, 0}, 1}})), PreconditionFailed);
    CHECK_THROWS_AS(normalize(Distribution(kPath5, {{{0, 0}, 1}})), Unsolvable);
  }

  TEST_CASE("partition structure on every solvable 3x3 distribution of total <= 6") {
    const GridDims dims(3, 3);
    const ReachabilityOracle oracle(dims, MoveRule(2));
    const auto instances = solvable_instances(dims, 6);
    CHECK(instances.size() > 100);
    for (const Distribution& d : instances) {
      const RegionPartition p = decompose(d);
      std::vector<int> owner(dims.size(), -1);
      for (std::size_t r = 0; r < p.regions.size(); ++r) {
        const Region& reg = p.regions[r];
        REQUIRE(reg.k() >= 1);
        REQUIRE(reg.N() <= 3 * reg.k() + 2);
        for (const Vertex& v : reg.members) {
          REQUIRE(owner[index_of(dims, v)] == -1);
          owner[index_of(dims, v)] = static_cast<int>(r);
          const bool in_core = reg.in_core(v);
          REQUIRE(in_core == oracle.is_k_reachable(d, v, 2));
          if (!in_core) {
            const auto nb = neighbors(dims, v);
            REQUIRE(std::any_of(nb.begin(), nb.end(), [&](const Vertex& w) { return reg.in_core(w); }));
          }
        }
      }
      for (const Vertex& s : p.leftover) {
        REQUIRE(owner[index_of(dims, s)] == -1);
        REQUIRE(d[s] == 1);
        REQUIRE(oracle.reach_count(d, s) == 1);
      }
      const auto covered = std::count_if(owner.begin(), owner.end(), [](int o) { return o >= 0; });
      REQUIRE(static_cast<std::size_t>(covered) + p.leftover.size() == dims.size());

      const ValueMap values = value_map(d);
      for (const Region& reg : p.regions) {
        for (const Vertex& x : region_frontier(p, reg)) REQUIRE(values[x] >= Rational(3, 2));
      }
      if (!p.leftover.empty()) {
        const Distribution q = normalize(d);
        REQUIRE(q.total() == d.total());
        REQUIRE(oracle.is_solvable(q));
        REQUIRE(decompose(q).leftover.empty());
      }
    }
  }

  TEST_CASE("random 4x5 instances keep the size bound") {
    const GridDims dims(4, 5);
    const ReachabilityOracle oracle(dims, MoveRule(2));
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> pick(0, 2);
    int checked = 0;
    for (int i = 0; i < 400 && checked < 60; ++i) {
      std::vector<int> c(dims.size());
      for (auto& x : c) x = pick(rng) == 2 ? pick(rng) + 1 : 0;
      const Distribution d(dims, c);
      if (!oracle.is_solvable(d)) continue;
      ++checked;
      const RegionPartition p = decompose(d);
      for (const Region& r : p.regions) CHECK(r.N() <= 3 * r.k() + 2);
      CHECK(decompose(normalize(d)).leftover.empty());
    }
    CHECK(checked > 10);
  }
}

TEST_SUITE("potential") {
  TEST_CASE("value examples") {
    const GridDims dims(3, 3);
    CHECK(value(Distribution(dims, {{{1, 1}, 1}}), {1, 1}) == Rational(1));
    CHECK(value(Distribution(dims, {{{0, 1}, 2}}), {1, 1}) == Rational(1));
    CHECK(value(hem(Distribution(dims)), {1, 1}) == Rational(6));
  }

  TEST_CASE("value agrees with weight and a direct sum") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> pick(0, 4);
    for (const auto& dims : {GridDims(3, 3), GridDims(4, 6), GridDims(1, 7)}) {
      for (int i = 0; i < 30; ++i) {
        std::vector<int> c(dims.size());
        for (auto& x : c) x = pick(rng);
        const Distribution d(dims, c);
        const ValueMap vm = value_map(d);
        for (std::size_t x = 0; x < d.size(); ++x) {
          CHECK(vm.values[x] == weight(d, vertex_at(dims, x)));
          CHECK(vm.values[x].raw() == oracle::direct_value(d, x));
          CHECK(vm.values[x].is_dyadic());
        }
      }
    }
  }

  TEST_CASE("effect") {
    CHECK(effect(GridDims(1, 1), {0, 0}) == Rational(1));
    // distance histogram 1, 4, 8, 8, 4 from the BFS oracle
    const auto bfs = oracle::bfs_distances(5, 5);
    std::vector<int> hist(9, 0);
    for (std::size_t y = 0; y < 25; ++y) ++hist[bfs[12][y]];
    Rational expected;
    for (unsigned d = 0; d < hist.size(); ++d) expected += Rational(hist[d]) * Rational::dyadic(d);
    CHECK(effect(GridDims(5, 5), {2, 2}) == expected);
    CHECK(effect(GridDims(5, 5), {2, 2}) == Rational(25, 4));
    for (int m = 1; m <= 9; ++m) {
      for (int n = 1; n <= 9; ++n) {
        const GridDims dims(m, n);
        const Rational center = effect(dims, {(m - 1) / 2, (n - 1) / 2});
        CHECK(center < Rational(9));
        for (std::size_t x = 0; x < dims.size(); ++x) CHECK(effect(dims, vertex_at(dims, x)) <= center);
      }
    }
  }

  TEST_CASE("value and effect double counting") {
    CHECK(value_effect_identity_check(Distribution(GridDims(3, 4))));
    CHECK(value_effect_identity_check(Distribution(GridDims(3, 4), {{{1, 2}, 1}})));
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> pick(0, 5);
    const GridDims dims(4, 6);
    for (int i = 0; i < 100; ++i) {
      std::vector<int> c(dims.size());
      for (auto& x : c) x = pick(rng);
      CHECK(value_effect_identity_check(Distribution(dims, c)));
    }
  }

  TEST_CASE("hem") {
    CHECK(hem(Distribution(GridDims(2, 2))) == Distribution::uniform(GridDims(2, 2), 2));
    const Distribution h = hem(Distribution(GridDims(3, 3)));
    CHECK(h.total() == 16);
    CHECK(h[{1, 1}] == 0);
    const Distribution big = hem(Distribution::uniform(GridDims(5, 8), 1));
    CHECK(big.total() == 40 + 44);
    CHECK(hem(Distribution(GridDims(1, 4))) == Distribution::uniform(GridDims(1, 4), 2));
  }

  TEST_CASE("extra value") {
    const GridDims dims(1, 5);
    CHECK(extra_value(Distribution(dims, {{{0, 2}, 2}}), {0, 2}) == Rational(0));
    CHECK(extra_value(Distribution(dims, {{{0, 2}, 3}}), {0, 2}) == Rational(1));
    CHECK(extra_value(Distribution(dims, {{{0, 0}, 2}, {{0, 2}, 2}}), {0, 2}) == Rational(1, 2));
    CHECK_THROWS_AS(extra_value(Distribution(dims, {{{0, 2}, 1}}), {0, 2}), PreconditionFailed);
  }

  TEST_CASE("region average") {
    const Distribution u = Distribution::uniform(GridDims(2, 2), 2);
    const RegionPartition p = decompose(u);
    CHECK(region_average(u, p.regions[0]) == Rational(9, 2));
    const Distribution d(GridDims(1, 5), {{{0, 0}, 2}, {{0, 4}, 2}, {{0, 2}, 1}});
    const RegionPartition q = decompose(d);
    const ValueMap vm = value_map(d);
    for (const Region& r : q.regions) {
      Rational sum;
      for (const Vertex& v : r.members) sum += vm[v];
      CHECK(region_average(vm, r) * Rational(r.N()) == sum);
    }
  }

  TEST_CASE("hemmed solvable 3x3 instances: values >= 4/3 and boundary 2-reachable") {
    const GridDims dims(3, 3);
    const auto instances = solvable_instances(dims, 5);
    for (const Distribution& d : instances) {
      const Distribution h = hem(d);
      const ValueMap vm = value_map(h);
      CHECK(vm.min() >= Rational(4, 3));
      const auto core = two_reachable_set(h);
      for (const Vertex& b : boundary(dims)) CHECK(has(core, b));
      const RegionPartition p = decompose(h);
      for (const Region& r : p.regions) CHECK(region_average(vm, r) >= Rational(4, 3));
    }
  }
}
