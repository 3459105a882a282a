#include <doctest.h>

#include <random>

#include "gridpeb/engine.hpp"
#include "gridpeb/error.hpp"
#include "oracles.hpp"

using namespace gridpeb;

namespace {

const GridDims kPath3(1, 3);

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("apply_move") {
    const GridDims dims(1, 2);
    const Vertex a{0, 0}, b{0, 1};
    CHECK(apply_move(Distribution(dims, {{a, 2}}), MoveRule(2), a, b) == Distribution(dims, {{b, 1}}));
    CHECK(apply_move(Distribution(dims, {{a, 5}}), MoveRule(5), a, b) == Distribution(dims, {{b, 1}}));
    CHECK(apply_move(Distribution(dims, {{a, 3}, {b, 1}}), MoveRule(2), a, b) ==
          Distribution(dims, {{a, 1}, {b, 2}}));
    CHECK_THROWS_AS(apply_move(Distribution(dims, {{a, 1}}), MoveRule(2), a, b), IllegalMove);
    CHECK_THROWS_AS(apply_move(Distribution(kPath3, {{a, 4}}), MoveRule(2), a, {0, 2}), IllegalMove);
    CHECK_THROWS_AS(MoveRule(1), InvalidArgument);
  }

  TEST_CASE("weight") {
    const Vertex t{0, 0};
    CHECK(weight(Distribution(kPath3, {{t, 1}}), t) == Rational(1));
    CHECK(weight(Distribution(kPath3, {{{0, 1}, 1}}), t) == Rational(1, 2));
    CHECK(weight(Distribution(kPath3, {{{0, 2}, 2}, {t, 1}}), t) == Rational(3, 2));
  }

  TEST_CASE("reachability examples") {
    const Vertex far{0, 2};
    const Distribution four(kPath3, {{{0, 0}, 4}});
    const Distribution three(kPath3, {{{0, 0}, 3}});
    CHECK(is_k_reachable(four, MoveRule(2), far, 1));
    CHECK_FALSE(is_k_reachable(three, MoveRule(2), far, 1));
    CHECK(is_k_reachable(Distribution(kPath3, {{far, 2}}), MoveRule(2), far, 2));
    CHECK(reach_count(Distribution(kPath3, {{far, 2}}), MoveRule(2), far) == 2);
    CHECK(reach_count(Distribution(GridDims(1, 4), {{{0, 0}, 1}}), MoveRule(2), {0, 3}) == 0);
    CHECK_THROWS_AS(is_k_reachable(four, MoveRule(2), far, 0), InvalidArgument);
  }

  TEST_CASE("two opposite donors give two pebbles") {
    const GridDims dims(3, 3);
    const Distribution d(dims, {{{1, 0}, 2}, {{1, 2}, 2}});
    CHECK(reach_count(d, MoveRule(2), {1, 1}) == 2);
    CHECK(reach_count(d, MoveRule(2), {1, 0}) >= 2);
    CHECK(reach_count(d, MoveRule(2), {1, 2}) >= 2);
  }

  TEST_CASE("solvability examples") {
    const GridDims dims(2, 2);
    CHECK(is_solvable(Distribution(dims, {{{0, 0}, 2}, {{1, 1}, 1}}), MoveRule(2)));
    CHECK_FALSE(is_solvable(Distribution(dims, {{{0, 0}, 2}}), MoveRule(2)));
    CHECK(is_solvable(Distribution::uniform(GridDims(3, 4), 1), MoveRule(2)));
  }

  TEST_CASE("witness sequences are legal and end on target") {
    const GridDims dims(2, 3);
    const ReachabilityOracle oracle(dims, MoveRule(2));
    oracle::all_distributions(dims.size(), 6, [&](const std::vector<int>& c) {
      const Distribution d(dims, c);
      for (std::size_t t = 0; t < dims.size(); ++t) {
        const Vertex target = vertex_at(dims, t);
        const auto moves = oracle.witness(d, target, 2);
        if (!moves) continue;
        Distribution cur = d;
        for (const Move& m : *moves) cur = apply_move(cur, MoveRule(2), m.from, m.to);
        REQUIRE(cur[target] >= 2);
      }
    });
  }

  TEST_CASE("cap rejects large inputs") {
    const ReachabilityOracle oracle(kPath3, MoveRule(2), ReachOptions{5});
    CHECK_THROWS_AS(oracle.is_solvable(Distribution(kPath3, {{{0, 0}, 6}})), CapExceeded);
    CHECK_THROWS_AS(ReachabilityOracle(kPath3, MoveRule(2), ReachOptions{-1}), InvalidArgument);
  }

  TEST_CASE("agrees with naive enumeration on small grids") {
    for (const auto& dims : {GridDims(1, 4), GridDims(2, 2), GridDims(2, 3)}) {
      const auto adj = oracle::adjacency(dims.rows, dims.cols);
      for (int arity : {2, 3}) {
        const ReachabilityOracle fast(dims, MoveRule(arity));
        for (int total = 0; total <= 6; ++total) {
          oracle::all_distributions(dims.size(), total, [&](const std::vector<int>& c) {
            const Distribution d(dims, c);
            for (std::size_t t = 0; t < dims.size(); ++t) {
              std::vector<int> scratch = c;
              const int naive = oracle::naive_max_on_target(scratch, adj, arity, t);
              REQUIRE(fast.reach_count(d, vertex_at(dims, t)) == naive);
            }
            REQUIRE(fast.is_solvable(d) == oracle::bfs_solvable(c, adj, arity));
          });
        }
      }
    }
  }

  TEST_CASE("weight is monotone under moves and bounds reach counts") {
    const GridDims dims(3, 3);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> pick(0, 3);
    const ReachabilityOracle oracle(dims, MoveRule(2));
    for (int i = 0; i < 150; ++i) {
      std::vector<int> c(dims.size());
      for (auto& x : c) x = pick(rng);
      const Distribution d(dims, c);
      for (std::size_t u = 0; u < d.size(); ++u) {
        if (d.at(u) < 2) continue;
        for (const Vertex& w : neighbors(dims, vertex_at(dims, u))) {
          const Distribution after = apply_move(d, MoveRule(2), vertex_at(dims, u), w);
          for (std::size_t t = 0; t < d.size(); ++t) {
            CHECK(weight(after, vertex_at(dims, t)) <= weight(d, vertex_at(dims, t)));
          }
        }
      }
      const bool solvable = oracle.is_solvable(d);
      for (std::size_t t = 0; t < d.size(); ++t) {
        const Vertex v = vertex_at(dims, t);
        CHECK(mpz_class(oracle.reach_count(d, v)) <= weight(d, v).floor());
        if (solvable) CHECK(weight(d, v) >= Rational(1));
      }
    }
  }

  TEST_CASE("adding pebbles never lowers reach counts") {
    const GridDims dims(2, 3);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<std::size_t> where(0, dims.size() - 1);
    const ReachabilityOracle oracle(dims, MoveRule(2));
    for (int i = 0; i < 200; ++i) {
      std::vector<int> c(dims.size());
      for (auto& x : c) x = pick(rng);
      const Distribution d(dims, c);
      Distribution more = d;
      more.add(vertex_at(dims, where(rng)), 1 + pick(rng));
      CHECK(more.dominates(d));
      for (std::size_t t = 0; t < dims.size(); ++t) {
        CHECK(oracle.reach_count(more, vertex_at(dims, t)) >= oracle.reach_count(d, vertex_at(dims, t)));
      }
    }
  }
}
