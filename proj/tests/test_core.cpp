#include <doctest.h>

#include <random>
#include <set>

#include "gridpeb/distribution.hpp"
#include "gridpeb/error.hpp"
#include "gridpeb/grid.hpp"
#include "gridpeb/rational.hpp"
#include "oracles.hpp"

using namespace gridpeb;

TEST_SUITE("rational") {
  TEST_CASE("lowest terms and formatting") {
    CHECK(Rational(6, 8).str() == "3/4");
    CHECK(Rational(-6, 8).str() == "-3/4");
    CHECK(Rational(6, -8).str() == "-3/4");
    CHECK(Rational(4).str() == "4/1");
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
  }

  TEST_CASE("parse") {
    CHECK(Rational::parse("5092/28593") == Rational(5092, 28593));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), InvalidArgument);
    CHECK_THROWS_AS(Rational::parse("abc"), InvalidArgument);
    CHECK_THROWS_AS(Rational::parse(""), InvalidArgument);
    CHECK_THROWS_AS(Rational::parse("1.5"), InvalidArgument);
  }

  TEST_CASE("dyadic helpers") {
    CHECK(Rational::dyadic(0) == Rational(1));
    CHECK(Rational::dyadic(10) == Rational(1, 1024));
    CHECK(Rational(3, 64).is_dyadic());
    CHECK_FALSE(Rational(4, 3).is_dyadic());
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
  }

  TEST_CASE("arithmetic agrees with cross-multiplication") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int i = 0; i < 2000; ++i) {
      const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
      const Rational x(a, b), y(c, d);
      const auto holds = [](const Rational& r, const mpz_class& p, const mpz_class& q) {
        return r.numerator() * q == p * r.denominator();
      };
      const mpz_class A(a), B(b), C(c), D(d);
      CHECK(holds(x + y, A * D + C * B, B * D));
      CHECK(holds(x - y, A * D - C * B, B * D));
      CHECK(holds(x * y, A * C, B * D));
      if (c != 0) CHECK(holds(x / y, A * D, B * C));
      CHECK(((x < y) == (A * D < C * B)));
      CHECK(gcd(x.numerator(), x.denominator()) == 1);
      CHECK(x.denominator() > 0);
    }
  }
}

TEST_SUITE("grid") {
  TEST_CASE("dimension validation") {
    CHECK_THROWS_AS(GridDims(0, 3), InvalidArgument);
    CHECK_THROWS_AS(GridDims(2, -1), InvalidArgument);
    CHECK(GridDims(3, 4).size() == 12);
  }

  TEST_CASE("distance examples") {
    CHECK(distance(GridDims(5, 5), {2, 2}, {2, 2}) == 0);
    CHECK(distance(GridDims(5, 5), {0, 0}, {4, 4}) == 8);
    CHECK(distance(GridDims(3, 4), {1, 0}, {2, 3}) == 4);
    CHECK_THROWS_AS(distance(GridDims(3, 4), {3, 0}, {0, 0}), InvalidArgument);
  }

  TEST_CASE("distance matches BFS and is a metric up to 5x5") {
    for (int m = 1; m <= 5; ++m) {
      for (int n = 1; n <= 5; ++n) {
        const GridDims dims(m, n);
        const auto bfs = oracle::bfs_distances(m, n);
        const GridIndex index(dims);
        for (std::size_t a = 0; a < dims.size(); ++a) {
          for (std::size_t b = 0; b < dims.size(); ++b) {
            const int d = distance(dims, vertex_at(dims, a), vertex_at(dims, b));
            REQUIRE(d == bfs[a][b]);
            REQUIRE(index.distance(a, b) == d);
            REQUIRE((d == 0) == (a == b));
            for (std::size_t c = 0; c < dims.size(); ++c) REQUIRE(bfs[a][c] <= d + bfs[b][c]);
          }
        }
      }
    }
  }

  TEST_CASE("neighbors") {
    const GridDims dims(5, 5);
    CHECK(neighbors(dims, {2, 2}).size() == 4);
    CHECK(neighbors(dims, {0, 0}).size() == 2);
    CHECK(neighbors(dims, {0, 2}).size() == 3);
    const std::vector<Vertex> order{{1, 2}, {2, 1}, {2, 3}, {3, 2}};
    CHECK(neighbors(dims, {2, 2}) == order);
    CHECK_THROWS_AS(neighbors(dims, {5, 0}), InvalidArgument);
    for (int m = 2; m <= 4; ++m) {
      const GridDims g(m, 3);
      for (std::size_t a = 0; a < g.size(); ++a) {
        const auto nb = neighbors(g, vertex_at(g, a));
        for (std::size_t b = 0; b < g.size(); ++b) {
          const bool adjacent = std::find(nb.begin(), nb.end(), vertex_at(g, b)) != nb.end();
          CHECK(adjacent == (distance(g, vertex_at(g, a), vertex_at(g, b)) == 1));
        }
      }
    }
  }

  TEST_CASE("boundary sizes") {
    CHECK(boundary(GridDims(2, 2)).size() == 4);
    CHECK(boundary(GridDims(5, 8)).size() == 22);
    CHECK(boundary(GridDims(1, 6)).size() == 6);
    CHECK(boundary(GridDims(3, 3)).size() == 8);
    CHECK_FALSE(on_boundary(GridDims(3, 3), {1, 1}));
  }

  TEST_CASE("symmetry groups") {
    CHECK(symmetry_permutations(GridDims(3, 3)).size() == 8);
    CHECK(symmetry_permutations(GridDims(2, 3)).size() == 4);
    for (const auto& dims : {GridDims(3, 3), GridDims(2, 4)}) {
      const auto perms = symmetry_permutations(dims);
      std::set<std::vector<std::size_t>> distinct(perms.begin(), perms.end());
      CHECK(distinct.size() == perms.size());
      // every permutation is a graph automorphism
      for (const auto& p : perms) {
        for (std::size_t a = 0; a < dims.size(); ++a) {
          for (std::size_t b = 0; b < dims.size(); ++b) {
            CHECK(distance(dims, vertex_at(dims, a), vertex_at(dims, b)) ==
                  distance(dims, vertex_at(dims, p[a]), vertex_at(dims, p[b])));
          }
        }
      }
    }
  }
}

TEST_SUITE("distribution") {
  TEST_CASE("construction and validation") {
    const GridDims dims(2, 3);
    CHECK_THROWS_AS(Distribution(dims, std::vector<int>{1, 2}), InvalidArgument);
    CHECK_THROWS_AS(Distribution(dims, std::vector<int>{1, 2, 3, 4, 5, -1}), InvalidArgument);
    Distribution d(dims, {{{0, 1}, 3}, {{1, 2}, 1}});
    CHECK(d.total() == 4);
    CHECK(d[{0, 1}] == 3);
    CHECK(d.unoccupied().size() == 4);
    CHECK_THROWS_AS(d.add({0, 0}, -1), InvalidArgument);
    CHECK(Distribution::uniform(dims, 2).total() == 12);
  }

  TEST_CASE("canonical form examples") {
    const GridDims sq(2, 2);
    CHECK(canonicalize(sq, Distribution(sq, {{{1, 1}, 1}})) == Distribution(sq, {{{0, 0}, 1}}));
    const GridDims rect(2, 3);
    CHECK(canonicalize(rect, Distribution(rect, {{{0, 2}, 2}})) == Distribution(rect, {{{0, 0}, 2}}));
    const Distribution u = Distribution::uniform(GridDims(3, 3), 1);
    CHECK(canonicalize(u.dims(), u) == u);
  }

  TEST_CASE("canonical form is idempotent and orbit invariant") {
    std::mt19937 rng(11);
    for (const auto& dims : {GridDims(3, 3), GridDims(2, 4), GridDims(3, 4)}) {
      const auto perms = symmetry_permutations(dims);
      std::uniform_int_distribution<int> pick(0, 3);
      for (int i = 0; i < 200; ++i) {
        std::vector<int> counts(dims.size());
        for (auto& c : counts) c = pick(rng);
        const Distribution d(dims, counts);
        const Distribution c = canonicalize(dims, d);
        CHECK(canonicalize(dims, c) == c);
        CHECK(is_canonical(c));
        CHECK(c.total() == d.total());
        for (const auto& p : perms) {
          std::vector<int> image(dims.size());
          for (std::size_t v = 0; v < dims.size(); ++v) image[p[v]] = counts[v];
          CHECK(canonicalize(dims, Distribution(dims, image)) == c);
        }
      }
    }
  }

  TEST_CASE("one canonical form per orbit") {
    // Burnside: (20 + 2 * 6) / 8 = 4 orbits of 2x2 distributions of total 3.
    const GridDims dims(2, 2);
    const auto perms = symmetry_permutations(dims);
    int canonical = 0;
    std::set<std::vector<int>> reps;
    oracle::all_distributions(dims.size(), 3, [&](const std::vector<int>& c) {
      if (is_canonical_counts(c, perms)) ++canonical;
      const auto can = canonicalize(dims, Distribution(dims, c));
      reps.insert(std::vector<int>(can.counts().begin(), can.counts().end()));
    });
    CHECK(canonical == static_cast<int>(reps.size()));
    CHECK(canonical == 4);
  }
}
