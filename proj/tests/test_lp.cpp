#include <doctest.h>

#include <functional>
#include <optional>
#include <random>

#include "gridpeb/error.hpp"
#include "gridpeb/lemmas.hpp"
#include "gridpeb/lp.hpp"

using namespace gridpeb;

namespace {

// Solves the square system A x = b by Gaussian elimination; nullopt when
// singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Minimum over all basic feasible points: every choice of num_vars tight
// rows among the constraints and the bounds x_j >= 0. Valid when the
// objective is non-negative, so the minimum is attained at a vertex.
std::optional<Rational> vertex_enumeration(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& c : lp.constraints) {
    rows.push_back(c.coeffs);
    rhs.push_back(c.rhs);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    rows.push_back(e);
    rhs.push_back(0);
  }
  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  const std::size_t m = rows.size();
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == n) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (const std::size_t i : pick) {
        a.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
      const auto x = solve_square(a, b);
      if (!x || !lp.is_feasible(*x)) return;
      const Rational v = lp.evaluate(*x);
      if (!best || v < *best) best = v;
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      pick[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return best;
}

LinearProgram random_lp(std::mt19937& rng, std::size_t vars, std::size_t cons) {
  std::uniform_int_distribution<int> coef(-4, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> pos(0, 5);
  LinearProgram lp;
  lp.num_vars = vars;
  for (std::size_t j = 0; j < vars; ++j) lp.objective.push_back(Rational(pos(rng), den(rng)));
  for (std::size_t i = 0; i < cons; ++i) {
    Constraint c;
    for (std::size_t j = 0; j < vars; ++j) c.coeffs.push_back(Rational(coef(rng), den(rng)));
    c.rhs = Rational(coef(rng), den(rng));
    lp.constraints.push_back(c);
  }
  return lp;
}

}  // namespace

TEST_SUITE("lp") {
  TEST_CASE("small examples") {
    LinearProgram s;
    s.num_vars = 2;
    s.objective = {1, 1};
    s.constraints = {{{2, Rational(1, 2)}, 2}, {{Rational(-1, 2), 1}, 0}};
    const LpSolution sol = solve_min(s);
    CHECK(sol.status == LpStatus::Optimal);
    CHECK(sol.optimum == Rational(4, 3));
    CHECK(sol.witness == std::vector<Rational>{Rational(8, 9), Rational(4, 9)});

    LinearProgram one;
    one.num_vars = 1;
    one.objective = {1};
    one.constraints = {{{1}, 5}};
    CHECK(solve_min(one).optimum == Rational(5));

    LinearProgram unbounded;
    unbounded.num_vars = 1;
    unbounded.objective = {-1};
    unbounded.constraints = {{{1}, 5}};
    CHECK(solve_min(unbounded).status == LpStatus::Unbounded);
    CHECK(to_string(LpStatus::Unbounded) == "unbounded-below");

    LinearProgram infeasible;
    infeasible.num_vars = 1;
    infeasible.objective = {1};
    infeasible.constraints = {{{-1}, 1}};
    CHECK(solve_min(infeasible).status == LpStatus::Infeasible);
  }

  TEST_CASE("lemma systems as printed") {
    const LinearProgram full = first_lp_system();
    const LinearProgram reduced = reduce_to_four_variables(full);
    CHECK(reduced.num_vars == 4);
    CHECK(reduced.names == std::vector<std::string>{"A", "C", "E", "G"});
    CHECK(solve_min(full).optimum == Rational(4, 3));
    CHECK(solve_min(reduced).optimum == Rational(4, 3));

    const LinearProgram p2 = reduce_to_four_variables(add_value_system_p2());
    const DualBound b2 = check_dual_certificate(p2, {1, Rational(2, 5), Rational(2, 5)});
    CHECK(b2.scale == Rational(5, 2));
    CHECK(b2.combined_row == std::vector<Rational>(4, Rational(5, 2)));
    CHECK(b2.combined_rhs == Rational(5, 3));
    CHECK(b2.bound == Rational(2, 3));
    CHECK(solve_min(p2).optimum == Rational(2, 3));
    const std::vector<Rational> w{0, Rational(4, 9), Rational(1, 18), Rational(1, 6)};
    CHECK(p2.is_feasible(w));
    CHECK(p2.evaluate(w) == Rational(2, 3));

    const LinearProgram p1 = reduce_to_four_variables(add_value_system_p1());
    const DualBound b1 = check_dual_certificate(p1, {1, Rational(2, 5), Rational(2, 5)});
    CHECK(b1.combined_rhs == Rational(43, 15));
    CHECK(b1.bound == Rational(86, 75));
    CHECK(solve_min(p1).optimum >= Rational(86, 75));
    CHECK(vertex_enumeration(p1) == solve_min(p1).optimum);
    CHECK(vertex_enumeration(p2) == Rational(2, 3));
  }

  TEST_CASE("dominate_reduce preconditions") {
    const LinearProgram full = first_lp_system();
    CHECK_THROWS_AS(dominate_reduce(full, 0, 0), PreconditionFailed);
    // B has the larger coefficient in the second row of the p=2 system
    CHECK_THROWS_AS(dominate_reduce(add_value_system_p2(), 1, 0), PreconditionFailed);
    CHECK_THROWS_AS(dominate_reduce(full, 0, 9), InvalidArgument);
  }

  TEST_CASE("certificate edge cases") {
    const LinearProgram p2 = reduce_to_four_variables(add_value_system_p2());
    CHECK(check_dual_certificate(p2, {0, 0, 0}).bound == Rational(0));
    CHECK_THROWS_AS(check_dual_certificate(p2, {1, 0}), PreconditionFailed);
    CHECK_THROWS_AS(check_dual_certificate(p2, {-1, 0, 0}), PreconditionFailed);
  }

  TEST_CASE("minimax on the simplex") {
    const auto rows = mixing_functionals();
    const MinimaxResult r = minimax_on_simplex(rows, 353);
    CHECK(r.value == Rational(50));
    CHECK(r.point == std::array<Rational, 3>{Rational(200), Rational(100), Rational(53)});
    CHECK(minimax_on_simplex(rows, 0).value == Rational(0));
    CHECK(minimax_on_simplex(rows, 1).value == Rational(50, 353));
  }

  TEST_CASE("random programs: solver matches vertex enumeration, weak duality holds") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> mult(0, 3);
    int optimal = 0;
    for (int i = 0; i < 300; ++i) {
      const std::size_t vars = 2 + static_cast<std::size_t>(i % 3);
      const LinearProgram lp = random_lp(rng, vars, 2 + static_cast<std::size_t>(i % 2));
      const LpSolution sol = solve_min(lp);
      const auto oracle_min = vertex_enumeration(lp);
      if (sol.status == LpStatus::Infeasible) {
        CHECK_FALSE(oracle_min.has_value());
        continue;
      }
      REQUIRE(sol.status == LpStatus::Optimal);
      ++optimal;
      REQUIRE(oracle_min.has_value());
      CHECK(sol.optimum == *oracle_min);
      CHECK(lp.is_feasible(sol.witness));
      CHECK(lp.evaluate(sol.witness) == sol.optimum);
      CHECK(solve_min(lp).witness == sol.witness);
      std::vector<Rational> y;
      for (std::size_t k = 0; k < lp.constraints.size(); ++k) y.push_back(Rational(mult(rng), 2));
      // not every multiplier vector is a certificate
      std::optional<Rational> bound;
      try {
        bound = check_dual_certificate(lp, y).bound;
      } catch (const PreconditionFailed&) {
      }
      if (bound) CHECK(*bound <= sol.optimum);
    }
    CHECK(optimal > 50);
  }

  TEST_CASE("random domination merges keep the optimum") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> extra(0, 3);
    for (int i = 0; i < 200; ++i) {
      LinearProgram lp = random_lp(rng, 3, 2);
      // make x0 dominate x2
      for (auto& c : lp.constraints) c.coeffs[0] = c.coeffs[2] + Rational(extra(rng), 2);
      lp.objective[0] = lp.objective[2] - min(lp.objective[2], Rational(extra(rng), 4));
      const LinearProgram reduced = dominate_reduce(lp, 0, 2);
      const LpSolution a = solve_min(lp);
      const LpSolution b = solve_min(reduced);
      CHECK(a.status == b.status);
      if (a.status == LpStatus::Optimal) CHECK(a.optimum == b.optimum);
    }
  }

  TEST_CASE("text format round trip") {
    const LinearProgram lp = reduce_to_four_variables(add_value_system_p1());
    const std::string text = format_lp(lp);
    const LinearProgram back = parse_lp(text);
    CHECK(back.names == lp.names);
    CHECK(back.objective == lp.objective);
    REQUIRE(back.constraints.size() == lp.constraints.size());
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
      CHECK(back.constraints[i].coeffs == lp.constraints[i].coeffs);
      CHECK(back.constraints[i].rhs == lp.constraints[i].rhs);
    }
    const LinearProgram parsed = parse_lp("# two variables\nmin 1 1\n2 1/2 >= 2\n-1/2 1 >= 0\n");
    CHECK(solve_min(parsed).optimum == Rational(4, 3));
    CHECK_THROWS_AS(parse_lp("2 1 >= 1\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_lp("min 1 1\n2 >= 1\n"), InvalidArgument);
  }
}
