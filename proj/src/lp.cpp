#include "gridpeb/lp.hpp"

#include <optional>
#include <sstream>

#include "gridpeb/error.hpp"

namespace gridpeb {

namespace {

// Dense tableau in canonical form: the columns listed in `basis` form an
// identity submatrix.
struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<std::size_t> basis;
  std::size_t num_cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows[r][c];
    for (auto& a : rows[r]) a /= p;
    rhs[r] /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < num_cols; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  void drop_row(std::size_t r) {
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
    rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(r));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
  }

  Rational cost_of(const std::vector<Rational>& cost) const {
    Rational acc;
    for (std::size_t i = 0; i < rows.size(); ++i) acc += cost[basis[i]] * rhs[i];
    return acc;
  }
};

enum class Outcome { Optimal, Unbounded };

// Minimizes cost over the tableau using columns < allowed only. Bland's rule:
// lowest-index improving column enters, ties in the ratio test go to the
// lowest basic index.
Outcome run_simplex(Tableau& t, const std::vector<Rational>& cost, std::size_t allowed) {
  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < allowed; ++j) {
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (!t.rows[i][j].is_zero()) reduced -= cost[t.basis[i]] * t.rows[i][j];
      }
      if (reduced.sign() < 0) {
        entering = j;
        break;
      }
    }
    if (!entering) return Outcome::Optimal;
    const std::size_t c = *entering;
    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.rows[i][c].sign() <= 0) continue;
      const Rational ratio = t.rhs[i] / t.rows[i][c];
      if (!leaving || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[*leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (!leaving) return Outcome::Unbounded;
    t.pivot(*leaving, c);
  }
}

}  // namespace

void LinearProgram::validate() const {
  if (objective.size() != num_vars) throw InvalidArgument("objective length differs from num_vars");
  if (constraints.empty()) throw InvalidArgument("linear program needs at least one constraint");
  for (const auto& c : constraints) {
    if (c.coeffs.size() != num_vars) throw InvalidArgument("constraint length differs from num_vars");
  }
  if (!names.empty() && names.size() != num_vars) {
    throw InvalidArgument("names length differs from num_vars");
  }
}

std::string LinearProgram::name(std::size_t var) const {
  return names.empty() ? "x" + std::to_string(var) : names[var];
}

bool LinearProgram::is_feasible(const std::vector<Rational>& x) const {
  if (x.size() != num_vars) return false;
  for (const auto& v : x) {
    if (v.sign() < 0) return false;
  }
  for (const auto& c : constraints) {
    Rational lhs;
    for (std::size_t j = 0; j < num_vars; ++j) lhs += c.coeffs[j] * x[j];
    if (lhs < c.rhs) return false;
  }
  return true;
}

Rational LinearProgram::evaluate(const std::vector<Rational>& x) const {
  if (x.size() != num_vars) throw InvalidArgument("point length differs from num_vars");
  Rational acc;
  for (std::size_t j = 0; j < num_vars; ++j) acc += objective[j] * x[j];
  return acc;
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded-below";
  }
  return "unknown";
}

LpSolution solve_min(const LinearProgram& lp) {
  lp.validate();
  const std::size_t n = lp.num_vars;
  const std::size_t m = lp.constraints.size();
  // columns: [0,n) originals, [n,n+m) surplus, [n+m,n+2m) artificials
  Tableau t;
  t.num_cols = n + 2 * m;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    std::vector<Rational> row(t.num_cols);
    const bool flip = c.rhs.sign() < 0;
    for (std::size_t j = 0; j < n; ++j) row[j] = flip ? -c.coeffs[j] : c.coeffs[j];
    row[n + i] = flip ? Rational(1) : Rational(-1);
    row[n + m + i] = 1;
    t.rows.push_back(std::move(row));
    t.rhs.push_back(flip ? -c.rhs : c.rhs);
    t.basis.push_back(n + m + i);
  }

  std::vector<Rational> phase1(t.num_cols);
  for (std::size_t i = 0; i < m; ++i) phase1[n + m + i] = 1;
  run_simplex(t, phase1, t.num_cols);
  if (t.cost_of(phase1).sign() > 0) return {LpStatus::Infeasible, {}, {}};

  // Pivot zero-valued artificials out of the basis; rows with no other
  // nonzero entry are redundant.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n + m) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (!t.rows[i][j].is_zero()) {
        col = j;
        break;
      }
    }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.drop_row(i);
    }
  }

  std::vector<Rational> phase2(t.num_cols);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  if (run_simplex(t, phase2, n + m) == Outcome::Unbounded) return {LpStatus::Unbounded, {}, {}};

  LpSolution out{LpStatus::Optimal, t.cost_of(phase2), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) out.witness[t.basis[i]] = t.rhs[i];
  }
  return out;
}

LinearProgram dominate_reduce(const LinearProgram& lp, std::size_t keep, std::size_t drop) {
  lp.validate();
  if (keep >= lp.num_vars || drop >= lp.num_vars) throw InvalidArgument("variable index out of range");
  if (keep == drop) throw PreconditionFailed("cannot merge a variable into itself");
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& c = lp.constraints[i].coeffs;
    if (c[keep] < c[drop]) {
      throw PreconditionFailed("constraint " + std::to_string(i) + ": coefficient of " +
                               lp.name(keep) + " is smaller than that of " + lp.name(drop));
    }
  }
  if (lp.objective[keep] > lp.objective[drop]) {
    throw PreconditionFailed("objective coefficient of " + lp.name(keep) + " exceeds that of " +
                             lp.name(drop));
  }
  LinearProgram out;
  out.num_vars = lp.num_vars - 1;
  auto without = [drop](const auto& v) {
    auto r = v;
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
    return r;
  };
  out.objective = without(lp.objective);
  for (const auto& c : lp.constraints) out.constraints.push_back({without(c.coeffs), c.rhs});
  if (!lp.names.empty()) out.names = without(lp.names);
  return out;
}

DualBound check_dual_certificate(const LinearProgram& lp, const std::vector<Rational>& multipliers) {
  lp.validate();
  if (multipliers.size() != lp.constraints.size()) {
    throw PreconditionFailed("expected " + std::to_string(lp.constraints.size()) +
                             " multipliers, got " + std::to_string(multipliers.size()));
  }
  DualBound out;
  out.combined_row.assign(lp.num_vars, Rational());
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    if (multipliers[i].sign() < 0) throw PreconditionFailed("multipliers must be non-negative");
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
      out.combined_row[j] += multipliers[i] * lp.constraints[i].coeffs[j];
    }
    out.combined_rhs += multipliers[i] * lp.constraints[i].rhs;
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (lp.objective[j].sign() > 0) out.scale = max(out.scale, out.combined_row[j] / lp.objective[j]);
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (out.combined_row[j] > out.scale * lp.objective[j]) {
      throw PreconditionFailed("combined row is not dominated by a multiple of the objective at " +
                               lp.name(j));
    }
  }
  if (out.scale.is_zero()) {
    // 0 >= combination . x >= combined_rhs: no bound on the objective beyond
    // the trivial one
    if (out.combined_rhs.sign() > 0) {
      throw PreconditionFailed("certificate proves infeasibility, not a bound");
    }
    for (const auto& c : lp.objective) {
      if (c.sign() < 0) throw PreconditionFailed("zero-scale certificate on a signed objective");
    }
    out.bound = 0;
    return out;
  }
  out.bound = out.combined_rhs / out.scale;
  return out;
}

MinimaxResult minimax_on_simplex(const std::vector<Functional3>& rows, const Rational& budget) {
  if (rows.empty()) throw InvalidArgument("minimax needs at least one functional");
  if (budget.sign() < 0) throw InvalidArgument("budget must be non-negative");
  // variables x, y, z, t
  LinearProgram lp;
  lp.num_vars = 4;
  lp.names = {"x", "y", "z", "t"};
  lp.objective = {0, 0, 0, 1};
  for (const auto& r : rows) lp.constraints.push_back({{-r[0], -r[1], -r[2], 1}, 0});
  lp.constraints.push_back({{1, 1, 1, 0}, budget});
  lp.constraints.push_back({{-1, -1, -1, 0}, -budget});
  const LpSolution sol = solve_min(lp);
  if (sol.status != LpStatus::Optimal) {
    throw StructureViolation("minimax program is always feasible and bounded");
  }
  return {sol.optimum, {sol.witness[0], sol.witness[1], sol.witness[2]}};
}

LinearProgram parse_lp(std::string_view text) {
  LinearProgram lp;
  bool have_objective = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw InvalidArgument("lp line " + std::to_string(line_no) + ": " + what);
  };
  auto parse_numbers = [&](std::istringstream& ls, std::vector<Rational>& out) {
    std::string tok;
    while (ls >> tok) {
      if (tok == ">=") return true;
      try {
        out.push_back(Rational::parse(tok));
      } catch (const std::exception& e) {
        fail(e.what());
      }
    }
    return false;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "vars") {
      std::string name;
      while (ls >> name) lp.names.push_back(name);
      continue;
    }
    if (head == "min") {
      if (have_objective) fail("second objective line");
      if (parse_numbers(ls, lp.objective)) fail("objective line contains '>='");
      have_objective = true;
      continue;
    }
    std::istringstream full(line);
    Constraint c;
    if (!parse_numbers(full, c.coeffs)) fail("constraint without '>='");
    std::string rhs;
    if (!(full >> rhs)) fail("constraint without right-hand side");
    try {
      c.rhs = Rational::parse(rhs);
    } catch (const std::exception& e) {
      fail(e.what());
    }
    std::string extra;
    if (full >> extra) fail("trailing token '" + extra + "'");
    lp.constraints.push_back(std::move(c));
  }
  if (!have_objective) throw InvalidArgument("lp has no 'min' line");
  lp.num_vars = lp.objective.size();
  lp.validate();
  return lp;
}

std::string format_lp(const LinearProgram& lp) {
  lp.validate();
  std::ostringstream os;
  if (!lp.names.empty()) {
    os << "vars";
    for (const auto& n : lp.names) os << ' ' << n;
    os << '\n';
  }
  os << "min";
  for (const auto& c : lp.objective) os << ' ' << c.str();
  os << '\n';
  for (const auto& c : lp.constraints) {
    for (std::size_t j = 0; j < c.coeffs.size(); ++j) os << (j ? " " : "") << c.coeffs[j].str();
    os << " >= " << c.rhs.str() << '\n';
  }
  return os.str();
}

}  // namespace gridpeb
