#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gridpeb/rational.hpp"

namespace gridpeb {

/// coeffs . x >= rhs
struct Constraint {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// minimize objective . x  subject to every constraint, x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  /// Optional display names, one per variable (empty means x0, x1, ...).
  std::vector<std::string> names;

  /// Throws InvalidArgument when shapes disagree or there are no constraints.
  void validate() const;
  std::string name(std::size_t var) const;
  bool is_feasible(const std::vector<Rational>& x) const;
  Rational evaluate(const std::vector<Rational>& x) const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational optimum;
  /// Feasible point attaining the optimum (only when status is Optimal).
  std::vector<Rational> witness;
};

/// Exact two-phase simplex with Bland's pivoting rule. Deterministic: the same
/// program always yields the same witness.
LpSolution solve_min(const LinearProgram& lp);

/// Removes variable `drop`, whose mass can always move onto `keep`: requires
/// coeff(keep) >= coeff(drop) in every constraint and objective(keep) <=
/// objective(drop). Throws PreconditionFailed otherwise (including keep ==
/// drop).
LinearProgram dominate_reduce(const LinearProgram& lp, std::size_t keep, std::size_t drop);

/// Outcome of checking non-negative constraint multipliers y.
struct DualBound {
  /// Lower bound on the objective implied by the certificate.
  Rational bound;
  /// Smallest s >= 0 with  sum_i y_i a_i <= s * objective  coefficientwise.
  Rational scale;
  std::vector<Rational> combined_row;
  Rational combined_rhs;
};

/// Verifies that  sum_i y_i a_i  is dominated by a multiple of the objective
/// and returns the implied bound  combined_rhs / scale. Throws
/// PreconditionFailed for a wrong length, a negative multiplier, or a
/// combination no multiple of the objective dominates.
DualBound check_dual_certificate(const LinearProgram& lp, const std::vector<Rational>& multipliers);

/// Linear functional a*x + b*y + c*z.
using Functional3 = std::array<Rational, 3>;

struct MinimaxResult {
  Rational value;
  std::array<Rational, 3> point;
};

/// min over {x,y,z >= 0, x+y+z = budget} of max_i rows[i](x,y,z), as an LP.
MinimaxResult minimax_on_simplex(const std::vector<Functional3>& rows, const Rational& budget);

/// Plain-text LP format, line oriented:
///
///   # comment
///   vars A B C D          (optional)
///   min 1 1 1 1
///   2 2 1/2 1/2 >= 2
///
/// Rationals are written "p/q" (integers may omit "/q").
LinearProgram parse_lp(std::string_view text);
std::string format_lp(const LinearProgram& lp);

}  // namespace gridpeb
