#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gridpeb/distribution.hpp"
#include "gridpeb/engine.hpp"
#include "gridpeb/lp.hpp"

namespace gridpeb {

enum class LemmaStatus { Verified, Refuted, CheckedEmpirically };

std::string to_string(LemmaStatus status);

/// Outcome of one machine check of one claim.
///
/// `id` names the claim (Obs1, Lem1, Obs2, Lem2, Obs3, Lem4(i) .. Lem4(iv),
/// Lem5, Lem6, Thm1, Conj, Lem7, Prop1); `check` says which aspect was
/// tested. Exact quantities go into `details` as "p/q" strings.
struct LemmaReport {
  std::string id;
  std::string check;
  LemmaStatus status = LemmaStatus::Verified;
  long samples = 0;
  std::vector<std::pair<std::string, std::string>> details;
  /// Distribution (ASCII rows) that violates the claim, when refuted.
  std::optional<std::string> witness;
  std::optional<std::uint64_t> seed;

  bool refuted() const { return status == LemmaStatus::Refuted; }
  std::optional<std::string> detail(const std::string& key) const;
};

nlohmann::json to_json(const LemmaReport& report);

/// Claim ids every full suite run must cover.
const std::vector<std::string>& required_report_ids();
/// Required ids with no report in `reports`.
std::vector<std::string> missing_report_ids(const std::vector<LemmaReport>& reports);

/// Exact constant derivations: the effect series limit 9, the region-average
/// identity for k = 2..1000, the k = 1 region bound, 5092/3177 / 9, the 11/75
/// step and the mixing equalizer.
std::vector<LemmaReport> verify_constants();

/// Builds the hand-solved linear programs, reduces them by coefficient
/// domination, solves them exactly and checks the printed dual multipliers.
std::vector<LemmaReport> verify_lp_lemmas();

/// The eight-variable systems as printed, variables named A..H.
LinearProgram first_lp_system();
LinearProgram add_value_system_p2();
LinearProgram add_value_system_p1();
/// Applies the four domination merges B->A, D->C, F->E, H->G.
LinearProgram reduce_to_four_variables(const LinearProgram& eight_var);
/// The three extra-value functionals over (x, y, z) used in the mixing step.
std::vector<Functional3> mixing_functionals();

struct SamplePolicy {
  /// Exhaustive enumeration when the estimated number of canonical forms is at
  /// most this; uniform random sampling otherwise.
  long exhaustive_threshold = 1'000'000;
  /// Solvable samples to draw in random mode.
  long samples = 1000;
  /// Draws allowed per accepted sample before giving up.
  long max_attempts_per_sample = 1000;
  std::uint64_t seed = 20240229;
  /// Force random mode regardless of the threshold.
  bool force_random = false;
};

/// Checks, over solvable distributions of total at most max_total (random mode
/// draws total exactly max_total), the per-instance claims on the plain
/// distribution (region structure, size bound, frontier values, leftover
/// normalization) and on its hemmed version (pointwise value >= 4/3, boundary
/// 2-reachability, frontier values, extra-value cases, region averages, and
/// sum v = sum P' ef <= 9|P'|).
std::vector<LemmaReport> empirical_sweep(const GridDims& dims, int max_total,
                                         const SamplePolicy& policy = {});

/// Minimum value of a non-boundary vertex over solvable, unhemmed
/// distributions of total at most max_total. Reports any vertex below 3/2.
LemmaReport conjecture_scan(const GridDims& dims, int max_total, const SamplePolicy& policy = {});

/// Smoothening preserves arity-solvability; pi_k = mn for arity >= 5;
/// flattening yields fully occupied distributions; leftover normalization.
/// Exhaustive over the given grids up to max_total pebbles.
std::vector<LemmaReport> verify_procedures(const std::vector<GridDims>& grids, int max_total);

struct SuiteConfig {
  bool constants = true;
  bool lp = true;
  bool procedures = true;
  std::vector<std::pair<GridDims, int>> sweeps = {{GridDims(2, 2), 6}, {GridDims(3, 3), 7}};
  std::vector<std::pair<GridDims, int>> conjecture = {{GridDims(3, 3), 6}};
  std::vector<GridDims> procedure_grids = {GridDims(2, 2), GridDims(1, 4)};
  int procedure_max_total = 8;
  SamplePolicy policy;
};

struct SuiteResult {
  std::vector<LemmaReport> reports;
  std::vector<std::string> missing_ids;

  bool ok() const;
  nlohmann::json to_json() const;
  std::string summary() const;
};

SuiteResult run_suite(const SuiteConfig& config = {});

}  // namespace gridpeb
