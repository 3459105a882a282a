#include "gridpeb/lemmas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "gridpeb/error.hpp"
#include "gridpeb/potential.hpp"
#include "gridpeb/regions.hpp"
#include "gridpeb/search.hpp"

namespace gridpeb {

namespace {

const Rational kFourThirds(4, 3);
const Rational kThreeHalves(3, 2);
const Rational kRegionConstant(5092, 3177);
const Rational kDensity(5092, 28593);
const Rational kMixing(50, 353);

LemmaReport verified(std::string id, std::string check,
                     std::vector<std::pair<std::string, std::string>> details = {}) {
  LemmaReport r;
  r.id = std::move(id);
  r.check = std::move(check);
  r.status = LemmaStatus::Verified;
  r.details = std::move(details);
  return r;
}

LemmaReport judged(std::string id, std::string check, bool ok,
                   std::vector<std::pair<std::string, std::string>> details = {}) {
  LemmaReport r = verified(std::move(id), std::move(check), std::move(details));
  if (!ok) r.status = LemmaStatus::Refuted;
  return r;
}

// Accumulates pass/fail counts per (id, check) in first-seen order.
class Tally {
public:
  struct Entry {
    std::string id;
    std::string check;
    long samples = 0;
    std::optional<std::string> witness;
    std::vector<std::pair<std::string, std::string>> notes;
    std::map<std::string, Rational> minima;
    std::map<std::string, Rational> maxima;
    std::map<std::string, long> counters;
  };

  Entry& at(const std::string& id, const std::string& check) {
    for (auto& e : entries_) {
      if (e.id == id && e.check == check) return e;
    }
    entries_.push_back({id, check, 0, std::nullopt, {}, {}, {}, {}});
    return entries_.back();
  }

  void record(const std::string& id, const std::string& check, bool ok, const Distribution& witness,
              const std::string& note = {}) {
    Entry& e = at(id, check);
    ++e.samples;
    if (!ok && !e.witness) {
      e.witness = witness.str();
      if (!note.empty()) e.notes.emplace_back("violation", note);
    }
  }

  void track_min(const std::string& id, const std::string& check, const std::string& key,
                 const Rational& v) {
    auto& m = at(id, check).minima;
    auto it = m.find(key);
    if (it == m.end() || v < it->second) m[key] = v;
  }

  void track_max(const std::string& id, const std::string& check, const std::string& key,
                 const Rational& v) {
    auto& m = at(id, check).maxima;
    auto it = m.find(key);
    if (it == m.end() || v > it->second) m[key] = v;
  }

  void count(const std::string& id, const std::string& check, const std::string& key,
             long by = 1) {
    at(id, check).counters[key] += by;
  }

  std::vector<LemmaReport> reports(const std::vector<std::pair<std::string, std::string>>& common,
                                   std::optional<std::uint64_t> seed) const {
    std::vector<LemmaReport> out;
    for (const auto& e : entries_) {
      LemmaReport r;
      r.id = e.id;
      r.check = e.check;
      r.samples = e.samples;
      r.status = e.witness ? LemmaStatus::Refuted : LemmaStatus::CheckedEmpirically;
      r.witness = e.witness;
      r.seed = seed;
      r.details = common;
      for (const auto& [k, v] : e.minima) r.details.emplace_back("min " + k, v.str());
      for (const auto& [k, v] : e.maxima) r.details.emplace_back("max " + k, v.str());
      for (const auto& [k, v] : e.counters) r.details.emplace_back(k, std::to_string(v));
      for (const auto& n : e.notes) r.details.push_back(n);
      out.push_back(std::move(r));
    }
    return out;
  }

private:
  std::vector<Entry> entries_;
};

std::size_t index_by_name(const LinearProgram& lp, const std::string& name) {
  const auto it = std::find(lp.names.begin(), lp.names.end(), name);
  if (it == lp.names.end()) throw InvalidArgument("no variable named " + name);
  return static_cast<std::size_t>(it - lp.names.begin());
}

LinearProgram eight_variable(std::vector<Constraint> rows) {
  LinearProgram lp;
  lp.num_vars = 8;
  lp.names = {"A", "B", "C", "D", "E", "F", "G", "H"};
  lp.objective.assign(8, Rational(1));
  lp.constraints = std::move(rows);
  return lp;
}

// Extra-value constraint rows shared by both add-value systems: the values of
// the 2-reachable neighbor and of the two diagonal-adjacent vertices.
LinearProgram add_value_system(const Rational& first_rhs, const Rational& side_rhs) {
  const Rational h(1, 2);
  const Rational q(1, 4);
  return eight_variable({
      {{2, 2, 2, h, h, h, h, h}, first_rhs},
      {{q, q, 1, 1, 4, 1, 1, q}, side_rhs},
      {{1, q, q, q, 1, 1, 4, 1}, side_rhs},
  });
}

LinearProgram four_variable(std::vector<Constraint> rows) {
  LinearProgram lp;
  lp.num_vars = 4;
  lp.names = {"A", "C", "E", "G"};
  lp.objective.assign(4, Rational(1));
  lp.constraints = std::move(rows);
  return lp;
}

bool same_program(const LinearProgram& a, const LinearProgram& b) {
  if (a.num_vars != b.num_vars || a.objective != b.objective || a.names != b.names ||
      a.constraints.size() != b.constraints.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.constraints.size(); ++i) {
    if (a.constraints[i].coeffs != b.constraints[i].coeffs ||
        a.constraints[i].rhs != b.constraints[i].rhs) {
      return false;
    }
  }
  return true;
}

std::string join(const std::vector<Rational>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].str();
  return s + ")";
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

struct Enumeration {
  bool exhaustive = true;
  long visited = 0;
  long solvable = 0;
};

// Calls visit(P) for solvable distributions: all canonical forms of total <=
// max_total, or random draws of total max_total when the canonical count
// estimate exceeds the policy threshold.
Enumeration for_each_solvable(const GridDims& dims, int max_total, const SamplePolicy& policy,
                              const ReachabilityOracle& oracle,
                              const std::function<void(const Distribution&)>& visit) {
  Enumeration info;
  const auto perms = symmetry_permutations(dims);
  const std::size_t n = dims.size();
  mpz_class raw = 0;
  for (int t = 0; t <= max_total; ++t) raw += binomial(static_cast<unsigned long>(t) + n - 1, n - 1);
  const mpz_class estimate = raw / static_cast<unsigned long>(perms.size());
  info.exhaustive = !policy.force_random && estimate <= policy.exhaustive_threshold;

  if (info.exhaustive) {
    for (int t = 0; t <= max_total; ++t) {
      for_each_composition(n, t, [&](std::span<const int> counts) {
        if (!is_canonical_counts(counts, perms)) return true;
        ++info.visited;
        Distribution p(dims, std::vector<int>(counts.begin(), counts.end()));
        if (oracle.is_solvable(p)) {
          ++info.solvable;
          visit(p);
        }
        return true;
      });
    }
    return info;
  }

  std::mt19937_64 rng(policy.seed);
  const long budget = policy.samples * policy.max_attempts_per_sample;
  const int slots = max_total + static_cast<int>(n) - 1;
  std::vector<int> positions(static_cast<std::size_t>(slots));
  std::iota(positions.begin(), positions.end(), 0);
  std::vector<int> bars(n - 1);
  while (info.solvable < policy.samples && info.visited < budget) {
    // stars and bars: n-1 bar positions among total+n-1 slots
    std::vector<int> counts(n, 0);
    if (n > 1) {
      std::sample(positions.begin(), positions.end(), bars.begin(), n - 1, rng);
      int prev = -1;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        counts[i] = bars[i] - prev - 1;
        prev = bars[i];
      }
      counts[n - 1] = slots - prev - 1;
    } else {
      counts[0] = max_total;
    }
    ++info.visited;
    Distribution p(dims, std::move(counts));
    if (oracle.is_solvable(p)) {
      ++info.solvable;
      visit(p);
    }
  }
  return info;
}

ReachOptions sweep_reach_options(const GridDims& dims, int max_total) {
  return ReachOptions{std::max<long>(64, max_total + 2 * static_cast<long>(boundary(dims).size()))};
}

// Plain-distribution claims: partition structure, size bound, frontier values,
// normalization.
void check_plain(const Distribution& p, const ReachOptions& opts, Tally& tally) {
  RegionPartition part;
  try {
    part = decompose(p, opts);
  } catch (const StructureViolation& e) {
    const std::string what = e.what();
    const bool size_bound = what.find("3k+2") != std::string::npos;
    tally.record(size_bound ? "Obs3" : "Obs1", size_bound ? "N <= 3k+2 (plain)" : "partition (plain)",
                 false, p, what);
    return;
  }
  tally.record("Obs1", "partition (plain)", true, p);
  tally.count("Obs1", "partition (plain)", "leftover vertices", static_cast<long>(part.leftover.size()));
  for (const Region& r : part.regions) tally.record("Obs3", "N <= 3k+2 (plain)", r.N() <= 3 * r.k() + 2, p);

  const ValueMap values = value_map(p);
  for (const Region& r : part.regions) {
    for (const Vertex& x : region_frontier(part, r)) {
      tally.record("Obs2", "frontier v >= 3/2 (plain)", values[x] >= kThreeHalves, p,
                   "v" + to_string(x) + " = " + values[x].str());
      tally.track_min("Obs2", "frontier v >= 3/2 (plain)", "frontier value", values[x]);
    }
  }

  if (p.size() >= 2) {
    const Distribution q = normalize(p, opts);
    const bool ok = q.total() == p.total() && decompose(q, opts).leftover.empty();
    tally.record("Lem1", "normalize keeps |P|, solvability, empties S", ok, p);
    if (!part.leftover.empty()) tally.count("Lem1", "normalize keeps |P|, solvability, empties S", "instances with leftover");
  }
}

void check_add_value(const Distribution& h, const RegionPartition& part, const ValueMap& values,
                     const ReachabilityOracle& oracle2, Tally& tally) {
  const GridDims& dims = h.dims();
  const Rational two(2);
  for (const Region& r : part.regions) {
    if (r.k() < 2) continue;
    for (const Vertex& x : r.core) {
      const int p = h[x];
      const Rational e = values[x] - two;
      std::vector<Rational> core_neighbor_extra;
      for (const Vertex& y : neighbors(dims, x)) {
        if (r.in_core(y)) core_neighbor_extra.push_back(values[y] - two);
      }
      auto count_at_least = [&](const Rational& bound) {
        return std::count_if(core_neighbor_extra.begin(), core_neighbor_extra.end(),
                             [&](const Rational& v) { return v >= bound; });
      };
      if (p >= 3) {
        tally.record("Lem4(i)", "p >= 3 => e(X) >= p-2", e >= Rational(p - 2), h,
                     "X" + to_string(x) + " e = " + e.str());
      } else if (p == 2) {
        tally.record("Lem4(ii)", "p = 2 => e(X) >= 2/3", e >= Rational(2, 3), h,
                     "X" + to_string(x) + " e = " + e.str());
        tally.track_min("Lem4(ii)", "p = 2 => e(X) >= 2/3", "e(X)", e);
      } else if (p == 1) {
        const std::string check = "p = 1 => e(X) >= 11/75 and a neighbor with e >= 1/2";
        const bool own = e >= Rational(11, 75);
        const bool neighbor = count_at_least(Rational(1, 2)) >= 1;
        tally.record("Lem4(iii)", check, own && neighbor, h,
                     "X" + to_string(x) + " e = " + e.str() + (neighbor ? "" : ", no neighbor"));
        tally.track_min("Lem4(iii)", check, "e(X)", e);
        // The proof takes Y 2-reachable without the pebble on X.
        Distribution without = h;
        without.add(x, -1);
        bool independent = false;
        for (const Vertex& y : neighbors(dims, x)) {
          if (oracle2.is_k_reachable(without, y, 2)) {
            independent = true;
            break;
          }
        }
        if (!independent) tally.count("Lem4(iii)", check, "no neighbor 2-reachable without X's pebble");
        if (independent != neighbor) tally.count("Lem4(iii)", check, "instances where the reading matters");
      } else {
        const bool ok = count_at_least(two) >= 1 || count_at_least(Rational(1, 2)) >= 2;
        tally.record("Lem4(iv)", "p = 0 => a neighbor e >= 2 or two with e >= 1/2", ok, h,
                     "X" + to_string(x));
      }
    }
  }
}

void check_hemmed(const Distribution& p, const ReachOptions& opts, Tally& tally) {
  const GridDims& dims = p.dims();
  const Distribution h = hem(p);
  const ReachabilityOracle oracle2(dims, MoveRule(2), opts);

  RegionPartition part;
  try {
    part = decompose(h, opts);
  } catch (const StructureViolation& e) {
    const std::string what = e.what();
    const bool size_bound = what.find("3k+2") != std::string::npos;
    tally.record(size_bound ? "Obs3" : "Obs1",
                 size_bound ? "N <= 3k+2 (hemmed)" : "partition (hemmed)", false, h, what);
    return;
  }
  tally.record("Obs1", "partition (hemmed)", true, h);
  const ValueMap values = value_map(h);

  // pointwise value bound and boundary 2-reachability
  const Rational vmin = values.min();
  tally.record("Lem2", "hemmed v(X) >= 4/3 for every X", vmin >= kFourThirds, h, "min v = " + vmin.str());
  tally.track_min("Lem2", "hemmed v(X) >= 4/3 for every X", "value", vmin);
  bool boundary_ok = true;
  for (const Vertex& b : boundary(dims)) {
    const auto idx = part.region_of(b);
    if (!idx || !part.regions[*idx].in_core(b)) boundary_ok = false;
  }
  tally.record("Lem2", "hemmed boundary vertices are 2-reachable", boundary_ok, h);

  for (const Region& r : part.regions) {
    tally.record("Obs3", "N <= 3k+2 (hemmed)", r.N() <= 3 * r.k() + 2, h);
    for (const Vertex& x : region_frontier(part, r)) {
      tally.record("Obs2", "frontier v >= 3/2 (hemmed)", values[x] >= kThreeHalves, h,
                   "v" + to_string(x) + " = " + values[x].str());
    }
  }

  check_add_value(h, part, values, oracle2, tally);

  const bool multi = part.regions.size() >= 2;
  Rational covered;
  for (const Region& r : part.regions) {
    const Rational avg = region_average(values, r);
    covered += avg * Rational(r.N());
    if (r.k() >= 2) {
      Rational bound = ((Rational(2) + kMixing) * Rational(r.k()) +
                        kFourThirds * Rational(r.N() - r.k())) / Rational(r.N());
      if (multi) bound += Rational(2, 3) / Rational(r.N());
      tally.record("Lem5", "region average A(R) lower bound (k >= 2)", avg >= bound, h,
                   "A(R) = " + avg.str() + " < " + bound.str());
      tally.track_min("Lem5", "region average A(R) lower bound (k >= 2)", "A(R) - bound", avg - bound);
    }
    if (multi) {
      tally.record("Lem6", "multi-region A(R) >= 5092/3177", avg >= kRegionConstant, h,
                   "A(R) = " + avg.str());
      tally.track_min("Lem6", "multi-region A(R) >= 5092/3177", "A(R)", avg);
    }
  }
  if (!multi) tally.count("Lem6", "multi-region A(R) >= 5092/3177", "single-region instances");
  tally.at("Lem6", "multi-region A(R) >= 5092/3177");

  Rational sum_v = values.sum();
  for (const Vertex& s : part.leftover) covered += values[s];
  Rational weighted;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h.at(i)) weighted += Rational(h.at(i)) * effect(dims, vertex_at(dims, i));
  }
  const Rational nine_total = Rational(9) * Rational(h.total());
  const bool chain = sum_v == weighted && sum_v == covered && sum_v <= nine_total;
  tally.record("Thm1", "sum v = sum P' ef = sum_R A(R)|R| + v(S) <= 9|P'|", chain, h,
               "sum v = " + sum_v.str() + ", 9|P'| = " + nine_total.str());
  tally.track_max("Thm1", "sum v = sum P' ef = sum_R A(R)|R| + v(S) <= 9|P'|", "sum v / |P'|",
                  sum_v / Rational(h.total()));
}

}  // namespace

std::string to_string(LemmaStatus status) {
  switch (status) {
    case LemmaStatus::Verified: return "verified";
    case LemmaStatus::Refuted: return "refuted";
    case LemmaStatus::CheckedEmpirically: return "checked-empirically";
  }
  return "unknown";
}

std::optional<std::string> LemmaReport::detail(const std::string& key) const {
  for (const auto& [k, v] : details) {
    if (k == key) return v;
  }
  return std::nullopt;
}

nlohmann::json to_json(const LemmaReport& report) {
  nlohmann::json j;
  j["id"] = report.id;
  j["check"] = report.check;
  j["status"] = to_string(report.status);
  if (report.status == LemmaStatus::CheckedEmpirically) j["samples"] = report.samples;
  nlohmann::json details = nlohmann::json::array();
  for (const auto& [k, v] : report.details) details.push_back({{"name", k}, {"value", v}});
  j["details"] = details;
  if (report.witness) j["witness"] = *report.witness;
  if (report.seed) j["seed"] = *report.seed;
  return j;
}

const std::vector<std::string>& required_report_ids() {
  static const std::vector<std::string> ids = {
      "Obs1", "Lem1",      "Obs2",     "Lem2", "Obs3", "Lem4(i)", "Lem4(ii)", "Lem4(iii)",
      "Lem4(iv)", "Lem5", "Lem6",     "Thm1", "Conj", "Lem7",    "Prop1"};
  return ids;
}

std::vector<std::string> missing_report_ids(const std::vector<LemmaReport>& reports) {
  std::vector<std::string> missing;
  for (const auto& id : required_report_ids()) {
    const bool found = std::any_of(reports.begin(), reports.end(),
                                   [&](const LemmaReport& r) { return r.id == id; });
    if (!found) missing.push_back(id);
  }
  return missing;
}

std::vector<LemmaReport> verify_constants() {
  std::vector<LemmaReport> out;

  {
    // 1 + sum_{k<=K} 4k/2^k = 9 - 4(K+2)/2^K
    bool ok = true;
    Rational partial(1);
    Rational at20;
    for (unsigned k = 1; k <= 64; ++k) {
      partial += Rational(static_cast<long>(4 * k)) * Rational::dyadic(k);
      const Rational gap = Rational(9) - partial;
      if (!(partial < Rational(9)) || gap != Rational(static_cast<long>(4 * (k + 2))) * Rational::dyadic(k)) {
        ok = false;
      }
      if (k == 20) at20 = partial;
    }
    Rational largest_effect;
    for (int m = 1; m <= 12; ++m) {
      for (int n = m; n <= 12; ++n) {
        const GridDims dims(m, n);
        const Rational ef = effect(dims, {(m - 1) / 2, (n - 1) / 2});
        largest_effect = max(largest_effect, ef);
        if (!(ef < Rational(9))) ok = false;
      }
    }
    out.push_back(judged("Thm1", "effect series 1 + sum 4k/2^k -> 9, partial sums < 9", ok,
                         {{"partial sum K=20", at20.str()},
                          {"gap at K=20", (Rational(9) - at20).str()},
                          {"largest central effect up to 12x12", largest_effect.str()}}));
  }

  {
    bool ok = true;
    for (long k = 2; k <= 1000; ++k) {
      const Rational kk(k);
      const Rational lhs = (kk * (Rational(2) + kMixing) + Rational(2 * k + 2) * kFourThirds +
                            Rational(2, 3)) / Rational(3 * k + 2);
      const Rational rhs = kRegionConstant + Rational(406) / (Rational(3177) * Rational(3 * k + 2));
      if (lhs != rhs || lhs < kRegionConstant) ok = false;
    }
    const Rational at2 = (Rational(2) * (Rational(2) + kMixing) + Rational(6) * kFourThirds +
                          Rational(2, 3)) / Rational(8);
    out.push_back(judged("Lem6", "region average identity for k = 2..1000", ok,
                         {{"A(R) bound at k=2", at2.str()},
                          {"5092/3177 + 406/(3177*8)", (kRegionConstant + Rational(406, 3177 * 8)).str()}}));
  }

  {
    const Rational k1 = (Rational(4) * kThreeHalves + Rational(2) + Rational(1, 4)) / Rational(5);
    out.push_back(judged("Lem6", "singleton core bound (4*3/2 + 2 + 1/4)/5 >= 5092/3177",
                         k1 == Rational(33, 20) && k1 >= kRegionConstant,
                         {{"bound", k1.str()}, {"constant", kRegionConstant.str()}}));
  }

  {
    const bool ok = kRegionConstant / Rational(9) == kDensity && 3177 * 9 == 28593;
    out.push_back(judged("Thm1", "(5092/3177)/9 = 5092/28593", ok,
                         {{"density", (kRegionConstant / Rational(9)).str()},
                          {"density approx", std::to_string(kDensity.approx())}}));
  }

  {
    const Rational e = Rational(1) + Rational(86, 75) - Rational(2);
    out.push_back(judged("Lem4(iii)", "11/75 = (1 + 86/75) - 2", e == Rational(11, 75),
                         {{"e(X) bound", e.str()}}));
  }

  {
    // e1 = e2 = e3 with x + y + z = 1; solved by elimination:
    // e2 = e3 gives x = 2y, e1 = e3 gives z = 53/100 y.
    const auto rows = mixing_functionals();
    const Rational y = Rational(1) / (Rational(2) + Rational(1) + Rational(53, 100));
    const Rational x = Rational(2) * y;
    const Rational z = Rational(53, 100) * y;
    auto eval = [](const Functional3& f, const Rational& a, const Rational& b, const Rational& c) {
      return f[0] * a + f[1] * b + f[2] * c;
    };
    const Rational e1 = eval(rows[0], x, y, z);
    const bool ok = y == Rational(100, 353) && x == Rational(2) * y && z == Rational(53, 100) * y &&
                    e1 == kMixing && eval(rows[1], x, y, z) == kMixing &&
                    eval(rows[2], x, y, z) == kMixing;
    out.push_back(judged("Lem5", "equalizer x = 2y, z = 53/100 y, y = 100/353 k", ok,
                         {{"x", x.str()}, {"y", y.str()}, {"z", z.str()}, {"common value", e1.str()}}));
  }
  return out;
}

LinearProgram first_lp_system() {
  const Rational h(1, 2);
  return eight_variable({
      {{2, 2, 2, h, h, h, h, h}, 2},
      {{-h, -h, -h, -h, 1, 1, 1, -h}, 0},
  });
}

LinearProgram add_value_system_p2() { return add_value_system(1, Rational(5, 6)); }
LinearProgram add_value_system_p1() { return add_value_system(2, Rational(13, 12)); }

LinearProgram reduce_to_four_variables(const LinearProgram& eight_var) {
  LinearProgram lp = eight_var;
  for (const auto& [keep, drop] : std::vector<std::pair<std::string, std::string>>{
           {"A", "B"}, {"C", "D"}, {"E", "F"}, {"G", "H"}}) {
    lp = dominate_reduce(lp, index_by_name(lp, keep), index_by_name(lp, drop));
  }
  return lp;
}

std::vector<Functional3> mixing_functionals() {
  // (x, y, z) = counts of 2-reachable vertices with 0, 1, >= 2 pebbles
  return {
      {Rational(0), Rational(11, 75), Rational(2, 3)},
      {Rational(1, 4), Rational(0), Rational(0)},
      {Rational(0), Rational(1, 2), Rational(0)},
  };
}

std::vector<LemmaReport> verify_lp_lemmas() {
  std::vector<LemmaReport> out;
  const Rational h(1, 2);

  {
    const LinearProgram full = first_lp_system();
    const LinearProgram reduced = reduce_to_four_variables(full);
    const LinearProgram printed = four_variable({{{2, 2, h, h}, 2}, {{-h, -h, 1, 1}, 0}});
    const LpSolution s8 = solve_min(full);
    const LpSolution s4 = solve_min(reduced);
    LinearProgram sums;
    sums.num_vars = 2;
    sums.names = {"S1", "S2"};
    sums.objective = {1, 1};
    sums.constraints = {{{2, h}, 2}, {{-h, 1}, 0}};
    const LpSolution s2 = solve_min(sums);
    const DualBound cert = check_dual_certificate(sums, {1, 1});
    const bool ok = same_program(reduced, printed) && s8.status == LpStatus::Optimal &&
                    s4.status == LpStatus::Optimal && s2.status == LpStatus::Optimal &&
                    s8.optimum == kFourThirds && s4.optimum == kFourThirds &&
                    s2.optimum == kFourThirds && s2.witness == std::vector<Rational>{Rational(8, 9), Rational(4, 9)} &&
                    cert.bound == kFourThirds;
    out.push_back(judged("Lem2", "value LP reduces to four variables and solves to 4/3", ok,
                         {{"optimum (8 vars)", s8.optimum.str()},
                          {"optimum (4 vars)", s4.optimum.str()},
                          {"optimum (S1, S2)", s2.optimum.str()},
                          {"witness (S1, S2)", join(s2.witness)},
                          {"certificate (1, 1) bound", cert.bound.str()},
                          {"reduced system matches printed", same_program(reduced, printed) ? "yes" : "no"}}));
  }

  {
    const LinearProgram full = add_value_system_p2();
    const LinearProgram reduced = reduce_to_four_variables(full);
    const LinearProgram printed = four_variable({{{2, 2, h, h}, 1},
                                                 {{Rational(1, 4), 1, 4, 1}, Rational(5, 6)},
                                                 {{1, Rational(1, 4), 1, 4}, Rational(5, 6)}});
    const DualBound cert = check_dual_certificate(reduced, {1, Rational(2, 5), Rational(2, 5)});
    const LpSolution s8 = solve_min(full);
    const LpSolution s4 = solve_min(reduced);
    const std::vector<Rational> witness{0, Rational(4, 9), Rational(1, 18), Rational(1, 6)};
    const bool attained = reduced.is_feasible(witness) && reduced.evaluate(witness) == Rational(2, 3);
    const bool ok = same_program(reduced, printed) && cert.bound == Rational(2, 3) &&
                    cert.combined_rhs == Rational(5, 3) && cert.scale == Rational(5, 2) &&
                    s4.status == LpStatus::Optimal && s4.optimum >= cert.bound &&
                    s8.optimum == s4.optimum && attained && s4.optimum == Rational(2, 3);
    out.push_back(judged("Lem4(ii)", "p = 2 system: certificate (1, 2/5, 2/5) gives 2/3, attained", ok,
                         {{"certificate bound", cert.bound.str()},
                          {"combined row scale", cert.scale.str()},
                          {"combined rhs", cert.combined_rhs.str()},
                          {"optimum (4 vars)", s4.optimum.str()},
                          {"optimum (8 vars)", s8.optimum.str()},
                          {"solver witness", join(s4.witness)},
                          {"feasible point at 2/3", join(witness)}}));
  }

  {
    const LinearProgram full = add_value_system_p1();
    const LinearProgram reduced = reduce_to_four_variables(full);
    const LinearProgram printed = four_variable({{{2, 2, h, h}, 2},
                                                 {{Rational(1, 4), 1, 4, 1}, Rational(13, 12)},
                                                 {{1, Rational(1, 4), 1, 4}, Rational(13, 12)}});
    const DualBound cert = check_dual_certificate(reduced, {1, Rational(2, 5), Rational(2, 5)});
    const LpSolution s8 = solve_min(full);
    const LpSolution s4 = solve_min(reduced);
    const bool ok = same_program(reduced, printed) && cert.bound == Rational(86, 75) &&
                    cert.combined_rhs == Rational(43, 15) && s4.status == LpStatus::Optimal &&
                    s4.optimum >= cert.bound && s8.optimum == s4.optimum;
    out.push_back(judged("Lem4(iii)", "p = 1 system: certificate (1, 2/5, 2/5) gives 86/75", ok,
                         {{"certificate bound", cert.bound.str()},
                          {"combined rhs", cert.combined_rhs.str()},
                          {"optimum (4 vars)", s4.optimum.str()},
                          {"optimum (8 vars)", s8.optimum.str()},
                          {"solver witness", join(s4.witness)},
                          {"implied e(X) bound", (Rational(1) + cert.bound - Rational(2)).str()}}));
  }

  {
    const auto rows = mixing_functionals();
    const MinimaxResult unit = minimax_on_simplex(rows, 1);
    const MinimaxResult scaled = minimax_on_simplex(rows, 353);
    const MinimaxResult zero = minimax_on_simplex(rows, 0);
    const bool ok = unit.value == kMixing && scaled.value == Rational(50) && zero.value.is_zero() &&
                    scaled.point == std::array<Rational, 3>{Rational(200), Rational(100), Rational(53)};
    out.push_back(judged("Lem5", "min over x+y+z=k of max(e1, e2, e3) = 50/353 k", ok,
                         {{"value per unit budget", unit.value.str()},
                          {"value at k=353", scaled.value.str()},
                          {"minimizer at k=353", join({scaled.point.begin(), scaled.point.end()})}}));
  }
  return out;
}

std::vector<LemmaReport> empirical_sweep(const GridDims& dims, int max_total,
                                         const SamplePolicy& policy) {
  if (max_total < 0) throw InvalidArgument("max_total must be non-negative");
  const ReachOptions opts = sweep_reach_options(dims, max_total);
  const ReachabilityOracle oracle(dims, MoveRule(2), opts);
  Tally tally;
  const Enumeration info = for_each_solvable(dims, max_total, policy, oracle, [&](const Distribution& p) {
    check_plain(p, opts, tally);
    check_hemmed(p, opts, tally);
  });
  std::vector<std::pair<std::string, std::string>> common = {
      {"grid", dims.str()},
      {"max total", std::to_string(max_total)},
      {"mode", info.exhaustive ? "exhaustive (canonical forms)" : "random"},
      {"distributions visited", std::to_string(info.visited)},
      {"solvable distributions", std::to_string(info.solvable)},
  };
  return tally.reports(common, info.exhaustive ? std::nullopt : std::optional<std::uint64_t>(policy.seed));
}

LemmaReport conjecture_scan(const GridDims& dims, int max_total, const SamplePolicy& policy) {
  const ReachOptions opts = sweep_reach_options(dims, max_total);
  const ReachabilityOracle oracle(dims, MoveRule(2), opts);
  std::optional<Rational> best;
  std::optional<std::string> best_witness;
  std::optional<std::string> counterexample;
  long interior_checks = 0;
  const Enumeration info = for_each_solvable(dims, max_total, policy, oracle, [&](const Distribution& p) {
    const ValueMap values = value_map(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Vertex x = vertex_at(dims, i);
      if (on_boundary(dims, x)) continue;
      ++interior_checks;
      const Rational& v = values.values[i];
      if (!best || v < *best) {
        best = v;
        best_witness = p.str();
      }
      if (v < kThreeHalves && !counterexample) counterexample = p.str();
    }
  });
  LemmaReport r;
  r.id = "Conj";
  r.check = "interior v(X) >= 3/2 on solvable distributions (scan, not a proof)";
  r.status = counterexample ? LemmaStatus::Refuted : LemmaStatus::CheckedEmpirically;
  r.samples = interior_checks;
  r.details = {{"grid", dims.str()},
               {"max total", std::to_string(max_total)},
               {"mode", info.exhaustive ? "exhaustive (canonical forms)" : "random"},
               {"solvable distributions", std::to_string(info.solvable)},
               {"min interior value", best ? best->str() : "none (no interior vertex)"}};
  if (best_witness) r.details.emplace_back("minimizer", *best_witness);
  r.witness = counterexample;
  if (!info.exhaustive) r.seed = policy.seed;
  return r;
}

std::vector<LemmaReport> verify_procedures(const std::vector<GridDims>& grids, int max_total) {
  Tally tally;
  for (const GridDims& dims : grids) {
    const ReachOptions opts{std::max<long>(64, max_total)};
    const ReachabilityOracle oracle2(dims, MoveRule(2), opts);
    for (int arity : {2, 3, 5}) {
      const ReachabilityOracle oracle(dims, MoveRule(arity), opts);
      const ReachabilityOracle oracle5(dims, MoveRule(5), opts);
      for (int t = 0; t <= max_total; ++t) {
        for_each_composition(dims.size(), t, [&](std::span<const int> counts) {
          const Distribution p(dims, std::vector<int>(counts.begin(), counts.end()));
          if (!oracle.is_solvable(p)) return true;
          for (std::size_t i = 0; i < p.size(); ++i) {
            if (p.at(i) < arity + 1) continue;
            const Distribution s = smoothen(p, MoveRule(arity), vertex_at(dims, i));
            tally.record("Lem7", "smoothening keeps arity-solvability (arity 2, 3, 5)",
                         oracle.is_solvable(s), p, "arity " + std::to_string(arity) + " at " +
                                                       to_string(vertex_at(dims, i)));
          }
          if (arity == 5) {
            const Distribution q = flatten_to_occupied(p, MoveRule(5), opts);
            const bool ok = q.unoccupied().empty() && q.total() <= p.total() && oracle5.is_solvable(q);
            tally.record("Prop1", "flattening gives an occupied solvable distribution, |Q| <= |P|",
                         ok, p);
          }
          if (arity == 2 && p.size() >= 2) {
            const Distribution q = normalize(p, opts);
            const bool ok = q.total() == p.total() && oracle2.is_solvable(q) &&
                            decompose(q, opts).leftover.empty();
            tally.record("Lem1", "normalize keeps |P|, solvability, empties S", ok, p);
          }
          return true;
        });
      }
    }
    for (int arity : {5, 6}) {
      SearchConfig cfg;
      cfg.max_total = std::max<long>(64, static_cast<long>(dims.size()));
      const bool ok = verify_pi_k_equals_nm(dims, arity, cfg);
      tally.record("Prop1", "pi_k = mn for arity 5 and 6", ok, Distribution(dims),
                   dims.str() + " arity " + std::to_string(arity));
    }
  }
  std::string names;
  for (const auto& g : grids) names += (names.empty() ? "" : ", ") + g.str();
  return tally.reports({{"grids", names}, {"max total", std::to_string(max_total)}}, std::nullopt);
}

bool SuiteResult::ok() const {
  return missing_ids.empty() &&
         std::none_of(reports.begin(), reports.end(), [](const LemmaReport& r) { return r.refuted(); });
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json j;
  j["ok"] = ok();
  j["missing_ids"] = missing_ids;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(gridpeb::to_json(r));
  j["reports"] = arr;
  return j;
}

std::string SuiteResult::summary() const {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.refuted() ? "[REFUTED] " : "[ok]      ") << r.id << "  " << r.check;
    if (r.status == LemmaStatus::CheckedEmpirically) os << "  (" << r.samples << " checks)";
    os << '\n';
    if (r.refuted() && r.witness) os << "  witness:\n" << *r.witness;
  }
  for (const auto& id : missing_ids) os << "[MISSING] " << id << '\n';
  os << (ok() ? "all claims verified\n" : "suite FAILED\n");
  return os.str();
}

SuiteResult run_suite(const SuiteConfig& config) {
  SuiteResult out;
  auto append = [&](std::vector<LemmaReport> rs) {
    for (auto& r : rs) out.reports.push_back(std::move(r));
  };
  if (config.constants) append(verify_constants());
  if (config.lp) append(verify_lp_lemmas());
  for (const auto& [dims, total] : config.sweeps) append(empirical_sweep(dims, total, config.policy));
  for (const auto& [dims, total] : config.conjecture) {
    out.reports.push_back(conjecture_scan(dims, total, config.policy));
  }
  if (config.procedures) append(verify_procedures(config.procedure_grids, config.procedure_max_total));
  out.missing_ids = missing_report_ids(out.reports);
  return out;
}

}  // namespace gridpeb
