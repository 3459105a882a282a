// gridpeb: command-line front end for grid pebbling computations.
//
// Exit codes: 0 ok, 1 unreachable/unsolvable, 2 input error, 3 refutation or
// certificate mismatch, 4 search cap exceeded.

#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridpeb/certificate.hpp"
#include "gridpeb/error.hpp"
#include "gridpeb/io.hpp"
#include "gridpeb/lemmas.hpp"
#include "gridpeb/potential.hpp"
#include "gridpeb/regions.hpp"
#include "gridpeb/search.hpp"

using namespace gridpeb;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kRefuted = 3, kCap = 4 };

struct Common {
  std::string file = "-";
  std::string format = "ascii";
  long cap = 64;
};

Distribution load(const Common& c) { return parse_distribution(read_input(c.file)); }

ReachOptions reach_options(const Common& c, const Distribution& d, bool hemmed = false) {
  long need = d.total();
  if (hemmed) need += 2 * static_cast<long>(boundary(d.dims()).size());
  return ReachOptions{std::max(c.cap, need)};
}

json vertex_json(const Vertex& v) { return json::array({v.row, v.col}); }

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string vertices_text(const std::vector<Vertex>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + to_string(v);
  return s.empty() ? "-" : s;
}

int cmd_reach(const Common& c, const std::string& target_text, int k, int arity, bool show_moves) {
  const Distribution d = load(c);
  const Vertex target = parse_vertex(target_text);
  require_vertex(d.dims(), target);
  if (k < 1) throw InvalidArgument("k must be at least 1");
  const ReachabilityOracle oracle(d.dims(), MoveRule(arity), reach_options(c, d));
  const int count = oracle.reach_count(d, target);
  const bool ok = count >= k;
  std::optional<std::vector<Move>> moves;
  if (ok && show_moves) moves = oracle.witness(d, target, k);
  if (c.format == "json") {
    json j{{"target", vertex_json(target)}, {"k", k}, {"arity", arity},
           {"reach_count", count}, {"reachable", ok}};
    if (moves) {
      j["moves"] = json::array();
      for (const Move& m : *moves) j["moves"].push_back({vertex_json(m.from), vertex_json(m.to)});
    }
    print(j);
  } else {
    std::cout << (ok ? "reachable" : "unreachable") << '\n'
              << "reach_count " << count << '\n';
    if (moves) {
      for (const Move& m : *moves) std::cout << "move " << to_string(m.from) << " -> " << to_string(m.to) << '\n';
    }
  }
  return ok ? kOk : kNegative;
}

int cmd_regions(const Common& c, bool hemmed) {
  Distribution d = load(c);
  if (hemmed) d = hem(d);
  const RegionPartition part = decompose(d, reach_options(c, d));
  const ValueMap values = value_map(d);
  if (c.format == "json") {
    json regions = json::array();
    for (const Region& r : part.regions) {
      json rec{{"k", r.k()}, {"N", r.N()}, {"core", json::array()}, {"members", json::array()}};
      for (const Vertex& v : r.core) rec["core"].push_back(vertex_json(v));
      for (const Vertex& v : r.members) rec["members"].push_back(vertex_json(v));
      put_rational(rec, "average", region_average(values, r));
      regions.push_back(rec);
    }
    json leftover = json::array();
    for (const Vertex& v : part.leftover) leftover.push_back(vertex_json(v));
    print({{"hemmed", hemmed}, {"regions", regions}, {"leftover", leftover}});
    return kOk;
  }
  for (std::size_t i = 0; i < part.regions.size(); ++i) {
    const Region& r = part.regions[i];
    const Rational avg = region_average(values, r);
    std::cout << "region " << i << ": k=" << r.k() << " N=" << r.N() << " A=" << avg << " (approx. "
              << avg.approx() << ")\n"
              << "  core    " << vertices_text(r.core) << '\n'
              << "  members " << vertices_text(r.members) << '\n';
  }
  std::cout << "leftover " << vertices_text(part.leftover) << '\n';
  return kOk;
}

int cmd_values(const Common& c, bool hemmed, bool heatmap) {
  Distribution d = load(c);
  if (hemmed) d = hem(d);
  const ValueMap values = value_map(d);
  const GridDims& dims = d.dims();
  if (c.format == "json") {
    json rows = json::array();
    json approx = json::array();
    for (int r = 0; r < dims.rows; ++r) {
      json row = json::array();
      json arow = json::array();
      for (int col = 0; col < dims.cols; ++col) {
        row.push_back(values[{r, col}].str());
        arow.push_back(values[{r, col}].approx());
      }
      rows.push_back(row);
      approx.push_back(arow);
    }
    json j{{"hemmed", hemmed}, {"values", rows}, {"values_approx", approx}};
    put_rational(j, "min", values.min());
    put_rational(j, "sum", values.sum());
    print(j);
    return kOk;
  }
  if (heatmap) {
    // Shade by value relative to 4/3 and 3/2; exact values follow below.
    static const char* shades[] = {" ! ", " . ", " o ", " O ", " @ "};
    std::cout << "legend: ! < 4/3 <= . < 3/2 <= o < 2 <= O < 4 <= @\n";
    for (int r = 0; r < dims.rows; ++r) {
      for (int col = 0; col < dims.cols; ++col) {
        const Rational& v = values[{r, col}];
        int s = 4;
        if (v < Rational(4, 3)) s = 0;
        else if (v < Rational(3, 2)) s = 1;
        else if (v < Rational(2)) s = 2;
        else if (v < Rational(4)) s = 3;
        std::cout << shades[s];
      }
      std::cout << '\n';
    }
  }
  std::size_t width = 1;
  for (const auto& v : values.values) width = std::max(width, v.str().size());
  for (int r = 0; r < dims.rows; ++r) {
    for (int col = 0; col < dims.cols; ++col) {
      std::cout << (col ? " " : "") << std::setw(static_cast<int>(width)) << values[{r, col}].str();
    }
    std::cout << '\n';
  }
  std::cout << "min " << values.min() << " (approx. " << values.min().approx() << ")\n";
  return kOk;
}

int cmd_certificate(const Common& c, const std::string& verify_path) {
  const Distribution d = load(c);
  const ReachOptions opts = reach_options(c, d, true);
  if (!verify_path.empty()) {
    json stored;
    try {
      stored = json::parse(read_input(verify_path));
    } catch (const json::parse_error& e) {
      throw InvalidArgument(std::string("malformed certificate: ") + e.what());
    }
    const VerifyResult r = verify_certificate(stored, d, opts);
    if (!r.match) {
      std::cout << "mismatch at " << r.first_difference << '\n';
      return kRefuted;
    }
    std::cout << "certificate matches\n";
    return kOk;
  }
  const json report = certificate(d, opts);
  print(report);
  return certificate_violations(report).empty() ? kOk : kRefuted;
}

struct LemmaArgs {
  std::string sweep;
  std::string conjecture;
  int max_total = -1;
  bool procedures = false;
  std::uint64_t seed = SamplePolicy{}.seed;
  long samples = SamplePolicy{}.samples;
  bool random = false;
};

int cmd_lemmas(const Common& c, const LemmaArgs& a) {
  SuiteConfig cfg;
  cfg.procedures = a.procedures;
  cfg.sweeps.clear();
  cfg.conjecture.clear();
  cfg.policy.seed = a.seed;
  cfg.policy.samples = a.samples;
  cfg.policy.force_random = a.random;
  if (!a.sweep.empty()) cfg.sweeps.emplace_back(parse_dims(a.sweep), a.max_total < 0 ? 7 : a.max_total);
  if (!a.conjecture.empty()) {
    cfg.conjecture.emplace_back(parse_dims(a.conjecture), a.max_total < 0 ? 6 : a.max_total);
  }
  SuiteResult result = run_suite(cfg);
  // Partial runs skip the coverage lock; it applies to full-scope runs only.
  const bool full = !a.sweep.empty() && !a.conjecture.empty() && a.procedures;
  if (!full) result.missing_ids.clear();
  if (c.format == "json") {
    print(result.to_json());
  } else {
    std::cout << result.summary();
  }
  return result.ok() ? kOk : kRefuted;
}

int cmd_pi(const Common& c, const std::string& dims_text, int arity, bool no_symmetry, int jobs) {
  const GridDims dims = parse_dims(dims_text);
  if (arity < 1) throw InvalidArgument("arity must be at least 1");
  PebblingNumber pn;
  if (arity == 1) {
    // One pebble walks anywhere.
    pn.value = 1;
    pn.witness = Distribution(dims);
    pn.witness.set({0, 0}, 1);
  } else {
    SearchConfig cfg;
    cfg.rule = MoveRule(arity);
    cfg.max_total = c.cap;
    cfg.use_symmetry = !no_symmetry;
    cfg.parallelism = jobs;
    pn = optimal_pebbling_number(dims, cfg);
  }
  if (c.format == "json") {
    print({{"grid", dims.str()}, {"arity", arity}, {"value", pn.value},
           {"witness", distribution_to_json(pn.witness)}, {"candidates_checked", pn.candidates_checked}});
  } else {
    std::cout << pn.value << '\n' << distribution_to_ascii(pn.witness);
  }
  return kOk;
}

int cmd_normalize(const Common& c) {
  const Distribution d = load(c);
  const Distribution out = normalize(d, reach_options(c, d));
  if (c.format == "json") {
    print(distribution_to_json(out));
  } else {
    std::cout << distribution_to_ascii(out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pebbling computations on rectangular grids"};
  app.require_subcommand(1);

  // One option set per subcommand: default_val writes through at setup time.
  std::map<const CLI::App*, Common> commons;
  auto add_common = [&](CLI::App* sub, bool with_file, const std::string& default_format) {
    Common& common = commons[sub];
    if (with_file) sub->add_option("file", common.file, "distribution file (JSON or ASCII), - for stdin")->required();
    sub->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"ascii", "json"}))
        ->default_val(default_format);
    sub->add_option("--cap", common.cap, "largest pebble total the search accepts")->default_val(64);
  };

  std::string target;
  int k = 1;
  int arity = 2;
  bool moves = false;
  auto* reach = app.add_subcommand("reach", "reach count of a vertex");
  add_common(reach, true, "ascii");
  reach->add_option("--target,-t", target, "target vertex r,c")->required();
  reach->add_option("-k", k, "pebbles wanted on the target")->default_val(1);
  reach->add_option("--arity", arity, "pebbles removed per move")->default_val(2);
  reach->add_flag("--moves", moves, "print a witnessing move sequence");

  bool hemmed = false;
  auto* regions = app.add_subcommand("regions", "regions of reachability and leftover set");
  add_common(regions, true, "ascii");
  regions->add_flag("--hem", hemmed, "add 2 pebbles on every boundary vertex first");

  bool heatmap = false;
  auto* values = app.add_subcommand("values", "exact value of every vertex");
  add_common(values, true, "ascii");
  values->add_flag("--hem", hemmed, "add 2 pebbles on every boundary vertex first");
  values->add_flag("--ascii-heatmap", heatmap, "shaded table before the exact values");

  std::string verify;
  auto* cert = app.add_subcommand("certificate", "region averages and the value-sum chain");
  add_common(cert, true, "json");
  cert->add_option("--verify", verify, "stored report to re-check against the distribution");

  LemmaArgs la;
  auto* lemmas = app.add_subcommand("lemmas", "machine checks of the lower-bound argument");
  add_common(lemmas, false, "json");
  lemmas->add_option("--sweep", la.sweep, "grid MxN for the per-instance sweep");
  lemmas->add_option("--conjecture", la.conjecture, "grid MxN for the interior value scan");
  lemmas->add_option("--max-total", la.max_total, "largest pebble total enumerated");
  lemmas->add_flag("--procedures", la.procedures, "check normalize, smoothen and flatten exhaustively");
  lemmas->add_option("--seed", la.seed, "RNG seed for sampled sweeps");
  lemmas->add_option("--samples", la.samples, "solvable samples in random mode");
  lemmas->add_flag("--random", la.random, "sample even when exhaustive enumeration is feasible");

  std::string dims;
  bool no_symmetry = false;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* pi = app.add_subcommand("pi", "optimal pebbling number of a grid");
  add_common(pi, false, "ascii");
  pi->add_option("dims", dims, "grid size MxN")->required();
  pi->add_option("--arity", arity, "pebbles removed per move")->default_val(2);
  pi->add_flag("--no-symmetry", no_symmetry, "enumerate every distribution, not one per orbit");
  pi->add_option("--jobs,-j", jobs, "worker threads");

  auto* norm = app.add_subcommand("normalize", "move leftover pebbles until no leftover vertex remains");
  add_common(norm, true, "ascii");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*reach) return cmd_reach(commons[reach], target, k, arity, moves);
    if (*regions) return cmd_regions(commons[regions], hemmed);
    if (*values) return cmd_values(commons[values], hemmed, heatmap);
    if (*cert) return cmd_certificate(commons[cert], verify);
    if (*lemmas) return cmd_lemmas(commons[lemmas], la);
    if (*pi) return cmd_pi(commons[pi], dims, arity, no_symmetry, jobs);
    if (*norm) return cmd_normalize(commons[norm]);
  } catch (const Unsolvable& e) {
    std::cerr << "unsolvable: " << e.what() << '\n';
    return kNegative;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const InvalidArgument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const PreconditionFailed& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const StructureViolation& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return kRefuted;
  }
  return kInput;
}
