#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "gridpeb/certificate.hpp"
#include "gridpeb/error.hpp"
#include "gridpeb/io.hpp"
#include "gridpeb/lemmas.hpp"
#include "gridpeb/lp.hpp"
#include "gridpeb/potential.hpp"
#include "gridpeb/regions.hpp"
#include "gridpeb/search.hpp"

namespace py = pybind11;
using namespace gridpeb;
using nlohmann::json;

namespace {

using Grid = std::vector<std::vector<int>>;

Distribution to_dist(const Grid& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidArgument("distribution must have at least one cell");
  std::vector<int> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) throw InvalidArgument("rows differ in length");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Distribution(GridDims(static_cast<int>(rows.size()), static_cast<int>(rows.front().size())), flat);
}

Grid from_dist(const Distribution& d) {
  Grid out(d.dims().rows, std::vector<int>(d.dims().cols));
  for (int r = 0; r < d.dims().rows; ++r) {
    for (int c = 0; c < d.dims().cols; ++c) out[r][c] = d[{r, c}];
  }
  return out;
}

std::vector<std::string> rationals(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

ReachOptions cap_for(const Distribution& d, long cap) {
  return ReachOptions{std::max<long>(cap, d.total())};
}

std::string regions_json(const Grid& rows, bool hemmed, long cap) {
  Distribution d = to_dist(rows);
  if (hemmed) d = hem(d);
  const RegionPartition part = decompose(d, cap_for(d, cap));
  const ValueMap values = value_map(d);
  json regions = json::array();
  for (const Region& r : part.regions) {
    json rec{{"k", r.k()}, {"N", r.N()}, {"core", json::array()}, {"members", json::array()}};
    for (const Vertex& v : r.core) rec["core"].push_back({v.row, v.col});
    for (const Vertex& v : r.members) rec["members"].push_back({v.row, v.col});
    put_rational(rec, "average", region_average(values, r));
    regions.push_back(rec);
  }
  json leftover = json::array();
  for (const Vertex& v : part.leftover) leftover.push_back({v.row, v.col});
  return json{{"hemmed", hemmed}, {"regions", regions}, {"leftover", leftover}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact pebbling computations on rectangular grids";

  static py::exception<Unsolvable> unsolvable(m, "Unsolvable", PyExc_ValueError);
  static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Unsolvable& e) {
      unsolvable(e.what());
    } catch (const CapExceeded& e) {
      cap_exceeded(e.what());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const PreconditionFailed& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "reach_count",
      [](const Grid& rows, std::pair<int, int> target, int arity, long cap) {
        const Distribution d = to_dist(rows);
        const Vertex t{target.first, target.second};
        require_vertex(d.dims(), t);
        return ReachabilityOracle(d.dims(), MoveRule(arity), cap_for(d, cap)).reach_count(d, t);
      },
      py::arg("pebbles"), py::arg("target"), py::arg("arity") = 2, py::arg("cap") = 64);

  m.def(
      "is_solvable",
      [](const Grid& rows, int arity, long cap) {
        const Distribution d = to_dist(rows);
        return ReachabilityOracle(d.dims(), MoveRule(arity), cap_for(d, cap)).is_solvable(d);
      },
      py::arg("pebbles"), py::arg("arity") = 2, py::arg("cap") = 64);

  m.def(
      "values",
      [](const Grid& rows, bool hemmed) {
        Distribution d = to_dist(rows);
        if (hemmed) d = hem(d);
        const ValueMap vm = value_map(d);
        std::vector<std::vector<std::string>> out(d.dims().rows);
        for (int r = 0; r < d.dims().rows; ++r) {
          for (int c = 0; c < d.dims().cols; ++c) out[r].push_back(vm[{r, c}].str());
        }
        return out;
      },
      py::arg("pebbles"), py::arg("hem") = false);

  m.def("hem", [](const Grid& rows) { return from_dist(hem(to_dist(rows))); }, py::arg("pebbles"));

  m.def("regions_json", &regions_json, py::arg("pebbles"), py::arg("hem") = false, py::arg("cap") = 64);

  m.def(
      "normalize",
      [](const Grid& rows, long cap) {
        const Distribution d = to_dist(rows);
        return from_dist(normalize(d, cap_for(d, cap)));
      },
      py::arg("pebbles"), py::arg("cap") = 64);

  m.def(
      "certificate_json",
      [](const Grid& rows, long cap) {
        const Distribution d = to_dist(rows);
        return certificate(d, cap_for(d, cap + 2 * static_cast<long>(boundary(d.dims()).size()))).dump();
      },
      py::arg("pebbles"), py::arg("cap") = 64);

  m.def(
      "verify_certificate",
      [](const std::string& stored, const Grid& rows, long cap) {
        const Distribution d = to_dist(rows);
        const VerifyResult r = verify_certificate(
            json::parse(stored), d, cap_for(d, cap + 2 * static_cast<long>(boundary(d.dims()).size())));
        return std::make_pair(r.match, r.first_difference);
      },
      py::arg("stored"), py::arg("pebbles"), py::arg("cap") = 64);

  m.def(
      "pebbling_number",
      [](int rows, int cols, int arity, int max_total, bool use_symmetry, int jobs) {
        SearchConfig cfg;
        cfg.rule = MoveRule(arity);
        cfg.max_total = max_total;
        cfg.use_symmetry = use_symmetry;
        cfg.parallelism = jobs;
        PebblingNumber pn;
        {
          py::gil_scoped_release release;
          pn = optimal_pebbling_number(GridDims(rows, cols), cfg);
        }
        return std::make_pair(pn.value, from_dist(pn.witness));
      },
      py::arg("rows"), py::arg("cols"), py::arg("arity") = 2, py::arg("max_total") = 64,
      py::arg("use_symmetry") = true, py::arg("jobs") = 1);

  m.def(
      "solve_lp",
      [](const std::string& text) {
        const LpSolution s = solve_min(parse_lp(text));
        return py::make_tuple(to_string(s.status), s.optimum.str(), rationals(s.witness));
      },
      py::arg("text"));

  m.def(
      "run_lemmas_json",
      [](bool sweeps, bool conjecture, bool procedures, std::uint64_t seed) {
        SuiteConfig cfg;
        if (!sweeps) cfg.sweeps.clear();
        if (!conjecture) cfg.conjecture.clear();
        cfg.procedures = procedures;
        cfg.policy.seed = seed;
        SuiteResult r;
        {
          py::gil_scoped_release release;
          r = run_suite(cfg);
        }
        return r.to_json().dump();
      },
      py::arg("sweeps") = true, py::arg("conjecture") = true, py::arg("procedures") = true,
      py::arg("seed") = SamplePolicy{}.seed);
}
