#include "gridpeb/certificate.hpp"

#include <cstdio>

#include "gridpeb/error.hpp"
#include "gridpeb/io.hpp"
#include "gridpeb/potential.hpp"
#include "gridpeb/regions.hpp"

namespace gridpeb {

namespace {

const Rational kRegionConstant(5092, 3177);

nlohmann::json vertex_list(const std::vector<Vertex>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (const Vertex& v : vs) out.push_back({v.row, v.col});
  return out;
}

struct PartitionSummary {
  nlohmann::json json;
  bool frontier_ok = true;
  bool size_ok = true;
  bool multi_region_ok = true;
  Rational covered;
};

PartitionSummary summarize(const RegionPartition& part, const ValueMap& values) {
  PartitionSummary s;
  nlohmann::json regions = nlohmann::json::array();
  const bool multi = part.regions.size() >= 2;
  for (const Region& r : part.regions) {
    const Rational avg = region_average(values, r);
    const auto frontier = region_frontier(part, r);
    nlohmann::json rec;
    rec["k"] = r.k();
    rec["N"] = r.N();
    put_rational(rec, "average", avg);
    rec["frontier_size"] = frontier.size();
    Rational frontier_min;
    bool first = true;
    for (const Vertex& x : frontier) {
      if (first || values[x] < frontier_min) frontier_min = values[x];
      first = false;
    }
    if (!first) {
      put_rational(rec, "frontier_min_value", frontier_min);
      if (frontier_min < Rational(3, 2)) s.frontier_ok = false;
    }
    rec["core"] = vertex_list(r.core);
    rec["members"] = vertex_list(r.members);
    if (r.N() > 3 * r.k() + 2) s.size_ok = false;
    if (multi && avg < kRegionConstant) s.multi_region_ok = false;
    s.covered += avg * Rational(r.N());
    regions.push_back(rec);
  }
  for (const Vertex& x : part.leftover) s.covered += values[x];
  s.json["regions"] = regions;
  s.json["leftover"] = vertex_list(part.leftover);
  return s;
}

void diff(const nlohmann::json& a, const nlohmann::json& b, const std::string& path, std::string& out) {
  if (!out.empty()) return;
  if (a.is_number() && b.is_number()) {
    if (a.dump() != b.dump()) out = path;
    return;
  }
  if (a.type() != b.type()) {
    out = path.empty() ? "/" : path;
    return;
  }
  if (a.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key())) {
        out = path + "/" + it.key();
        return;
      }
      diff(it.value(), b[it.key()], path + "/" + it.key(), out);
    }
    for (auto it = b.begin(); it != b.end(); ++it) {
      if (!a.contains(it.key())) {
        out = path + "/" + it.key();
        return;
      }
    }
  } else if (a.is_array()) {
    if (a.size() != b.size()) {
      out = path;
      return;
    }
    for (std::size_t i = 0; i < a.size(); ++i) diff(a[i], b[i], path + "/" + std::to_string(i), out);
  } else if (a.dump() != b.dump()) {
    out = path.empty() ? "/" : path;
  }
}

}  // namespace

std::string distribution_digest(const Distribution& dist) {
  std::string text = std::to_string(dist.dims().rows) + " " + std::to_string(dist.dims().cols);
  for (std::size_t i = 0; i < dist.size(); ++i) text += " " + std::to_string(dist.at(i));
  std::uint64_t h = 14695981039346656037ULL;
  for (const unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json certificate(const Distribution& dist, const ReachOptions& options) {
  const GridDims& dims = dist.dims();
  const Distribution hemmed = hem(dist);
  ReachOptions opts = options;
  opts.max_total = std::max(opts.max_total, hemmed.total());
  const RegionPartition plain_part = decompose(dist, opts);
  const RegionPartition hemmed_part = decompose(hemmed, opts);
  const ValueMap plain_values = value_map(dist);
  const ValueMap values = value_map(hemmed);

  nlohmann::json j;
  j["digest"] = distribution_digest(dist);
  j["grid"] = dims.str();
  j["distribution"] = distribution_to_json(dist);
  j["total"] = dist.total();
  j["solvable"] = true;
  j["hemmed_total"] = hemmed.total();

  const PartitionSummary plain = summarize(plain_part, plain_values);
  const PartitionSummary hs = summarize(hemmed_part, values);
  j["plain"] = plain.json;
  j["hemmed"] = hs.json;

  Rational weighted;
  for (std::size_t i = 0; i < hemmed.size(); ++i) {
    if (hemmed.at(i)) weighted += Rational(hemmed.at(i)) * effect(dims, vertex_at(dims, i));
  }
  const Rational sum_v = values.sum();
  const Rational nine = Rational(9) * Rational(hemmed.total());
  const long hem_pebbles = hemmed.total() - dist.total();
  nlohmann::json chain;
  put_rational(chain, "sum_values", sum_v);
  put_rational(chain, "sum_hemmed_times_effect", weighted);
  put_rational(chain, "sum_region_average_times_size", hs.covered);
  put_rational(chain, "nine_hemmed_total", nine);
  put_rational(chain, "min_value", values.min());
  // |P| = |P'| - hem pebbles >= sum v / 9 - hem pebbles
  put_rational(chain, "implied_total_lower_bound", sum_v / Rational(9) - Rational(hem_pebbles));
  Rational min_avg;
  for (std::size_t i = 0; i < hemmed_part.regions.size(); ++i) {
    const Rational avg = region_average(values, hemmed_part.regions[i]);
    if (i == 0 || avg < min_avg) min_avg = avg;
  }
  if (!hemmed_part.regions.empty()) put_rational(chain, "min_region_average", min_avg);
  j["chain"] = chain;

  bool boundary_ok = true;
  for (const Vertex& b : boundary(dims)) {
    const auto idx = hemmed_part.region_of(b);
    if (!idx || !hemmed_part.regions[*idx].in_core(b)) boundary_ok = false;
  }
  nlohmann::json checks;
  checks["Lem2 hemmed values >= 4/3"] = values.min() >= Rational(4, 3);
  checks["Lem2 hemmed boundary 2-reachable"] = boundary_ok;
  checks["Obs2 plain frontier values >= 3/2"] = plain.frontier_ok;
  checks["Obs2 hemmed frontier values >= 3/2"] = hs.frontier_ok;
  checks["Obs3 plain N <= 3k+2"] = plain.size_ok;
  checks["Obs3 hemmed N <= 3k+2"] = hs.size_ok;
  checks["Lem6 plain multi-region averages >= 5092/3177"] = plain.multi_region_ok;
  checks["Lem6 hemmed multi-region averages >= 5092/3177"] = hs.multi_region_ok;
  checks["Thm1 sum v = sum P' ef = sum A(R)|R| + v(S) <= 9|P'|"] =
      sum_v == weighted && sum_v == hs.covered && sum_v <= nine;
  j["checks"] = checks;
  return j;
}

std::vector<std::string> certificate_violations(const nlohmann::json& report) {
  std::vector<std::string> out;
  if (!report.contains("checks")) return out;
  for (auto it = report["checks"].begin(); it != report["checks"].end(); ++it) {
    if (!it.value().is_boolean() || !it.value().get<bool>()) out.push_back(it.key());
  }
  return out;
}

VerifyResult verify_certificate(const nlohmann::json& stored, const Distribution& dist,
                                const ReachOptions& options) {
  const nlohmann::json fresh = certificate(dist, options);
  VerifyResult r;
  diff(fresh, stored, "", r.first_difference);
  r.match = r.first_difference.empty();
  return r;
}

}  // namespace gridpeb
