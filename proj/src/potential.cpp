#include "gridpeb/potential.hpp"

#include <algorithm>

#include "gridpeb/engine.hpp"
#include "gridpeb/error.hpp"

namespace gridpeb {

namespace {

// Values are accumulated as integers over the common denominator 2^diameter.
Rational over_dyadic(const mpz_class& scaled, int diameter) {
  mpz_class den = 1;
  den <<= static_cast<unsigned>(diameter);
  return Rational(scaled, den);
}

mpz_class scaled_value(const GridIndex& index, const Distribution& dist, std::size_t x) {
  const int diam = index.dims().diameter();
  mpz_class acc = 0;
  for (std::size_t y = 0; y < index.size(); ++y) {
    if (dist.at(y) == 0) continue;
    mpz_class term = dist.at(y);
    term <<= static_cast<unsigned>(diam - index.distance(x, y));
    acc += term;
  }
  return acc;
}

}  // namespace

Rational ValueMap::min() const {
  if (values.empty()) throw InvalidArgument("empty value map");
  return *std::min_element(values.begin(), values.end());
}

Rational ValueMap::sum() const {
  Rational acc;
  for (const auto& v : values) acc += v;
  return acc;
}

Rational value(const Distribution& dist, const Vertex& x) {
  require_vertex(dist.dims(), x);
  const GridIndex index(dist.dims());
  return over_dyadic(scaled_value(index, dist, index_of(dist.dims(), x)), dist.dims().diameter());
}

ValueMap value_map(const Distribution& dist) {
  const GridIndex index(dist.dims());
  ValueMap out{dist.dims(), {}};
  out.values.reserve(dist.size());
  for (std::size_t x = 0; x < dist.size(); ++x) {
    out.values.push_back(over_dyadic(scaled_value(index, dist, x), dist.dims().diameter()));
  }
  return out;
}

Rational effect(const GridDims& dims, const Vertex& x) {
  return value(Distribution::uniform(dims, 1), x);
}

bool value_effect_identity_check(const Distribution& dist) {
  const GridDims& dims = dist.dims();
  const ValueMap ef = value_map(Distribution::uniform(dims, 1));
  Rational weighted;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist.at(i) != 0) weighted += Rational(dist.at(i)) * ef.values[i];
  }
  return weighted == value_map(dist).sum();
}

Distribution hem(const Distribution& dist) {
  Distribution out = dist;
  for (const Vertex& v : boundary(dist.dims())) out.add(v, 2);
  return out;
}

Rational extra_value(const Distribution& dist, const Vertex& x, const ReachOptions& options) {
  if (!is_k_reachable(dist, MoveRule(2), x, 2, options)) {
    throw PreconditionFailed("extra value is defined only for 2-reachable vertices; " +
                             to_string(x) + " is not");
  }
  return value(dist, x) - Rational(2);
}

Rational region_average(const ValueMap& values, const Region& r) {
  if (r.members.empty()) throw InvalidArgument("region has no members");
  Rational acc;
  for (const Vertex& v : r.members) acc += values[v];
  return acc / Rational(r.N());
}

Rational region_average(const Distribution& dist, const Region& r) {
  return region_average(value_map(dist), r);
}

}  // namespace gridpeb
