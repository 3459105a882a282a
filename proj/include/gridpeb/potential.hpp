#pragma once

#include <vector>

#include "gridpeb/distribution.hpp"
#include "gridpeb/rational.hpp"
#include "gridpeb/regions.hpp"

namespace gridpeb {

/// One exact dyadic value per vertex, row-major.
struct ValueMap {
  GridDims dims;
  std::vector<Rational> values;

  const Rational& operator[](const Vertex& v) const { return values[index_of(dims, v)]; }
  Rational min() const;
  Rational sum() const;
};

/// v(x) = sum_y P(y) 2^{-d(x,y)}.
Rational value(const Distribution& dist, const Vertex& x);
ValueMap value_map(const Distribution& dist);

/// ef(x) = sum_y 2^{-d(x,y)} over every vertex y of the grid.
Rational effect(const GridDims& dims, const Vertex& x);

/// Checks sum_x P(x) ef(x) == sum_x v(x) exactly.
bool value_effect_identity_check(const Distribution& dist);

/// P plus two pebbles on every boundary vertex.
Distribution hem(const Distribution& dist);

/// e(x) = v(x) - 2. Throws PreconditionFailed unless x is 2-reachable.
Rational extra_value(const Distribution& dist, const Vertex& x, const ReachOptions& options = {});

/// Mean value over the members of r.
Rational region_average(const Distribution& dist, const Region& r);
Rational region_average(const ValueMap& values, const Region& r);

}  // namespace gridpeb
