#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "gridpeb/distribution.hpp"
#include "gridpeb/engine.hpp"

namespace gridpeb {

/// FNV-1a 64 over "rows cols c0 c1 ...", as 16 hex digits.
std::string distribution_digest(const Distribution& dist);

/// Hems the distribution, decomposes both the plain and the hemmed version
/// into regions and records every region average, frontier size, the value
/// sum chain  sum v = sum P'(x) ef(x) <= 9|P'|  and the per-instance lemma
/// checks. Rationals are "p/q" strings with an "_approx" double beside them.
///
/// Throws Unsolvable (naming the first unreachable vertex) for unsolvable
/// input.
nlohmann::json certificate(const Distribution& dist, const ReachOptions& options = {});

/// Names of lemma checks that failed in a report.
std::vector<std::string> certificate_violations(const nlohmann::json& report);

struct VerifyResult {
  bool match = false;
  /// JSON pointer of the first differing entry, empty on match.
  std::string first_difference;
};

/// Recomputes the certificate for dist and compares it to stored exactly.
VerifyResult verify_certificate(const nlohmann::json& stored, const Distribution& dist,
                                const ReachOptions& options = {});

}  // namespace gridpeb
