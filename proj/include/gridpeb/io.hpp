#pragma once

#include <string>

#include <json.hpp>

#include "gridpeb/distribution.hpp"
#include "gridpeb/rational.hpp"

namespace gridpeb {

/// Reads a whole file, or standard input when path is "-".
std::string read_input(const std::string& path);

/// {"rows": m, "cols": n, "pebbles": [[...], ...]}
Distribution distribution_from_json(const nlohmann::json& j);
nlohmann::json distribution_to_json(const Distribution& dist);

/// Whitespace separated non-negative integers, one grid row per line. Blank
/// lines and '#' comments are ignored.
Distribution distribution_from_ascii(const std::string& text);
std::string distribution_to_ascii(const Distribution& dist);

/// Detects the format: JSON when the first non-blank character is '{'.
Distribution parse_distribution(const std::string& text);

/// "MxN", e.g. "3x4".
GridDims parse_dims(const std::string& text);
/// "r,c", zero-based.
Vertex parse_vertex(const std::string& text);

/// Stores r as "p/q" under key and a double under key + "_approx".
void put_rational(nlohmann::json& obj, const std::string& key, const Rational& r);

}  // namespace gridpeb
