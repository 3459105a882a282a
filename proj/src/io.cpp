#include "gridpeb/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "gridpeb/error.hpp"

namespace gridpeb {

namespace {

int parse_int(std::string_view s, const std::string& what) {
  int value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw InvalidArgument("cannot read " + what + " from '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Distribution distribution_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("distribution must be a JSON object");
  for (const char* key : {"rows", "cols", "pebbles"}) {
    if (!j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  }
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
    throw InvalidArgument("rows and cols must be integers");
  }
  const GridDims dims(j["rows"].get<int>(), j["cols"].get<int>());
  const auto& rows = j["pebbles"];
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dims.rows)) {
    throw InvalidArgument("pebbles must be an array of " + std::to_string(dims.rows) + " rows");
  }
  std::vector<int> counts;
  counts.reserve(dims.size());
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dims.cols)) {
      throw InvalidArgument("every pebbles row must have " + std::to_string(dims.cols) + " entries");
    }
    for (const auto& c : row) {
      if (!c.is_number_integer() || c.get<long long>() < 0 || c.get<long long>() > 1'000'000) {
        throw InvalidArgument("pebble counts must be non-negative integers");
      }
      counts.push_back(c.get<int>());
    }
  }
  return Distribution(dims, std::move(counts));
}

nlohmann::json distribution_to_json(const Distribution& dist) {
  const GridDims& dims = dist.dims();
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < dims.rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < dims.cols; ++c) row.push_back(dist[{r, c}]);
    rows.push_back(row);
  }
  return {{"rows", dims.rows}, {"cols", dims.cols}, {"pebbles", rows}};
}

Distribution distribution_from_ascii(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<int> row;
    std::string tok;
    while (tokens >> tok) {
      const int c = parse_int(tok, "a pebble count");
      if (c < 0) throw InvalidArgument("pebble counts must be non-negative, got " + tok);
      row.push_back(c);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidArgument("no grid rows found");
  const std::size_t cols = rows.front().size();
  std::vector<int> counts;
  for (const auto& row : rows) {
    if (row.size() != cols) throw InvalidArgument("grid rows have different lengths");
    counts.insert(counts.end(), row.begin(), row.end());
  }
  return Distribution(GridDims(static_cast<int>(rows.size()), static_cast<int>(cols)), std::move(counts));
}

std::string distribution_to_ascii(const Distribution& dist) { return dist.str(); }

Distribution parse_distribution(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InvalidArgument("empty input");
  if (text[first] != '{') return distribution_from_ascii(text);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  return distribution_from_json(j);
}

GridDims parse_dims(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw InvalidArgument("grid size must look like MxN, got '" + text + "'");
  return GridDims(parse_int(std::string_view(text).substr(0, x), "rows"),
                  parse_int(std::string_view(text).substr(x + 1), "cols"));
}

Vertex parse_vertex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidArgument("vertex must look like r,c, got '" + text + "'");
  return {parse_int(std::string_view(text).substr(0, comma), "row"),
          parse_int(std::string_view(text).substr(comma + 1), "column")};
}

void put_rational(nlohmann::json& obj, const std::string& key, const Rational& r) {
  obj[key] = r.str();
  obj[key + "_approx"] = r.approx();
}

}  // namespace gridpeb
