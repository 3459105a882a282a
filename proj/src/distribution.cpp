#include "gridpeb/distribution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gridpeb/error.hpp"

namespace gridpeb {

Distribution::Distribution(const GridDims& dims) : dims_(dims), counts_(dims.size(), 0) {}

Distribution::Distribution(const GridDims& dims, std::vector<int> counts)
    : dims_(dims), counts_(std::move(counts)) {
  if (counts_.size() != dims_.size()) {
    throw InvalidArgument("distribution has " + std::to_string(counts_.size()) +
                          " entries, grid " + dims_.str() + " needs " +
                          std::to_string(dims_.size()));
  }
  for (int c : counts_) {
    if (c < 0) throw InvalidArgument("pebble counts must be non-negative");
  }
}

Distribution::Distribution(const GridDims& dims,
                           std::initializer_list<std::pair<Vertex, int>> pebbles)
    : Distribution(dims) {
  for (const auto& [v, c] : pebbles) add(v, c);
}

Distribution Distribution::uniform(const GridDims& dims, int per_vertex) {
  return Distribution(dims, std::vector<int>(dims.size(), per_vertex));
}

int Distribution::operator[](const Vertex& v) const {
  require_vertex(dims_, v);
  return counts_[index_of(dims_, v)];
}

void Distribution::set(const Vertex& v, int count) {
  require_vertex(dims_, v);
  if (count < 0) throw InvalidArgument("pebble counts must be non-negative");
  counts_[index_of(dims_, v)] = count;
}

void Distribution::add(const Vertex& v, int delta) {
  require_vertex(dims_, v);
  int& c = counts_[index_of(dims_, v)];
  if (c + delta < 0) throw InvalidArgument("pebble count at " + to_string(v) + " would go negative");
  c += delta;
}

long Distribution::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0L);
}

std::vector<Vertex> Distribution::unoccupied() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) out.push_back(vertex_at(dims_, i));
  }
  return out;
}

bool Distribution::dominates(const Distribution& other) const {
  if (!(dims_ == other.dims_)) return false;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < other.counts_[i]) return false;
  }
  return true;
}

std::string Distribution::str() const {
  std::ostringstream os;
  for (int r = 0; r < dims_.rows; ++r) {
    for (int c = 0; c < dims_.cols; ++c) {
      if (c) os << ' ';
      os << counts_[index_of(dims_, {r, c})];
    }
    os << '\n';
  }
  return os.str();
}

bool is_canonical_counts(std::span<const int> counts,
                         const std::vector<std::vector<std::size_t>>& perms) {
  // image[perm[i]] = counts[i]; compare image against counts lexicographically
  const std::size_t n = counts.size();
  std::vector<int> image(n);
  for (std::size_t g = 1; g < perms.size(); ++g) {
    for (std::size_t i = 0; i < n; ++i) image[perms[g][i]] = counts[i];
    for (std::size_t i = 0; i < n; ++i) {
      if (image[i] != counts[i]) {
        if (image[i] > counts[i]) return false;
        break;
      }
    }
  }
  return true;
}

Distribution canonicalize(const GridDims& dims, const Distribution& dist) {
  if (!(dist.dims() == dims)) throw InvalidArgument("distribution is not defined on " + dims.str());
  const auto perms = symmetry_permutations(dims);
  std::vector<int> best(dist.counts().begin(), dist.counts().end());
  std::vector<int> image(best.size());
  for (const auto& perm : perms) {
    for (std::size_t i = 0; i < image.size(); ++i) image[perm[i]] = dist.at(i);
    if (std::lexicographical_compare(best.begin(), best.end(), image.begin(), image.end())) {
      best = image;
    }
  }
  return Distribution(dims, std::move(best));
}

bool is_canonical(const Distribution& dist) {
  return is_canonical_counts(dist.counts(), symmetry_permutations(dist.dims()));
}

}  // namespace gridpeb
