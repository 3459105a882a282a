#include "gridpeb/grid.hpp"

#include <cstdlib>

#include "gridpeb/error.hpp"

namespace gridpeb {

GridDims::GridDims(int rows, int cols) : rows(rows), cols(cols) {
  if (rows < 1 || cols < 1) {
    throw InvalidArgument("grid dimensions must be positive, got " + std::to_string(rows) + "x" +
                          std::to_string(cols));
  }
}

std::string GridDims::str() const { return std::to_string(rows) + "x" + std::to_string(cols); }

std::string to_string(const Vertex& v) {
  return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

bool contains(const GridDims& dims, const Vertex& v) {
  return v.row >= 0 && v.row < dims.rows && v.col >= 0 && v.col < dims.cols;
}

void require_vertex(const GridDims& dims, const Vertex& v) {
  if (!contains(dims, v)) {
    throw InvalidArgument("vertex " + to_string(v) + " is outside the " + dims.str() + " grid");
  }
}

std::size_t index_of(const GridDims& dims, const Vertex& v) {
  return static_cast<std::size_t>(v.row) * static_cast<std::size_t>(dims.cols) +
         static_cast<std::size_t>(v.col);
}

Vertex vertex_at(const GridDims& dims, std::size_t index) {
  const auto cols = static_cast<std::size_t>(dims.cols);
  return {static_cast<int>(index / cols), static_cast<int>(index % cols)};
}

int distance(const GridDims& dims, const Vertex& a, const Vertex& b) {
  require_vertex(dims, a);
  require_vertex(dims, b);
  return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

std::vector<Vertex> neighbors(const GridDims& dims, const Vertex& v) {
  require_vertex(dims, v);
  std::vector<Vertex> out;
  out.reserve(4);
  constexpr std::array<std::array<int, 2>, 4> kSteps{{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}};
  for (const auto& [dr, dc] : kSteps) {
    const Vertex w{v.row + dr, v.col + dc};
    if (contains(dims, w)) out.push_back(w);
  }
  return out;
}

bool on_boundary(const GridDims& dims, const Vertex& v) {
  return v.row == 0 || v.col == 0 || v.row == dims.rows - 1 || v.col == dims.cols - 1;
}

std::vector<Vertex> boundary(const GridDims& dims) {
  std::vector<Vertex> out;
  for (int r = 0; r < dims.rows; ++r) {
    for (int c = 0; c < dims.cols; ++c) {
      if (on_boundary(dims, {r, c})) out.push_back({r, c});
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> symmetry_permutations(const GridDims& dims) {
  const int m = dims.rows;
  const int n = dims.cols;
  using Map = Vertex (*)(int, int, int, int);
  std::vector<Map> maps = {
      [](int r, int c, int, int) { return Vertex{r, c}; },
      [](int r, int c, int m, int) { return Vertex{m - 1 - r, c}; },
      [](int r, int c, int, int n) { return Vertex{r, n - 1 - c}; },
      [](int r, int c, int m, int n) { return Vertex{m - 1 - r, n - 1 - c}; },
  };
  if (dims.is_square()) {
    maps.push_back([](int r, int c, int, int) { return Vertex{c, r}; });
    maps.push_back([](int r, int c, int m, int) { return Vertex{m - 1 - c, m - 1 - r}; });
    maps.push_back([](int r, int c, int m, int) { return Vertex{c, m - 1 - r}; });
    maps.push_back([](int r, int c, int m, int) { return Vertex{m - 1 - c, r}; });
  }
  std::vector<std::vector<std::size_t>> perms;
  perms.reserve(maps.size());
  for (Map f : maps) {
    std::vector<std::size_t> perm(dims.size());
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) perm[index_of(dims, {r, c})] = index_of(dims, f(r, c, m, n));
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

GridIndex::GridIndex(const GridDims& dims) : dims_(dims), adjacency_(dims.size()) {
  const std::size_t n = dims.size();
  distance_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Vertex va = vertex_at(dims, a);
    for (const Vertex& w : gridpeb::neighbors(dims, va)) adjacency_[a].push_back(index_of(dims, w));
    for (std::size_t b = 0; b < n; ++b) {
      const Vertex vb = vertex_at(dims, b);
      distance_[a * n + b] = std::abs(va.row - vb.row) + std::abs(va.col - vb.col);
    }
  }
}

}  // namespace gridpeb
