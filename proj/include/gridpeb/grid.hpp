#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace gridpeb {

/// Shape of an m x n rectangular grid. Both sides are at least 1.
struct GridDims {
  int rows = 1;
  int cols = 1;

  GridDims() = default;
  GridDims(int rows, int cols);

  std::size_t size() const { return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols); }
  bool is_square() const { return rows == cols; }
  /// Largest distance between two vertices, (m-1)+(n-1).
  int diameter() const { return rows + cols - 2; }
  std::string str() const;

  friend bool operator==(const GridDims&, const GridDims&) = default;
};

/// 0-based (row, col) position; row-major order is the library's canonical
/// vertex order.
struct Vertex {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

bool contains(const GridDims& dims, const Vertex& v);
/// Throws InvalidArgument when v is not a vertex of dims.
void require_vertex(const GridDims& dims, const Vertex& v);

std::size_t index_of(const GridDims& dims, const Vertex& v);
Vertex vertex_at(const GridDims& dims, std::size_t index);

/// Graph distance; on a grid this is the L1 distance.
int distance(const GridDims& dims, const Vertex& a, const Vertex& b);

/// In-bounds orthogonal neighbors in the order up, left, right, down.
std::vector<Vertex> neighbors(const GridDims& dims, const Vertex& v);

bool on_boundary(const GridDims& dims, const Vertex& v);
/// All boundary vertices in row-major order.
std::vector<Vertex> boundary(const GridDims& dims);

/// Automorphisms of the grid as vertex-index permutations: perm[i] is the
/// image of vertex i. Identity first. Four elements for rectangles (identity,
/// both flips, half turn), eight for squares.
std::vector<std::vector<std::size_t>> symmetry_permutations(const GridDims& dims);

/// Precomputed adjacency and distance tables for one grid, used on hot paths
/// (reachability search, potentials).
class GridIndex {
public:
  explicit GridIndex(const GridDims& dims);

  const GridDims& dims() const { return dims_; }
  std::size_t size() const { return dims_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  int distance(std::size_t a, std::size_t b) const { return distance_[a * size() + b]; }

private:
  GridDims dims_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<int> distance_;
};

}  // namespace gridpeb
