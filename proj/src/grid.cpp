#include "optlearn/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace optlearn {

Grid::Grid(std::vector<int> n) : n_(std::move(n)) {
  if (n_.empty()) fail(Errc::GridTooSmall, "grid needs at least one axis");
  const std::size_t d = n_.size();
  h_.resize(d);
  coords_.resize(d);
  stride_.assign(d, 1);
  count_ = 1;
  for (std::size_t a = 0; a < d; ++a) {
    if (n_[a] < 3) {
      fail(Errc::GridTooSmall,
           "axis " + std::to_string(a) + " needs >= 3 nodes, got " + std::to_string(n_[a]));
    }
    count_ *= static_cast<std::size_t>(n_[a]);
    h_[a] = 1.0 / static_cast<double>(n_[a] - 1);
    coords_[a].resize(static_cast<std::size_t>(n_[a]));
    for (int j = 0; j < n_[a]; ++j) {
      coords_[a][static_cast<std::size_t>(j)] =
          static_cast<double>(j) / static_cast<double>(n_[a] - 1);
    }
  }
  for (std::size_t a = d; a-- > 1;) {
    stride_[a - 1] = stride_[a] * static_cast<std::size_t>(n_[a]);
  }
}

double Grid::max_spacing() const { return *std::max_element(h_.begin(), h_.end()); }

void Grid::node_coords(std::size_t flat, std::span<double> out) const {
  for (int a = 0; a < dim(); ++a) out[static_cast<std::size_t>(a)] = coord(a, index_along(flat, a));
}

std::vector<double> Grid::node_coords(std::size_t flat) const {
  std::vector<double> x(static_cast<std::size_t>(dim()));
  node_coords(flat, x);
  return x;
}

bool Grid::is_boundary(std::size_t flat) const {
  for (int a = 0; a < dim(); ++a) {
    const int j = index_along(flat, a);
    if (j == 0 || j == extent(a) - 1) return true;
  }
  return false;
}

std::size_t Grid::nearest_node(std::span<const double> x) const {
  std::size_t flat = 0;
  for (int a = 0; a < dim(); ++a) {
    const int top = extent(a) - 1;
    long j = std::lround(x[static_cast<std::size_t>(a)] * static_cast<double>(top));
    j = std::clamp(j, 0L, static_cast<long>(top));
    flat += static_cast<std::size_t>(j) * stride(a);
  }
  return flat;
}

}  // namespace optlearn
