#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "optlearn/errors.hpp"

namespace optlearn {

/// Uniform tensor grid on the closed unit cube. Axis i carries n[i] >= 3
/// nodes at j / (n[i]-1), boundary nodes included. Flat indices enumerate
/// nodes lexicographically by axis index (axis 0 slowest).
class Grid {
 public:
  Grid() = default;
  explicit Grid(std::vector<int> n);

  int dim() const { return static_cast<int>(n_.size()); }
  int extent(int axis) const { return n_[static_cast<std::size_t>(axis)]; }
  double spacing(int axis) const { return h_[static_cast<std::size_t>(axis)]; }
  double max_spacing() const;
  std::size_t node_count() const { return count_; }
  std::size_t stride(int axis) const { return stride_[static_cast<std::size_t>(axis)]; }
  const std::vector<int>& extents() const { return n_; }

  double coord(int axis, int j) const {
    return coords_[static_cast<std::size_t>(axis)][static_cast<std::size_t>(j)];
  }

  int index_along(std::size_t flat, int axis) const {
    return static_cast<int>(flat / stride(axis)) % extent(axis);
  }

  void node_coords(std::size_t flat, std::span<double> out) const;
  std::vector<double> node_coords(std::size_t flat) const;

  std::size_t neighbor(std::size_t flat, int axis, int step) const {
    return flat + static_cast<std::size_t>(step) * stride(axis);
  }

  bool is_boundary(std::size_t flat) const;
  bool is_interior(std::size_t flat) const { return !is_boundary(flat); }

  // Flat index of the node nearest to x (componentwise rounding).
  std::size_t nearest_node(std::span<const double> x) const;

  friend bool operator==(const Grid& a, const Grid& b) { return a.n_ == b.n_; }

 private:
  std::vector<int> n_;
  std::vector<double> h_;
  std::vector<std::size_t> stride_;
  std::vector<std::vector<double>> coords_;
  std::size_t count_ = 0;
};

/// Which coordinates a scalar field lives in: V (currency values) or
/// u = log(b - V).
enum class Space { V, U };

struct ValueField {
  Grid grid;
  Space space = Space::V;
  std::vector<double> values;

  ValueField() = default;
  ValueField(Grid g, Space s, double fill = 0.0)
      : grid(std::move(g)), space(s), values(grid.node_count(), fill) {}
  ValueField(Grid g, Space s, std::vector<double> v)
      : grid(std::move(g)), space(s), values(std::move(v)) {}

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
};

/// Per-node action: code 0 stops, code i in 1..d continues learning
/// alternative i-1.
class Action {
 public:
  Action() = default;
  static Action stop() { return Action(0); }
  static Action continue_learning(int alt) { return Action(alt + 1); }
  static Action from_code(int code) { return Action(code); }

  bool is_stop() const { return code_ == 0; }
  int alternative() const { return code_ - 1; }
  int code() const { return code_; }

  friend bool operator==(Action a, Action b) { return a.code_ == b.code_; }

 private:
  explicit Action(int code) : code_(code) {}
  int code_ = 0;
};

struct PolicyField {
  Grid grid;
  std::vector<Action> actions;

  PolicyField() = default;
  PolicyField(Grid g, std::vector<Action> a)
      : grid(std::move(g)), actions(std::move(a)) {}

  static PolicyField constant(Grid g, Action a) {
    std::vector<Action> acts(g.node_count(), a);
    return PolicyField(std::move(g), std::move(acts));
  }

  Action at_nearest(std::span<const double> x) const {
    return actions[grid.nearest_node(x)];
  }
};

}  // namespace optlearn
