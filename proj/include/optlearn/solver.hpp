#pragma once

#include <optional>
#include <string>
#include <vector>

#include "optlearn/grid.hpp"
#include "optlearn/model.hpp"

namespace optlearn::solver {

// Tensor grid over the closed cube; throws GRID_TOO_SMALL below 3 nodes
// per axis.
Grid build_grid(const std::vector<int>& n);

// Per-node residual of the variational inequality in V-space:
//   max{ max_i { a_i(x) D2_i V - c_i }, g(x) - V }
// with a_i(x) = k_i x_i^2 (1-x_i)^2 and D2_i the central second difference.
// At nodes with x_i in {0,1} the coefficient vanishes exactly and the
// stencil along that axis is skipped, so no boundary condition is ever read.
ValueField discrete_residual(const model::ProblemSpec& spec, const ValueField& v);

enum class InitKind { FromObstacle, FromUpper, Given };

struct Init {
  InitKind kind = InitKind::FromObstacle;
  std::optional<ValueField> field;

  static Init from_obstacle() { return {InitKind::FromObstacle, std::nullopt}; }
  static Init from_upper() { return {InitKind::FromUpper, std::nullopt}; }
  static Init given(ValueField f) { return {InitKind::Given, std::move(f)}; }

  const char* tag() const;
};

struct SolveReport {
  long iterations = 0;
  double residual_sup = 0.0;
  double wall_seconds = 0.0;  // diagnostics only; never serialized
  std::string init_tag;
};

/// One damped Jacobi sweep of the projected explicit scheme, shared by the
/// solver, the comparison experiment and the monotonicity tests.
///
/// The update V <- max(V + tau * residual, g) is evaluated branchwise as
///   max_i { (1 - 2 w_i) V_j + w_i (V_j+ + V_j-) - tau c_i },
///   (1 - tau) V_j + tau g_j,  g_j
/// with w_i = tau a_i(x_j) / h_i^2. All weights are nonnegative and
/// 1 - 2 w_i > 0 under the CFL step, so each floating-point operation is
/// monotone in the inputs and one sweep preserves nodewise order bitwise.
class Sweeper {
 public:
  Sweeper(const model::ProblemSpec& spec, const Grid& grid);

  double tau() const { return tau_; }
  const Grid& grid() const { return grid_; }
  const std::vector<double>& obstacle() const { return g_; }
  double upper_start() const { return upper_start_; }

  void sweep(const std::vector<double>& in, std::vector<double>& out) const;

  // Residual of the literal formula; out may alias nothing.
  void residual(const std::vector<double>& in, std::vector<double>& out) const;
  double residual_sup(const std::vector<double>& in) const;

 private:
  Grid grid_;
  std::vector<double> c_;
  std::vector<double> g_;        // obstacle per node
  std::vector<double> w_;        // node-major [node * d + axis], tau a / h^2
  std::vector<double> a_over_h2_;
  double tau_ = 0.0;
  double upper_start_ = 0.0;     // max(max pi_high, pi0)
  int d_ = 0;
};

inline double default_tol(int dim) { return dim <= 1 ? 1e-8 : 1e-6; }
inline constexpr double kDefaultContactTol = 1e-5;
inline constexpr long kDefaultMaxIters = 5'000'000;

// Damped explicit pseudo-time iteration with obstacle projection each sweep;
// stops when the sup-norm residual falls to tol. Throws NO_CONVERGENCE with
// diagnostics after max_iters sweeps.
std::pair<ValueField, SolveReport> solve_value(const model::ProblemSpec& spec,
                                               const Grid& grid, const Init& init,
                                               double tol, long max_iters);

// STOP where V - g <= contact_tol, otherwise the diffusion branch with the
// largest a_i D2_i V - c_i (ties -> lowest alternative).
PolicyField extract_policy(const model::ProblemSpec& spec, const ValueField& v,
                           double contact_tol);

// max over axes and adjacent node pairs of |dV| / h; a lower bound on the
// Lipschitz constant, used as a diagnostic and by the doubling bound.
double lipschitz_estimate(const ValueField& field);

// Nodewise change of variables between V and u = log(b - V).
ValueField to_u_field(const model::ProblemSpec& spec, const ValueField& v);
ValueField from_u_field(const model::ProblemSpec& spec, const ValueField& u);

}  // namespace optlearn::solver
