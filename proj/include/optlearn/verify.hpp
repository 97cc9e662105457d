#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "optlearn/grid.hpp"
#include "optlearn/model.hpp"
#include "optlearn/solver.hpp"

namespace optlearn::verify {

/// Structured results of one verification experiment.
struct VerifyReport {
  std::string experiment;
  bool pass = false;
  std::map<std::string, double> metrics;        // extremal values, counts
  std::vector<std::size_t> violating_nodes;     // capped at kViolationCap
  std::size_t violation_count = 0;              // uncapped
};

inline constexpr std::size_t kViolationCap = 100;

/// Barrier-modified field u - eps*Phi (or v + eps*Phi), defined at strictly
/// interior nodes only; Phi diverges on the boundary.
struct BarrierField {
  ValueField base;  // u-space
  double eps = 0.0;
  std::vector<double> interior_values;      // indexed against interior_nodes
  std::vector<std::size_t> interior_nodes;  // flat indices, ascending
};

// (u - eps*Phi, v + eps*Phi); fields must share a grid and be in u-space.
std::pair<BarrierField, BarrierField> make_barrier_fields(const ValueField& u,
                                                          const ValueField& v,
                                                          double eps);

struct DoublingResult {
  double alpha = 0.0;
  double eps = 0.0;
  std::vector<double> x_star;
  std::vector<double> y_star;
  double value = 0.0;         // M_{alpha,eps}
  double separation = 0.0;    // |x* - y*|
  double lhs = 0.0;           // alpha |x* - y*|
  double lip_u = 0.0;         // lipschitz_estimate of the base fields
  double lip_v = 0.0;
  double rhs = 0.0;           // 2 max{lip_u, lip_v} + 2 alpha h
  bool bound_holds = false;
  double diagonal_max = 0.0;  // max_x { u_eps(x) - v_eps(x) }
};

// Exhaustive search over interior node pairs of
//   u_eps(x) - v_eps(y) - (alpha/2) |x - y|^2,
// ties resolving to the lexicographically smallest pair. The reported bound
// is the doubling estimate with discrete slack 2 alpha h covering grid
// quantization of the true maximizer. Throws PAIR_SEARCH_TOO_LARGE when the
// pair count exceeds pair_budget.
DoublingResult doubling_maximize(const BarrierField& u_eps, const BarrierField& v_eps,
                                 double alpha, std::size_t pair_budget = 100'000'000);

enum class Side { Sub, Super };

// Sign of the discrete F-residual (eval_F on central-difference jets) at
// interior nodes: Sub passes iff F <= tol_sign everywhere, Super iff
// F >= -tol_sign. When exclude_kinks is set, nodes where the obstacle
// attains its max in two or more branches within h*Lip(g) are skipped
// (second differences of g blow up there).
VerifyReport check_residual_sign(const model::ProblemSpec& spec, const ValueField& u,
                                 Side side, double tol_sign, bool exclude_kinks = false);

struct ComparisonReport {
  long sweeps = 0;
  double final_sup_distance = 0.0;
  double tol = 0.0;
  std::size_t order_violations = 0;    // V-space, bitwise, across all sweeps
  std::size_t u_order_violations = 0;  // u-space at the final sweep
  bool converged = false;
  bool pass = false;
  ValueField lower;  // from-obstacle solve (V-space)
  ValueField upper;  // from-upper solve (V-space)
};

// Runs the projected sweeps from the obstacle and from the upper bound in
// lockstep, asserting the nodewise ordering at every sweep, then checks the
// final sup-distance against 10*tol and re-asserts the (flipped) ordering in
// u-space. This is the discrete shadow of the comparison theorem.
ComparisonReport comparison_experiment(const model::ProblemSpec& spec, const Grid& grid,
                                       double tol, long max_iters);

VerifyReport comparison_report(const ComparisonReport& r);

// Samples theta-monotonicity: theta (r - r') <= F(x,r,p,A) - F(x,r',p,A)
// over random jets with r' <= r <= R. Zero violations expected.
VerifyReport sample_theta_monotonicity(const model::ProblemSpec& spec, double R,
                                       long samples, std::uint64_t seed);

// Samples the exact identity F_eps(x, p - eps DPhi, A - eps D2Phi; r) =
// F(x, r, p, A) over random interior jets and the given eps ladder.
VerifyReport sample_barrier_identity(const model::ProblemSpec& spec,
                                     const std::vector<double>& eps_ladder,
                                     long samples, std::uint64_t seed,
                                     double rel_tol = 1e-12);

}  // namespace optlearn::verify
