#pragma once

#include <span>
#include <vector>

#include "optlearn/model.hpp"

namespace optlearn::hjb {

/// Symmetric d x d matrix stored as its lower triangle; reads mirror across
/// the diagonal so the stored object cannot become asymmetric.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int d);
  static SymMatrix diagonal(std::span<const double> diag);

  int dim() const { return d_; }

  double operator()(int i, int j) const { return tri_[pack(i, j)]; }
  void set(int i, int j, double value) { tri_[pack(i, j)] = value; }
  double diag(int i) const { return tri_[pack(i, i)]; }

 private:
  std::size_t pack(int i, int j) const;
  int d_ = 0;
  std::vector<double> tri_;  // row-major lower triangle
};

/// Second-order jet (x, r, p, A) at a strictly interior point.
struct Jet {
  std::vector<double> x;
  double r = 0.0;
  std::vector<double> p;
  SymMatrix a;

  Jet() = default;
  Jet(std::vector<double> x_, double r_, std::vector<double> p_, SymMatrix a_);
};

/// Value of the transformed operator together with the branch attaining it:
/// branch in [0, d) names a diffusion branch, branch == d the obstacle
/// branch. Ties resolve to the lowest alternative, obstacle branch last.
struct FEval {
  double value = 0.0;
  int branch = 0;
};

// F(x,r,p,A) = max{ max_i { -x_i^2(1-x_i)^2 (A_ii - p_i^2) - c_i e^-r },
//                   1 - (b - g(x)) e^-r }.
// Unit diffusion scale: the k_i of the general value equation enter only
// the V-space solver, not this operator.
FEval eval_F(const model::ProblemSpec& spec, const Jet& jet);

/// Log barrier Phi(x) = -sum_i { log x_i + log(1-x_i) } with first and
/// second derivatives (the Hessian is diagonal).
struct PhiEval {
  double value = 0.0;
  std::vector<double> grad;
  std::vector<double> hess_diag;
};

// Requires x strictly interior (throws BARRIER_DOMAIN otherwise).
PhiEval eval_Phi(std::span<const double> x);

// f_eps(x,p) = -eps((1-x)^2 + x^2) + eps^2 (1-2x)^2 + 2 eps x(1-x)(2x-1) p.
// eps may carry either sign (F_{-eps} uses f_{-eps}).
double eval_f_eps(double eps, double xi, double pi);

// Barrier-modified operator with the value variable frozen at r_frozen:
// every diffusion branch of F gains f_eps(x_i, p_i); the obstacle branch is
// unchanged.
FEval eval_F_eps(const model::ProblemSpec& spec, double eps,
                 std::span<const double> x, std::span<const double> p,
                 const SymMatrix& a, double r_frozen);

// Monotonicity constant of F in r on r' <= r <= R:
//   theta = e^-R min{ min_i c_i, b - max(max_i pi_high, pi0) },
// a mean-value bound on e^-r' - e^-r combined with the smallest positive
// coefficient multiplying it across branches (the min of b - g over the
// cube sits at a corner since g is convex piecewise affine).
double theta_monotonicity(const model::ProblemSpec& spec, double R);

}  // namespace optlearn::hjb
