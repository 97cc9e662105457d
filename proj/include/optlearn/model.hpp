#pragma once

#include <span>
#include <utility>
#include <vector>

#include "optlearn/errors.hpp"

namespace optlearn::model {

/// Problem data for learning among d alternatives.
///
/// Alternative i pays either pi_low[i] or pi_high[i]; the outside option pays
/// pi0 for sure. sigma[i] is the observation noise while learning about i and
/// c[i] the cost per unit of learning time. b is the shift used by the log
/// transform u = log(b - V); it must exceed the terminal reward everywhere so
/// that b - g(x) > 0 on the closed cube.
struct ProblemSpec {
  std::vector<double> pi_low;
  std::vector<double> pi_high;
  double pi0 = 0.0;
  std::vector<double> sigma;
  std::vector<double> c;
  double b = 0.0;

  int dim() const { return static_cast<int>(pi_high.size()); }

  double max_pi_high() const;

  // Any b above the terminal reward gives an equivalent problem; +1 keeps
  // e^u well scaled.
  static double default_shift(std::span<const double> pi_high);
};

// Returns its argument iff every ProblemSpec invariant holds, otherwise
// throws Error with the violated invariant's code.
const ProblemSpec& validate_spec(const ProblemSpec& spec);

// Terminal reward g(x) = max{ max_i { pi_high[i] x_i + pi_low[i] (1-x_i) }, pi0 }.
double obstacle_g(const ProblemSpec& spec, std::span<const double> x);

// Index of the branch attaining g (0..d-1 = alternative, d = outside option);
// ties resolve to the lowest alternative, outside option last.
int obstacle_branch(const ProblemSpec& spec, std::span<const double> x);

// A priori value bounds (pi0, max_i pi_high[i]).
std::pair<double, double> value_bounds(const ProblemSpec& spec);

// u = log(b - V); requires V < b.
double to_u(const ProblemSpec& spec, double v);
// V = b - e^u.
double from_u(const ProblemSpec& spec, double u);

/// One realized draw of the payoff vector; pi[i] is exactly one of the two
/// levels of alternative i.
struct PayoffRealization {
  std::vector<double> pi;
};

/// Drift/diffusion of the belief coordinate being learned, in x-space.
struct SdeCoeffs {
  double drift;      // 1/time
  double diffusion;  // 1/sqrt(time)
};

// Coefficients of dX_i while alternative i is investigated:
//   drift     = (dpi/sigma^2) x(1-x) (pi_i - pi_low (1-x) - pi_high x)
//   diffusion = (dpi/sigma)   x(1-x)
// with dpi = pi_high[i] - pi_low[i]. Requires x strictly interior.
SdeCoeffs sde_coeffs(const ProblemSpec& spec, std::span<const double> x,
                     const PayoffRealization& pi, int alt);

/// Curvature scale of the value equation: k[i] = (pi_high-pi_low)^2 / (2 sigma^2),
/// entering as a_i(x) = k[i] x^2 (1-x)^2.
struct DiffusionCoeffs {
  std::vector<double> k;

  explicit DiffusionCoeffs(const ProblemSpec& spec);

  double a(int axis, double xi) const {
    const double s = xi * (1.0 - xi);
    return k[static_cast<std::size_t>(axis)] * s * s;
  }
};

}  // namespace optlearn::model
