#include "optlearn/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace optlearn {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::PayoffLevelsNotOrdered: return "PAYOFF_LEVELS_NOT_ORDERED";
    case Errc::NonpositiveOutsideOption: return "NONPOSITIVE_OUTSIDE_OPTION";
    case Errc::NonpositiveNoise: return "NONPOSITIVE_NOISE";
    case Errc::NonpositiveCost: return "NONPOSITIVE_COST";
    case Errc::ShiftTooSmall: return "SHIFT_TOO_SMALL";
    case Errc::SizeMismatch: return "SIZE_MISMATCH";
    case Errc::EmptySpec: return "EMPTY_SPEC";
    case Errc::Domain: return "DOMAIN";
    case Errc::BarrierDomain: return "BARRIER_DOMAIN";
    case Errc::GridTooSmall: return "GRID_TOO_SMALL";
    case Errc::SpaceMismatch: return "SPACE_MISMATCH";
    case Errc::GridMismatch: return "GRID_MISMATCH";
    case Errc::NoConvergence: return "NO_CONVERGENCE";
    case Errc::PairSearchTooLarge: return "PAIR_SEARCH_TOO_LARGE";
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::ValidationError: return "VALIDATION_ERROR";
    case Errc::DependencyError: return "DEPENDENCY_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace optlearn

namespace optlearn::model {

double ProblemSpec::max_pi_high() const {
  return *std::max_element(pi_high.begin(), pi_high.end());
}

double ProblemSpec::default_shift(std::span<const double> pi_high) {
  return *std::max_element(pi_high.begin(), pi_high.end()) + 1.0;
}

const ProblemSpec& validate_spec(const ProblemSpec& spec) {
  const std::size_t d = spec.pi_high.size();
  if (d == 0) fail(Errc::EmptySpec, "at least one alternative required");
  if (spec.pi_low.size() != d || spec.sigma.size() != d || spec.c.size() != d) {
    fail(Errc::SizeMismatch, "pi_low/pi_high/sigma/c must share length d=" +
                                 std::to_string(d));
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!(spec.pi_low[i] < spec.pi_high[i])) {
      fail(Errc::PayoffLevelsNotOrdered,
           "pi_low[" + std::to_string(i) + "] must be < pi_high[" + std::to_string(i) + "]");
    }
    if (!(spec.sigma[i] > 0.0)) {
      fail(Errc::NonpositiveNoise, "sigma[" + std::to_string(i) + "] must be > 0");
    }
    if (!(spec.c[i] > 0.0)) {
      fail(Errc::NonpositiveCost, "c[" + std::to_string(i) + "] must be > 0");
    }
  }
  if (!(spec.pi0 > 0.0)) {
    fail(Errc::NonpositiveOutsideOption, "pi0 must be > 0");
  }
  // b - g(x) > 0 on the closed cube needs b above every obstacle branch,
  // the outside option included.
  if (!(spec.b > spec.max_pi_high())) {
    fail(Errc::ShiftTooSmall, "b must exceed max_i pi_high");
  }
  if (!(spec.b > spec.pi0)) {
    fail(Errc::ShiftTooSmall, "b must exceed pi0");
  }
  return spec;
}

double obstacle_g(const ProblemSpec& spec, std::span<const double> x) {
  double best = spec.pi0;
  const std::size_t d = spec.pi_high.size();
  for (std::size_t i = 0; i < d; ++i) {
    const double v = spec.pi_high[i] * x[i] + spec.pi_low[i] * (1.0 - x[i]);
    if (v > best) best = v;
  }
  return best;
}

int obstacle_branch(const ProblemSpec& spec, std::span<const double> x) {
  const int d = spec.dim();
  int branch = 0;
  double best = spec.pi_high[0] * x[0] + spec.pi_low[0] * (1.0 - x[0]);
  for (int i = 1; i < d; ++i) {
    const std::size_t u = static_cast<std::size_t>(i);
    const double v = spec.pi_high[u] * x[u] + spec.pi_low[u] * (1.0 - x[u]);
    if (v > best) {
      best = v;
      branch = i;
    }
  }
  if (spec.pi0 > best) branch = d;
  return branch;
}

std::pair<double, double> value_bounds(const ProblemSpec& spec) {
  return {spec.pi0, spec.max_pi_high()};
}

double to_u(const ProblemSpec& spec, double v) {
  if (!(v < spec.b)) fail(Errc::Domain, "to_u requires V < b");
  return std::log(spec.b - v);
}

double from_u(const ProblemSpec& spec, double u) { return spec.b - std::exp(u); }

SdeCoeffs sde_coeffs(const ProblemSpec& spec, std::span<const double> x,
                     const PayoffRealization& pi, int alt) {
  const std::size_t i = static_cast<std::size_t>(alt);
  const double xi = x[i];
  if (!(xi > 0.0 && xi < 1.0)) fail(Errc::Domain, "sde_coeffs requires x interior");
  const double dpi = spec.pi_high[i] - spec.pi_low[i];
  const double s = xi * (1.0 - xi);
  const double excess = pi.pi[i] - spec.pi_low[i] * (1.0 - xi) - spec.pi_high[i] * xi;
  return {dpi / (spec.sigma[i] * spec.sigma[i]) * s * excess,
          dpi / spec.sigma[i] * s};
}

DiffusionCoeffs::DiffusionCoeffs(const ProblemSpec& spec) {
  const std::size_t d = spec.pi_high.size();
  k.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double dpi = spec.pi_high[i] - spec.pi_low[i];
    k[i] = dpi * dpi / (2.0 * spec.sigma[i] * spec.sigma[i]);
  }
}

}  // namespace optlearn::model
