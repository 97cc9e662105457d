#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "optlearn/grid.hpp"
#include "optlearn/model.hpp"
#include "optlearn/rng.hpp"

namespace optlearn::sim {

// Beliefs are stored in log-odds z = log(x / (1-x)), so x = 1/(1+e^-z)
// stays strictly inside (0,1) for any finite z; the underlying process never
// reaches the boundary in finite time and the discretization should not
// either. |z| is capped at kLogOddsCap, beyond which motion of that
// coordinate is numerically zero; clamps are counted and reported.
inline constexpr double kLogOddsCap = 40.0;

struct BeliefState {
  std::vector<double> z;           // log-odds per alternative
  std::vector<double> learn_time;  // accumulated T_i
  double t = 0.0;                  // elapsed time

  static BeliefState from_belief(std::span<const double> x0);

  double belief(int i) const;
  double counter_belief(int i) const;  // 1 - x_i, computed stably
  std::vector<double> beliefs() const;
};

// Independent two-point draws with P(pi_i = pi_high[i]) = x0_i.
model::PayoffRealization sample_prior(const model::ProblemSpec& spec,
                                      std::span<const double> x0, Rng& rng);

// One Euler-Maruyama step of the belief SDE in log-odds coordinates; only
// coordinate `alt` moves. The z-space coefficients are the chain-rule images
// of sde_coeffs, simplified exactly:
//   drift_z = (rho/sigma)(pi - pi_low(1-x) - pi_high x) - rho^2 (1-2x)/2
//   diff_z  = rho,  rho = (pi_high - pi_low)/sigma,
// which stay finite at the log-odds cap where the x-space quotients would
// degenerate to 0/0. Returns the number of cap clamps (0 or 1).
int step_belief(const model::ProblemSpec& spec, BeliefState& state, int alt,
                double dt, const model::PayoffRealization& pi, Rng& rng);

struct EpisodeResult {
  double payoff = 0.0;  // g(x_tau) - sum_i c_i T_i
  double stop_time = 0.0;
  std::vector<double> learn_time;
  std::vector<double> terminal_belief;
  bool truncated = false;
  int saturations = 0;
};

// Draws the payoff realization from the prior, then alternates nearest-node
// policy lookups with belief steps until the policy stops or t reaches
// t_max (forced stop, flagged as truncated).
EpisodeResult run_episode(const model::ProblemSpec& spec, const PolicyField& policy,
                          std::span<const double> x0, double dt, double t_max,
                          Rng& rng);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample std / sqrt(paths)
  long paths = 0;
  std::uint64_t seed = 0;
};

// Episodes are embarrassingly parallel; path j draws from its own
// (seed, j)-derived stream and aggregation is a fixed-order pairwise
// reduction, so results are bitwise reproducible for any worker count.
std::vector<EpisodeResult> run_batch(const model::ProblemSpec& spec,
                                     const PolicyField& policy,
                                     std::span<const double> x0, long paths,
                                     double dt, double t_max, std::uint64_t seed);

McEstimate estimate_value_mc(const model::ProblemSpec& spec, const PolicyField& policy,
                             std::span<const double> x0, long paths, double dt,
                             double t_max, std::uint64_t seed);

// Mean terminal belief X_alt(t_max) under always-continue learning of `alt`;
// the prior-averaged belief is a martingale, so this estimates x0[alt].
McEstimate estimate_terminal_belief_mc(const model::ProblemSpec& spec, int alt,
                                       std::span<const double> x0, long paths,
                                       double dt, double t_max, std::uint64_t seed);

McEstimate summarize(std::span<const double> samples, std::uint64_t seed);

double default_dt(const model::ProblemSpec& spec);     // 1e-3 / max_i k_i
double default_t_max(const model::ProblemSpec& spec);  // 50 / min_i k_i

}  // namespace optlearn::sim
