#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "optlearn/model.hpp"

namespace optlearn::cli {

struct SolverConfig {
  std::string init = "from_obstacle";  // from_obstacle | from_upper
  std::optional<double> tol;           // default 1e-8 (d=1) / 1e-6 (d>=2)
  long max_iters = 5'000'000;
  double contact_tol = 1e-5;
};

struct SimulatorConfig {
  long paths = 10'000;
  std::optional<double> dt;     // default 1e-3 / max_i k_i
  std::optional<double> t_max;  // default 50 / min_i k_i
  std::uint64_t seed = 1;
  std::vector<double> x0;       // default (0.5, ..., 0.5)
  std::string policy = "from_solver";  // from_solver | stop
  bool dump_episodes = false;
};

struct VerifyConfig {
  std::vector<double> alpha = {1.0, 10.0, 100.0, 1000.0};
  std::vector<double> eps = {1e-1, 1e-2, 1e-3};
  std::size_t pair_budget = 100'000'000;
  long samples = 100'000;  // jets per sampled operator check
};

struct RunConfig {
  model::ProblemSpec spec;
  std::vector<int> n;  // grid extents; default 201 (d=1) / 51 per axis
  SolverConfig solver;
  SimulatorConfig simulator;
  VerifyConfig verify;
  std::string out_dir = "out";
};

// Flat key-value text with [section] headers, '#'/';' comments and
// comma-separated arrays. Unknown sections or keys are rejected
// (PARSE_ERROR with line info); semantic violations surface as
// VALIDATION_ERROR naming the field.
RunConfig load_config(const std::string& path);
RunConfig parse_config(std::istream& is, const std::string& origin);

}  // namespace optlearn::cli
