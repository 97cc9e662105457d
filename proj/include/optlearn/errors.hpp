#pragma once

#include <stdexcept>
#include <string>

namespace optlearn {

// Stable machine-readable failure codes. CLI maps these onto exit codes,
// the Python bindings map them onto ValueError/RuntimeError.
enum class Errc {
  PayoffLevelsNotOrdered,   // pi_low[i] >= pi_high[i]
  NonpositiveOutsideOption, // pi0 <= 0
  NonpositiveNoise,         // sigma[i] <= 0
  NonpositiveCost,          // c[i] <= 0
  ShiftTooSmall,            // b <= max pi_high (or b <= pi0): b - g may vanish
  SizeMismatch,             // per-alternative arrays disagree on d
  EmptySpec,                // d == 0
  Domain,                   // to_u with V >= b, x0 outside (0,1)^d, ...
  BarrierDomain,            // log barrier evaluated at a boundary point
  GridTooSmall,             // n[i] < 3
  SpaceMismatch,            // field passed in the wrong space (V vs u)
  GridMismatch,             // operands live on different grids
  NoConvergence,            // solver hit max_iters
  PairSearchTooLarge,       // doubling search exceeds the pair budget
  ParseError,               // malformed config / CSV
  ValidationError,          // config semantically invalid
  DependencyError,          // command needs artifacts another command writes
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace optlearn
