#pragma once

#include <stdexcept>
#include <string>

namespace conical {

/// Thermodynamically inadmissible state (rho <= 0, e <= 0, negative
/// sound-speed radicand, ...). Signals solver blow-up upstream.
class invalid_state_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degenerate or invalid chart geometry: pole evaluation, non-positive-definite
/// metric (mesh folding), crossing body/outer curves.
class chart_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested coordinate direction is not time-like: the closed-form
/// steady eigenvalues have a vanishing denominator. Callers fall back to the
/// pseudo-time wave speeds.
class degenerate_direction_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated call contract (e.g. an unnormalized direction vector).
class contract_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class solver_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace conical
