#pragma once

#include <stdexcept>
#include <string>

namespace fclab {

/// Quotient is not finite-dimensional: some variable has no pure-power
/// generator, or truncated elimination hit the degree cap uncertified.
struct NotMPrimary : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotFiniteLength : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Truncated computation did not reproduce the same value at two
/// consecutive truncation degrees within the cap.
struct Unstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FitUnstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotStabilized : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Internal bug trap: a built complex failed the square-zero check.
struct SignError : std::logic_error {
  using std::logic_error::logic_error;
};

struct WindowUnderflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TailNotClosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CacheCorrupt : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed scenario input (maps to CLI exit code 1).
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fclab
