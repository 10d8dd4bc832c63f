#pragma once

#include <stdexcept>
#include <string>

namespace effkit {

// Malformed input (bad polynomial text, inconsistent dimensions, ...).
struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A documented precondition does not hold for the given data.
struct PreconditionViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// An internal guarantee failed; this is a bug or a falsified constant pack.
struct DefectError : std::logic_error {
  using std::logic_error::logic_error;
};

// A bounded search ran out of budget without an answer.
struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Values that are not of the required rational form.
struct NotRepresentable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Loher-Masser bound requested at degree 1, where its log d factor vanishes.
struct DegreeOne : std::domain_error {
  using std::domain_error::domain_error;
};

inline void expects(bool cond, const std::string& what) {
  if (!cond) throw PreconditionViolation(what);
}

inline void ensures(bool cond, const std::string& what) {
  if (!cond) throw DefectError(what);
}

}  // namespace effkit
