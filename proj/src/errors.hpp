#pragma once

#include <stdexcept>
#include <string>

namespace mlt {

// Bad caller-supplied data: malformed files, invalid parameters, unknown ids.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was broken by the caller.
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// The request falls outside the mathematical domain of the operation,
// e.g. asking for the support of an element the set does not span.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exchange whose success is implied by the solver's invariants failed
// its independence re-check. Never silently swallowed.
class AnomalyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search disproved a bound the solver is built around.
class TheoremViolation : public std::runtime_error {
public:
  TheoremViolation(int degree, int target, int optimum)
      : std::runtime_error("degree " + std::to_string(degree) +
                           ": proven optimum " + std::to_string(optimum) +
                           " is below the required size " +
                           std::to_string(target)),
        degree_(degree), target_(target), optimum_(optimum) {}

  int degree() const { return degree_; }
  int target() const { return target_; }
  int optimum() const { return optimum_; }

private:
  int degree_;
  int target_;
  int optimum_;
};

}  // namespace mlt
