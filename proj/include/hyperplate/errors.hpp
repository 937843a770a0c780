#pragma once

#include <stdexcept>
#include <string>

namespace hyperplate {

/// Argument outside the domain of an operation (bad dimension, negative radius, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A numerical procedure failed to produce a value: bracket expansion,
/// iteration caps, sign-scan windows.
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Series or ODE evaluation failed. Carries the state reached so far so the
/// caller can see how far the summation got.
class EvaluationError : public SolverError {
public:
  EvaluationError(const std::string& what, double partial_sum, double last_term,
                  long terms)
      : SolverError(what), partial_sum_(partial_sum), last_term_(last_term), terms_(terms) {}

  double partial_sum() const noexcept { return partial_sum_; }
  double last_term() const noexcept { return last_term_; }
  long terms() const noexcept { return terms_; }

private:
  double partial_sum_;
  double last_term_;
  long terms_;
};

/// 𝒦_ν evaluated on top of one of its poles (𝒢₋ vanishes there).
class PoleError : public SolverError {
public:
  PoleError(const std::string& what, double nearest_pole)
      : SolverError(what), nearest_pole_(nearest_pole) {}

  double nearest_pole() const noexcept { return nearest_pole_; }

private:
  double nearest_pole_;
};

}  // namespace hyperplate
