#pragma once

#include <stdexcept>
#include <string>

namespace riemann {

// Every failure raised by the library derives from Error so callers can
// catch the family once. The subclasses mirror the failure kinds that the
// numeric routines can report.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (x <= 1 for Li,
// rho on the real axis, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature, extrapolation or series failed to reach tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Evaluation requested at (or numerically on top of) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Evaluation too close to a zero or pole for a log-derivative or continuation.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Point outside the box where the zeta evaluator is validated.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

// Continuation step had to shrink below the admissible minimum.
class StepCollapseError : public Error {
 public:
  using Error::Error;
};

// A measured branch jump was not constant along its segment.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// Zero-count certification mismatch between scan and argument principle.
class CertificationError : public Error {
 public:
  using Error::Error;
};

// Malformed zero table or other textual input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OrderError : public Error {
 public:
  OrderError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A loaded ordinate failed the |zeta(1/2 + i*gamma)| spot check.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, double ordinate)
      : Error(what), ordinate_(ordinate) {}
  [[nodiscard]] double ordinate() const noexcept { return ordinate_; }

 private:
  double ordinate_;
};

}  // namespace riemann
