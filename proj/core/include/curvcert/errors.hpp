#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace curvcert {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateTower : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Nonzero element that is a zero divisor (the tower splits for some a, b).
class NotInvertible : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class BadFactorization : public Error {
 public:
  using Error::Error;
};

class PoleEvaluation : public Error {
 public:
  using Error::Error;
};

class ZeroCoefficient : public Error {
 public:
  using Error::Error;
};

class NonFuchsian : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DegenerateParameters : public Error {
 public:
  DegenerateParameters(std::string guard, const std::string& what)
      : Error(what), guard_(std::move(guard)) {}
  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

class HypothesisViolated : public Error {
 public:
  HypothesisViolated(std::vector<std::string> violated, const std::string& what)
      : Error(what), violated_(std::move(violated)) {}
  const std::vector<std::string>& violated() const noexcept { return violated_; }

 private:
  std::vector<std::string> violated_;
};

class NotMu1 : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class StepFailure : public Error {
 public:
  using Error::Error;
};

class ChartDomainError : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace curvcert
