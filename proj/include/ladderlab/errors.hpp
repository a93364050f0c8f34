#pragma once

#include <stdexcept>
#include <string>

namespace ladderlab {

// Input outside the mathematical domain of an operation (non-finite t, a >= b, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A query beyond what a finite table covers; the message says how far to extend.
class RangeError : public std::out_of_range {
 public:
  RangeError(const std::string& what, double required)
      : std::out_of_range(what), required_(required) {}
  double required() const noexcept { return required_; }

 private:
  double required_;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Missing state, e.g. asking for F(y) before c0 has been fitted.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Root bracket did not change sign.
class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& what, double residual_lo, double residual_hi)
      : std::runtime_error(what), residual_lo_(residual_lo), residual_hi_(residual_hi) {}
  double residual_lo() const noexcept { return residual_lo_; }
  double residual_hi() const noexcept { return residual_hi_; }

 private:
  double residual_lo_;
  double residual_hi_;
};

// File missing, unreadable, or malformed on disk.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// phi(T) asked for T below the ladder's domain start T0.
class BelowDomainStart : public DomainError {
 public:
  BelowDomainStart(const std::string& what, double T0) : DomainError(what), T0_(T0) {}
  double T0() const noexcept { return T0_; }

 private:
  double T0_;
};

}  // namespace ladderlab
