#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpbe/algebra.hpp"

namespace mpbe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(std::move(reason)) {}
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class PreconditionUnmet : public Error {
 public:
  using Error::Error;
};

class NotAPoset : public PreconditionUnmet {
 public:
  NotAPoset() : PreconditionUnmet("relation <= is not a partial order") {}
};

class ModeUnavailable : public PreconditionUnmet {
 public:
  using PreconditionUnmet::PreconditionUnmet;
};

class NotBoundedCommutative : public PreconditionUnmet {
 public:
  NotBoundedCommutative() : PreconditionUnmet("algebra is not bounded commutative") {}
};

class DeclaredZeroMismatch : public Error {
 public:
  using Error::Error;
};

class WitnessError : public Error {
 public:
  WitnessError(const std::string& what, std::vector<Elem> witness) : Error(what), witness_(std::move(witness)) {}
  const std::vector<Elem>& witness() const { return witness_; }

 private:
  std::vector<Elem> witness_;
};

/// A failed (U_k) or (E_k) condition of the τ/σ constructions.
class ConditionFailed : public WitnessError {
 public:
  ConditionFailed(std::string condition, std::vector<Elem> witness)
      : WitnessError("condition " + condition + " fails", std::move(witness)), condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

class NotACongruence : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

class IllDefined : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

}  // namespace mpbe
