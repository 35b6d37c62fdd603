#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace coprime {

// Root of every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sieve or search request exceeded a configured memory / size cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  // `position` is 1-based: the first byte of the input is position 1 and the
  // end of input is size() + 1.
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& detail);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class NotSpanningSubgraph : public Error {
 public:
  using Error::Error;
};

// Inputs are outside the range a construction (or its fallback) can handle.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// A construction produced something that failed its own checks. Never
// expected to fire; tests treat it as a bug signal.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

class FormulaViolation : public Error {
 public:
  using Error::Error;
};

class WitnessNotFound : public Error {
 public:
  using Error::Error;
};

// Lower bound exceeded upper bound for the same graph.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace coprime
