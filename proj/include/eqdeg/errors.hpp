#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqdeg {

// Input errors: malformed text, mismatched rings, violated preconditions.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// Field or arity mismatch between operands.
class RingMismatch : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class ExponentOverflow : public Error {
public:
  using Error::Error;
};

// Mathematical refusals. These are correct outcomes of the algorithms
// (the CLI reports them with exit code 1) rather than malfunctions.
class Refusal : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Refusal {
public:
  DimensionMismatch(long expected, long computed)
      : Refusal("dimension mismatch: asserted " + std::to_string(expected) +
                ", computed " + std::to_string(computed)),
        expected_(expected),
        computed_(computed) {}

  long expected() const noexcept { return expected_; }
  long computed() const noexcept { return computed_; }

private:
  long expected_;
  long computed_;
};

class NoConsensus : public Refusal {
public:
  using Refusal::Refusal;
};

class AllTrialsFailed : public Refusal {
public:
  using Refusal::Refusal;
};

}  // namespace eqdeg
