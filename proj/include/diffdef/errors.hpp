#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffdef {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Syntax error in the input DSL, with the byte offset where it was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A construction was invoked on input that violates its hypotheses.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A reduction loop ran out of substitutions without reaching its terminal shape.
class StrategyExhausted : public Error {
 public:
  using Error::Error;
};

/// A rational function was interpreted at one of its poles.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Semantic evaluation could not decide (missing witness, too little truncation).
class Inconclusive : public Error {
 public:
  using Error::Error;
};

}  // namespace diffdef
