#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twoarm {

/// Base class for every error raised by this library.
class StatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public StatError {
 public:
  using StatError::StatError;
};

/// Too few observations for the requested statistic.
class InsufficientDataError : public StatError {
 public:
  using StatError::StatError;
};

/// Zero-variance (or otherwise degenerate) data that would yield an
/// infinite or undefined statistic.
class DegenerateSampleError : public StatError {
 public:
  using StatError::StatError;
};

/// Sample size outside the supported range of an algorithm.
class UnsupportedSizeError : public StatError {
 public:
  using StatError::StatError;
};

/// Requested (mean, sd) pair that no Beta distribution can realize.
class InfeasibleMomentsError : public StatError {
 public:
  using StatError::StatError;
};

/// Coefficient of variation requested for a non-positive mean.
class CvUndefinedError : public StatError {
 public:
  using StatError::StatError;
};

/// An operation applied to the wrong kind of value.
class UsageError : public StatError {
 public:
  using StatError::StatError;
};

/// Malformed input data. `line()` is 1-based; 0 means the problem is not
/// tied to a single line.
class ParseError : public StatError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : StatError(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace twoarm
