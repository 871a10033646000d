#pragma once

#include <stdexcept>
#include <string>

namespace biasfilter {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid FilterConfig or malformed configuration input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition (empty pool, position gap, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Reward arithmetic failure. Carries the offending token position when known.
class ScoringError : public Error {
 public:
  ScoringError(const std::string& what, long position)
      : Error(what + " (token position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ScoringError(const std::string& what) : Error(what), position_(-1) {}

  long position() const { return position_; }

 private:
  long position_;
};

/// Policy and reference scorers reported different token boundaries.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// Transport or protocol failure talking to a generation/scoring/judge endpoint.
class BackendError : public Error {
 public:
  BackendError(const std::string& what, int http_status)
      : Error(what), http_status_(http_status) {}
  explicit BackendError(const std::string& what) : Error(what), http_status_(0) {}

  /// HTTP status of the final failed attempt, 0 for transport-level failures.
  int http_status() const { return http_status_; }

 private:
  int http_status_;
};

/// An endpoint lacks a required capability (e.g. echo logprobs), detected at probe time.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A metric has no defined value for the given input (empty group, too few words).
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

}  // namespace biasfilter
