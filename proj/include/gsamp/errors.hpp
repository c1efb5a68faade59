#pragma once

#include <stdexcept>
#include <string>

namespace gsamp {

// Which input assumption a graph violated.
enum class ValidationKind {
  NotConnected,
  NonConsecutiveIds,
  SelfLoop,
  DuplicateEdge,
  Empty,
};

inline const char* to_string(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::NotConnected: return "NotConnected";
    case ValidationKind::NonConsecutiveIds: return "NonConsecutiveIds";
    case ValidationKind::SelfLoop: return "SelfLoop";
    case ValidationKind::DuplicateEdge: return "DuplicateEdge";
    case ValidationKind::Empty: return "Empty";
  }
  return "Unknown";
}

// Input graph breaks one of the documented assumptions; sampling halts.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ValidationKind kind() const noexcept { return kind_; }

 private:
  ValidationKind kind_;
};

// Malformed edge-list text (bad token, wrong arity); carries the line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& detail)
      : std::runtime_error("line " + std::to_string(line) + ": " + detail), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Caller passed an out-of-range or inconsistent argument.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& detail) : std::invalid_argument(detail) {}
};

// A sampling run could not finish: stuck-walk guard, rekindle budget,
// or generator retry budget exhausted.
class SamplingError : public std::runtime_error {
 public:
  explicit SamplingError(const std::string& detail) : std::runtime_error(detail) {}
};

// Requested statistic is undefined on the given graph (e.g. degree
// correlation of a regular graph).
class DegenerateStatisticError : public std::domain_error {
 public:
  explicit DegenerateStatisticError(const std::string& detail) : std::domain_error(detail) {}
};

}  // namespace gsamp
