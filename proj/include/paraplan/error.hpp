#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace paraplan {

enum class ErrorKind {
  DegenerateObstacles,
  DimensionMismatch,
  OddDimension,
  NonFiniteCoordinate,
  CollidingPoints,
  ObstacleMismatch,
  NotDesingularized,
  NotColinear,
  OutOfRangeTime,
  InvalidArgument,
  BudgetExceeded,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateObstacles: return "DegenerateObstacles";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorKind::CollidingPoints: return "CollidingPoints";
    case ErrorKind::ObstacleMismatch: return "ObstacleMismatch";
    case ErrorKind::NotDesingularized: return "NotDesingularized";
    case ErrorKind::NotColinear: return "NotColinear";
    case ErrorKind::OutOfRangeTime: return "OutOfRangeTime";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is stable and is what the
/// CLI prints; `what()` carries the human-readable detail.
class PlanningError : public std::runtime_error {
 public:
  PlanningError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  /// CollidingPoints carries the offending pair as indices into the unified
  /// point list (0 = o1, 1 = o2, k + 2 = robot k + 1).
  PlanningError(ErrorKind kind, const std::string& detail, std::pair<std::size_t, std::size_t> pair)
      : PlanningError(kind, detail) {
    pair_ = pair;
  }

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }
  const std::optional<std::pair<std::size_t, std::size_t>>& offending_pair() const noexcept { return pair_; }

 private:
  ErrorKind kind_;
  std::optional<std::pair<std::size_t, std::size_t>> pair_;
};

}  // namespace paraplan
