#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "paraplan/configspace.hpp"
#include "paraplan/error.hpp"
#include "paraplan/geometry.hpp"

namespace paraplan {

enum class StageKind { Desingularize, Flatten, Composite };

struct HomotopyStage {
  StageKind kind;
  std::size_t source_stratum;
};

inline void check_time(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw PlanningError(ErrorKind::OutOfRangeTime, "time " + std::to_string(t) + " is outside [0, 1]");
  }
}

/// Pushes robot j (one-based) a distance t * j * eps along the obstacle line
/// direction, which separates coincident projections without creating new
/// coincidences. eps and the direction are fixed from the source
/// configuration; they do not change along the deformation. Configurations
/// whose projections are already pairwise distinct are left alone.
class Desingularization {
 public:
  explicit Desingularization(Configuration source, double proj_tol = kDefaultProjectionTol)
      : source_(std::move(source)) {
    const ProjectionClasses pc = projection_classes(source_, proj_tol);
    stratum_ = pc.count();
    identity_ = stratum_ == source_.point_count();
    epsilon_ = epsilon_bar(pc);
    direction_ = pc.line.direction;
  }

  Configuration operator()(double t) const {
    check_time(t);
    if (identity_) return source_;
    Configuration out = source_;
    for (std::size_t j = 0; j < out.robot_count(); ++j) {
      out.robot(j) = axpy(source_.robot(j), t * static_cast<double>(j + 1) * epsilon_, direction_);
    }
    return out;
  }

  const Configuration& source() const noexcept { return source_; }
  double epsilon() const noexcept { return epsilon_; }
  bool is_identity() const noexcept { return identity_; }
  HomotopyStage stage() const noexcept { return {StageKind::Desingularize, stratum_}; }

 private:
  Configuration source_;
  Point direction_;
  double epsilon_ = 0.0;
  std::size_t stratum_ = 0;
  bool identity_ = true;
};

/// Straight-line retraction of every point onto its orthogonal projection on
/// the obstacle line. Only collision-free on configurations whose
/// projections are pairwise distinct.
class Flattening {
 public:
  explicit Flattening(Configuration source, double proj_tol = kDefaultProjectionTol) {
    const Stratum s = cp_count(source, proj_tol);
    if (s.value != source.point_count()) {
      throw PlanningError(ErrorKind::NotDesingularized, "configuration has " + std::to_string(s.value) +
                                                            " distinct projections, needs " +
                                                            std::to_string(source.point_count()));
    }
    *this = assume_desingularized(std::move(source));
  }

  /// Skips the stratum check; for callers that produced `source` by a full
  /// desingularization and must not be second-guessed by the tolerance rule.
  static Flattening assume_desingularized(Configuration source) {
    Flattening f;
    const OrientedLine line = line_of(source.o1(), source.o2());
    f.targets_.reserve(source.robot_count());
    for (std::size_t j = 0; j < source.robot_count(); ++j) f.targets_.push_back(project_point(line, source.robot(j)));
    f.source_ = std::move(source);
    return f;
  }

  Configuration operator()(double t) const {
    check_time(t);
    Configuration out = source_;
    for (std::size_t j = 0; j < out.robot_count(); ++j) {
      const Point& y = source_.robot(j);
      const Point& p = targets_[j];
      Point& z = out.robot(j);
      for (std::size_t k = 0; k < y.dim(); ++k) z[k] = y[k] + t * (p[k] - y[k]);
    }
    return out;
  }

  const Configuration& source() const noexcept { return source_; }
  HomotopyStage stage() const noexcept { return {StageKind::Flatten, source_.point_count()}; }

 private:
  Flattening() = default;

  Configuration source_;
  std::vector<Point> targets_;  // projections of the robots; obstacles already lie on the line
};

/// Desingularize on [0, 1/2], then flatten on [1/2, 1], applied to each side
/// of a query pair. The obstacles are never touched.
class PairDeformation {
 public:
  explicit PairDeformation(const QueryPair& pair, double proj_tol = kDefaultProjectionTol)
      : desing_start_(pair.start, proj_tol),
        desing_goal_(pair.goal, proj_tol),
        flat_start_(Flattening::assume_desingularized(desing_start_(1.0))),
        flat_goal_(Flattening::assume_desingularized(desing_goal_(1.0))) {}

  Configuration start_at(double t) const {
    check_time(t);
    return t <= 0.5 ? desing_start_(2.0 * t) : flat_start_(2.0 * t - 1.0);
  }
  Configuration goal_at(double t) const {
    check_time(t);
    return t <= 0.5 ? desing_goal_(2.0 * t) : flat_goal_(2.0 * t - 1.0);
  }
  std::pair<Configuration, Configuration> operator()(double t) const { return {start_at(t), goal_at(t)}; }

  const Desingularization& start_desingularization() const noexcept { return desing_start_; }
  const Desingularization& goal_desingularization() const noexcept { return desing_goal_; }
  HomotopyStage stage() const noexcept {
    return {StageKind::Composite, std::min(desing_start_.stage().source_stratum, desing_goal_.stage().source_stratum)};
  }

 private:
  Desingularization desing_start_;
  Desingularization desing_goal_;
  Flattening flat_start_;
  Flattening flat_goal_;
};

inline Configuration desingularize(const Configuration& c, double t, double proj_tol = kDefaultProjectionTol) {
  check_time(t);
  validate_configuration(c);
  return Desingularization(c, proj_tol)(t);
}

inline Configuration flatten(const Configuration& c, double t, double proj_tol = kDefaultProjectionTol) {
  check_time(t);
  validate_configuration(c);
  return Flattening(c, proj_tol)(t);
}

inline std::pair<Configuration, Configuration> sigma(const QueryPair& pair, double t,
                                                     double proj_tol = kDefaultProjectionTol) {
  check_time(t);
  validate_query_pair(pair);
  return PairDeformation(pair, proj_tol)(t);
}

}  // namespace paraplan
