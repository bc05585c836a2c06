#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "paraplan/error.hpp"
#include "paraplan/geometry.hpp"

namespace paraplan {

inline constexpr double kDefaultDistinctTol = 1e-9;
inline constexpr double kDefaultProjectionTol = 1e-9;
inline constexpr double kDefaultColinearTol = 1e-9;

/// An ordered configuration (o1, o2, x1, ..., xn) of n point robots and two
/// point obstacles. Construction does not validate; see
/// validate_configuration.
///
/// Points are addressed two ways: o1()/o2()/robot() with the natural
/// indexing, and point(k) over the unified list y = (o1, o2, x1, ..., xn).
class Configuration {
 public:
  Configuration() = default;
  Configuration(Point o1, Point o2, std::vector<Point> robots) {
    points_.reserve(robots.size() + 2);
    points_.push_back(std::move(o1));
    points_.push_back(std::move(o2));
    for (auto& r : robots) points_.push_back(std::move(r));
  }

  /// From the unified list; at least the two obstacles must be present.
  static Configuration from_points(std::vector<Point> points) {
    if (points.size() < 2) throw PlanningError(ErrorKind::InvalidArgument, "a configuration needs both obstacles");
    Configuration c;
    c.points_ = std::move(points);
    return c;
  }

  std::size_t dim() const noexcept { return points_.empty() ? 0 : points_.front().dim(); }
  std::size_t robot_count() const noexcept { return points_.size() < 2 ? 0 : points_.size() - 2; }
  std::size_t point_count() const noexcept { return points_.size(); }

  const Point& o1() const { return points_[0]; }
  const Point& o2() const { return points_[1]; }
  /// Zero-based; robot(j) is x_{j+1}.
  const Point& robot(std::size_t j) const { return points_[j + 2]; }
  Point& robot(std::size_t j) { return points_[j + 2]; }
  const Point& point(std::size_t k) const { return points_[k]; }
  Point& point(std::size_t k) { return points_[k]; }
  const std::vector<Point>& points() const noexcept { return points_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Point> points_;
};

/// Two configurations over the same ordered obstacle pair.
struct QueryPair {
  Configuration start;
  Configuration goal;

  friend bool operator==(const QueryPair&, const QueryPair&) = default;
};

/// The value of cp-bar: how many distinct obstacle-line projections a
/// configuration has. Ranges over 2..n+2.
struct Stratum {
  std::size_t value = 0;
  friend auto operator<=>(const Stratum&, const Stratum&) = default;
};

inline std::string point_label(std::size_t k) {
  if (k == 0) return "o1";
  if (k == 1) return "o2";
  return "x" + std::to_string(k - 1);
}

/// Succeeds iff the dimension is even and at least 2, every coordinate is
/// finite, and the n+2 points are pairwise more than `tol` apart.
inline void validate_configuration(const Configuration& c, double tol = kDefaultDistinctTol) {
  if (c.point_count() < 2) throw PlanningError(ErrorKind::InvalidArgument, "configuration is missing obstacles");
  const std::size_t d = c.dim();
  for (std::size_t k = 0; k < c.point_count(); ++k) {
    if (c.point(k).dim() != d) {
      throw PlanningError(ErrorKind::DimensionMismatch, point_label(k) + " has dimension " +
                                                            std::to_string(c.point(k).dim()) + ", expected " +
                                                            std::to_string(d));
    }
  }
  if (d < 2 || d % 2 != 0) {
    throw PlanningError(ErrorKind::OddDimension, "workspace dimension must be even and >= 2, got " + std::to_string(d));
  }
  for (std::size_t k = 0; k < c.point_count(); ++k) {
    if (!c.point(k).is_finite()) throw PlanningError(ErrorKind::NonFiniteCoordinate, point_label(k));
  }
  if (!(distance(c.o1(), c.o2()) > tol)) {
    throw PlanningError(ErrorKind::DegenerateObstacles, "o1 and o2 coincide", {0, 1});
  }
  for (std::size_t a = 0; a < c.point_count(); ++a) {
    for (std::size_t b = std::max<std::size_t>(a + 1, 2); b < c.point_count(); ++b) {
      if (!(distance(c.point(a), c.point(b)) > tol)) {
        throw PlanningError(ErrorKind::CollidingPoints, point_label(a) + " and " + point_label(b) + " coincide",
                            {a, b});
      }
    }
  }
}

inline void validate_query_pair(const QueryPair& p, double tol = kDefaultDistinctTol) {
  validate_configuration(p.start, tol);
  validate_configuration(p.goal, tol);
  if (p.start.dim() != p.goal.dim()) {
    throw PlanningError(ErrorKind::DimensionMismatch, "start and goal live in different dimensions");
  }
  if (p.start.robot_count() != p.goal.robot_count()) {
    throw PlanningError(ErrorKind::DimensionMismatch, "start and goal have different robot counts");
  }
  if (!(p.start.o1() == p.goal.o1() && p.start.o2() == p.goal.o2())) {
    throw PlanningError(ErrorKind::ObstacleMismatch, "start and goal must cite the same ordered obstacle pair");
  }
}

/// Projections of all n+2 points onto the obstacle line, grouped into
/// equality classes.
///
/// Two projections are equal when their scalar coordinates differ by at most
/// proj_tol * max(1, |o2 - o1|). Classes are formed by single linkage over the
/// sorted coordinates, so the grouping does not depend on point order.
/// Each class is represented by the mean of its members.
struct ProjectionClasses {
  OrientedLine line;
  std::vector<double> lambda;             // per unified point index
  std::vector<std::size_t> class_of;      // per unified point index, classes numbered by increasing lambda
  std::vector<double> representatives;   // increasing

  std::size_t count() const noexcept { return representatives.size(); }
};

inline double projection_threshold(const Configuration& c, double proj_tol) {
  return proj_tol * std::max(1.0, distance(c.o1(), c.o2()));
}

inline ProjectionClasses projection_classes(const Configuration& c, double proj_tol = kDefaultProjectionTol,
                                            double degeneracy_tol = kDefaultDegeneracyTol) {
  ProjectionClasses pc{line_of(c.o1(), c.o2(), degeneracy_tol), {}, {}, {}};
  const std::size_t m = c.point_count();
  pc.lambda.resize(m);
  for (std::size_t k = 0; k < m; ++k) pc.lambda[k] = project_scalar(pc.line, c.point(k));

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pc.lambda[a] < pc.lambda[b]; });

  const double threshold = projection_threshold(c, proj_tol);
  pc.class_of.assign(m, 0);
  double sum = 0.0;
  std::size_t members = 0;
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t k = order[r];
    if (r > 0 && pc.lambda[k] - pc.lambda[order[r - 1]] > threshold) {
      pc.representatives.push_back(sum / static_cast<double>(members));
      sum = 0.0;
      members = 0;
    }
    pc.class_of[k] = pc.representatives.size();
    sum += pc.lambda[k];
    ++members;
  }
  pc.representatives.push_back(sum / static_cast<double>(members));

  if (pc.class_of[0] == pc.class_of[1]) {
    throw PlanningError(ErrorKind::DegenerateObstacles, "obstacle projections merged under the projection tolerance");
  }
  return pc;
}

inline Stratum cp_count(const Configuration& c, double proj_tol = kDefaultProjectionTol) {
  return Stratum{projection_classes(c, proj_tol).count()};
}

/// One (n+2)-th of the smallest gap between distinct projection classes,
/// with the obstacles counted among the points.
inline double epsilon_bar(const ProjectionClasses& pc) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t r = 1; r < pc.representatives.size(); ++r) {
    gap = std::min(gap, pc.representatives[r] - pc.representatives[r - 1]);
  }
  return gap / static_cast<double>(pc.lambda.size());
}

inline double epsilon_bar(const Configuration& c, double proj_tol = kDefaultProjectionTol) {
  return epsilon_bar(projection_classes(c, proj_tol));
}

/// True iff every robot lies within `tol` of the obstacle line.
inline bool is_colinear(const Configuration& c, double tol = kDefaultColinearTol) {
  const OrientedLine line = line_of(c.o1(), c.o2());
  for (std::size_t j = 0; j < c.robot_count(); ++j) {
    if (distance(c.robot(j), project_point(line, c.robot(j))) > tol) return false;
  }
  return true;
}

/// Smallest distance over all pairs of the n+2 points, with the pair attaining it.
inline std::pair<double, std::pair<std::size_t, std::size_t>> min_pairwise_distance(const Configuration& c) {
  double best = std::numeric_limits<double>::infinity();
  std::pair<std::size_t, std::size_t> where{0, 1};
  for (std::size_t a = 0; a < c.point_count(); ++a) {
    for (std::size_t b = a + 1; b < c.point_count(); ++b) {
      const double dist = distance(c.point(a), c.point(b));
      if (dist < best) {
        best = dist;
        where = {a, b};
      }
    }
  }
  return {best, where};
}

}  // namespace paraplan
