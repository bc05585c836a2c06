#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paraplan/configspace.hpp"
#include "paraplan/deformations.hpp"
#include "paraplan/error.hpp"
#include "paraplan/geometry.hpp"

namespace paraplan {

/// Domain of continuity a query falls into: (i, j) are the strata of start
/// and goal, and queries are repacked by ell = i + j into 2n+1 domains.
struct RegionIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t ell = 0;

  friend bool operator==(const RegionIndex&, const RegionIndex&) = default;
};

inline RegionIndex make_region(Stratum start, Stratum goal) {
  return RegionIndex{start.value, goal.value, start.value + goal.value};
}

/// A path in configuration space that keeps the obstacles fixed, evaluated
/// in closed form. No samples are stored.
///
/// breakpoints() lists the parameter values (0 and 1 included) between which
/// every point moves affinely in t. The verifier relies on this to compute
/// exact separation minima.
class PlannedPath {
 public:
  using Evaluator = std::function<Configuration(double)>;

  PlannedPath(QueryPair query, Evaluator evaluator, std::vector<double> breakpoints,
              std::optional<RegionIndex> region = std::nullopt)
      : query_(std::make_shared<const QueryPair>(std::move(query))),
        evaluator_(std::move(evaluator)),
        breakpoints_(std::move(breakpoints)),
        region_(region) {}

  Configuration operator()(double t) const {
    check_time(t);
    return evaluator_(t);
  }

  const QueryPair& query() const noexcept { return *query_; }
  const std::optional<RegionIndex>& region() const noexcept { return region_; }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  const Evaluator& evaluator() const noexcept { return evaluator_; }

  PlannedPath with_region(RegionIndex region) const {
    PlannedPath copy = *this;
    copy.region_ = region;
    return copy;
  }

 private:
  std::shared_ptr<const QueryPair> query_;
  Evaluator evaluator_;
  std::vector<double> breakpoints_;
  std::optional<RegionIndex> region_;
};

/// Planner on pairs of colinear configurations sharing their obstacles:
/// robot i rises to height i along nu(e), slides to its goal abscissa, and
/// comes back down. Each leg takes a third of the time.
class ColinearSection {
 public:
  ColinearSection(Configuration start, Configuration goal)
      : start_(std::move(start)), goal_(std::move(goal)), lift_(nu(line_of(start_.o1(), start_.o2()).direction)) {}

  Configuration operator()(double t) const {
    check_time(t);
    Configuration out = start_;
    const std::size_t d = start_.dim();
    for (std::size_t r = 0; r < start_.robot_count(); ++r) {
      const double height = static_cast<double>(r + 1);
      const Point& x = start_.robot(r);
      const Point& xg = goal_.robot(r);
      Point& z = out.robot(r);
      if (t <= 1.0 / 3.0) {
        const double h = 3.0 * t * height;
        for (std::size_t k = 0; k < d; ++k) z[k] = x[k] + h * lift_[k];
      } else if (t <= 2.0 / 3.0) {
        const double s = 3.0 * t - 1.0;
        for (std::size_t k = 0; k < d; ++k) z[k] = x[k] + height * lift_[k] + s * (xg[k] - x[k]);
      } else {
        const double h = height * (3.0 - 3.0 * t);
        for (std::size_t k = 0; k < d; ++k) z[k] = xg[k] + h * lift_[k];
      }
    }
    return out;
  }

  const Point& lift_direction() const noexcept { return lift_; }

  static std::vector<double> breakpoints() { return {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0}; }

 private:
  Configuration start_;
  Configuration goal_;
  Point lift_;
};

inline PlannedPath colinear_section(const QueryPair& pair, double colinear_tol = kDefaultColinearTol) {
  validate_query_pair(pair);
  if (!is_colinear(pair.start, colinear_tol)) throw PlanningError(ErrorKind::NotColinear, "start is not colinear");
  if (!is_colinear(pair.goal, colinear_tol)) throw PlanningError(ErrorKind::NotColinear, "goal is not colinear");
  auto section = std::make_shared<const ColinearSection>(pair.start, pair.goal);
  return PlannedPath(pair, [section](double t) { return (*section)(t); }, ColinearSection::breakpoints());
}

inline RegionIndex classify(const QueryPair& pair, double proj_tol = kDefaultProjectionTol) {
  validate_query_pair(pair);
  return make_region(cp_count(pair.start, proj_tol), cp_count(pair.goal, proj_tol));
}

namespace detail {

/// Deform both ends onto the obstacle line, run the colinear section there,
/// and retrace the goal-side deformation backwards. Thirds of the time each.
struct GluedPlanner {
  PairDeformation deformation;
  ColinearSection section;

  GluedPlanner(const QueryPair& pair, double proj_tol)
      : deformation(pair, proj_tol), section(deformation.start_at(1.0), deformation.goal_at(1.0)) {}

  Configuration operator()(double tau) const {
    if (tau <= 1.0 / 3.0) return deformation.start_at(std::clamp(3.0 * tau, 0.0, 1.0));
    if (tau <= 2.0 / 3.0) return section(std::clamp(3.0 * tau - 1.0, 0.0, 1.0));
    return deformation.goal_at(std::clamp(3.0 - 3.0 * tau, 0.0, 1.0));
  }

  static std::vector<double> breakpoints() {
    return {0.0, 1.0 / 6.0, 1.0 / 3.0, 4.0 / 9.0, 5.0 / 9.0, 2.0 / 3.0, 5.0 / 6.0, 1.0};
  }
};

}  // namespace detail

inline PlannedPath glue(const QueryPair& pair, double proj_tol = kDefaultProjectionTol) {
  validate_query_pair(pair);
  auto planner = std::make_shared<const detail::GluedPlanner>(pair, proj_tol);
  return PlannedPath(pair, [planner](double tau) { return (*planner)(tau); }, detail::GluedPlanner::breakpoints());
}

/// The full planner: classify the query, then glue.
inline PlannedPath plan(const QueryPair& pair, double proj_tol = kDefaultProjectionTol) {
  const RegionIndex region = classify(pair, proj_tol);
  return glue(pair, proj_tol).with_region(region);
}

struct Sample {
  double t;
  Configuration configuration;
};

/// N evaluations on the uniform grid k/(N-1); both endpoints are hit exactly.
inline std::vector<Sample> sample(const PlannedPath& path, std::size_t count) {
  if (count < 2) throw PlanningError(ErrorKind::InvalidArgument, "need at least 2 samples");
  std::vector<Sample> out;
  out.reserve(count);
  const double last = static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = k + 1 == count ? 1.0 : static_cast<double>(k) / last;
    out.push_back({t, path(t)});
  }
  return out;
}

/// Baseline: move every point along the segment to its goal. Valid only when
/// the fibre is convex, so it may collide; kept as a negative control.
inline PlannedPath straight_line_plan(const QueryPair& pair) {
  auto q = std::make_shared<const QueryPair>(pair);
  auto eval = [q](double t) {
    Configuration out = q->start;
    for (std::size_t j = 0; j < out.robot_count(); ++j) {
      const Point& a = q->start.robot(j);
      const Point& b = q->goal.robot(j);
      Point& z = out.robot(j);
      for (std::size_t k = 0; k < a.dim(); ++k) z[k] = (1.0 - t) * a[k] + t * b[k];
    }
    return out;
  };
  return PlannedPath(pair, std::move(eval), {0.0, 1.0});
}

}  // namespace paraplan
