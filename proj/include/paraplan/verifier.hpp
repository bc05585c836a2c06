#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "paraplan/configspace.hpp"
#include "paraplan/error.hpp"
#include "paraplan/geometry.hpp"
#include "paraplan/planner.hpp"
#include "paraplan/random.hpp"

namespace paraplan {

enum class QueryFamily {
  Mixed,      // cycles through the four families below
  Uniform,    // independent points in the box
  Colinear,   // everything on the obstacle line
  Swap,       // goal robots are a permutation of the start robots
  Clustered,  // constructed low strata: robots share projections with other points
};

struct InstanceSpec {
  std::size_t d = 2;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  double scale = 1.0;
  double min_sep = 1e-3;
  QueryFamily family = QueryFamily::Mixed;
};

inline void validate_spec(const InstanceSpec& spec) {
  if (spec.d < 2 || spec.d % 2 != 0) {
    throw PlanningError(ErrorKind::OddDimension, "d must be even and >= 2, got " + std::to_string(spec.d));
  }
  if (spec.n < 1) throw PlanningError(ErrorKind::InvalidArgument, "need at least one robot");
  if (!(spec.min_sep > 0.0)) throw PlanningError(ErrorKind::InvalidArgument, "min_sep must be positive");
  if (!(spec.scale > 0.0)) throw PlanningError(ErrorKind::InvalidArgument, "scale must be positive");
}

// ---------------------------------------------------------------------------
// Instance generation

namespace detail {

inline constexpr std::size_t kRejectionBudget = 10000;

inline bool far_from_all(const Point& p, const std::vector<Point>& others, double min_sep) {
  return std::all_of(others.begin(), others.end(), [&](const Point& q) { return distance(p, q) >= min_sep; });
}

/// Appends `count` points of the box to `taken`, each at least min_sep from
/// everything already there.
inline void add_separated_points(Rng& rng, std::vector<Point>& taken, std::size_t count, std::size_t d,
                                 double scale, double min_sep) {
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t tries = 0;
    for (;;) {
      Point p = rng.box_point(d, scale);
      if (far_from_all(p, taken, min_sep)) {
        taken.push_back(std::move(p));
        break;
      }
      if (++tries >= kRejectionBudget) {
        throw PlanningError(ErrorKind::BudgetExceeded, "could not place point " + std::to_string(taken.size()) +
                                                           " with min_sep " + std::to_string(min_sep));
      }
    }
  }
}

inline std::pair<Point, Point> separated_obstacles(Rng& rng, const InstanceSpec& spec) {
  std::vector<Point> obs;
  add_separated_points(rng, obs, 2, spec.d, spec.scale, spec.min_sep);
  return {obs[0], obs[1]};
}

inline Configuration uniform_configuration(Rng& rng, const InstanceSpec& spec, const Point& o1, const Point& o2) {
  std::vector<Point> pts{o1, o2};
  add_separated_points(rng, pts, spec.n, spec.d, spec.scale, spec.min_sep);
  return Configuration::from_points(std::move(pts));
}

/// Robots on the obstacle line at abscissae in [-scale, scale] (relative to
/// o1), min_sep apart from each other and from both obstacles.
inline Configuration colinear_configuration(Rng& rng, const InstanceSpec& spec, const Point& o1, const Point& o2) {
  const OrientedLine line = line_of(o1, o2);
  std::vector<double> taken{0.0, distance(o1, o2)};
  std::vector<Point> robots;
  for (std::size_t j = 0; j < spec.n; ++j) {
    std::size_t tries = 0;
    for (;;) {
      const double lambda = rng.uniform(-spec.scale, spec.scale);
      if (std::all_of(taken.begin(), taken.end(), [&](double v) { return std::abs(v - lambda) >= spec.min_sep; })) {
        taken.push_back(lambda);
        robots.push_back(axpy(line.base, lambda, line.direction));
        break;
      }
      if (++tries >= kRejectionBudget) {
        throw PlanningError(ErrorKind::BudgetExceeded, "could not place colinear robot " + std::to_string(j));
      }
    }
  }
  return Configuration(o1, o2, std::move(robots));
}

}  // namespace detail

/// A configuration over (o1, o2) with exactly `stratum` distinct projections.
///
/// stratum - 2 robots take fresh projection values strictly between the
/// obstacles and sit on the line. The rest reuse one of the existing
/// projection values and sit off the line at pairwise distinct heights, so
/// their projections coincide with another point's while the points
/// themselves stay apart.
inline Configuration constructed_configuration(Rng& rng, const Point& o1, const Point& o2, std::size_t n,
                                               std::size_t stratum) {
  if (stratum < 2 || stratum > n + 2) {
    throw PlanningError(ErrorKind::InvalidArgument, "stratum " + std::to_string(stratum) + " outside 2.." +
                                                        std::to_string(n + 2));
  }
  const OrientedLine line = line_of(o1, o2);
  const double len = distance(o1, o2);
  const std::vector<Point> frame = orthonormal_frame(rng, line.direction);
  const std::size_t d = o1.dim();

  std::vector<double> classes{0.0, len};
  const std::size_t fresh = stratum - 2;
  for (std::size_t k = 1; k <= fresh; ++k) {
    classes.push_back(len * static_cast<double>(k) / static_cast<double>(stratum - 1));
  }

  std::vector<Point> robots;
  for (std::size_t k = 0; k < fresh; ++k) robots.push_back(axpy(line.base, classes[k + 2], line.direction));
  const double step = len / static_cast<double>(n + 1);
  for (std::size_t r = 0; robots.size() < n; ++r) {
    const double lambda = classes[rng.index(classes.size())];
    const double sign = rng.unit() < 0.5 ? -1.0 : 1.0;
    Point p = axpy(line.base, lambda, line.direction);
    p = axpy(p, sign * step * static_cast<double>(r + 1), frame[1]);
    for (std::size_t k = 2; k < d; ++k) p = axpy(p, rng.uniform(-step, step), frame[k]);
    robots.push_back(std::move(p));
  }
  rng.shuffle(robots);
  return Configuration(o1, o2, std::move(robots));
}

/// Start and goal at the given strata over a shared random obstacle pair.
inline QueryPair constructed_query(Rng& rng, std::size_t d, std::size_t n, std::size_t start_stratum,
                                   std::size_t goal_stratum, double scale = 1.0) {
  for (;;) {
    const Point o1 = rng.box_point(d, scale);
    const Point o2 = rng.box_point(d, scale);
    if (distance(o1, o2) < 0.25 * scale) continue;
    return QueryPair{constructed_configuration(rng, o1, o2, n, start_stratum),
                     constructed_configuration(rng, o1, o2, n, goal_stratum)};
  }
}

/// Colinear start; the goal reverses the order of the robots so that robot
/// r and robot n+1-r trade places. Any straight-line motion between them
/// makes those two meet at t = 1/2.
inline QueryPair swap_colinear_query(Rng& rng, std::size_t d, std::size_t n, double scale = 1.0) {
  InstanceSpec spec{d, n, 0, 1, scale, 0.05 * scale / static_cast<double>(n + 2), QueryFamily::Colinear};
  for (;;) {
    const Point o1 = rng.box_point(d, scale);
    const Point o2 = rng.box_point(d, scale);
    if (distance(o1, o2) < 0.25 * scale) continue;
    Configuration start = detail::colinear_configuration(rng, spec, o1, o2);
    std::vector<Point> reversed;
    for (std::size_t j = n; j-- > 0;) reversed.push_back(start.robot(j));
    return QueryPair{start, Configuration(o1, o2, std::move(reversed))};
  }
}

/// Deterministic in spec.seed. Every returned pair passes validate_query_pair.
inline std::vector<QueryPair> generate_queries(const InstanceSpec& spec) {
  validate_spec(spec);
  Rng rng(spec.seed);
  std::vector<QueryPair> out;
  out.reserve(spec.count);
  for (std::size_t k = 0; k < spec.count; ++k) {
    QueryFamily family = spec.family;
    if (family == QueryFamily::Mixed) {
      static constexpr QueryFamily kCycle[] = {QueryFamily::Uniform, QueryFamily::Colinear, QueryFamily::Swap,
                                               QueryFamily::Clustered};
      family = kCycle[k % 4];
    }
    const auto [o1, o2] = detail::separated_obstacles(rng, spec);
    QueryPair pair;
    switch (family) {
      case QueryFamily::Mixed:
      case QueryFamily::Uniform:
        pair = {detail::uniform_configuration(rng, spec, o1, o2), detail::uniform_configuration(rng, spec, o1, o2)};
        break;
      case QueryFamily::Colinear:
        pair = {detail::colinear_configuration(rng, spec, o1, o2),
                detail::colinear_configuration(rng, spec, o1, o2)};
        break;
      case QueryFamily::Swap: {
        Configuration start = detail::uniform_configuration(rng, spec, o1, o2);
        std::vector<Point> robots(start.points().begin() + 2, start.points().end());
        if (robots.size() >= 2) {
          const std::vector<Point> original = robots;
          while (robots == original) rng.shuffle(robots);
        }
        pair = {start, Configuration(o1, o2, std::move(robots))};
        break;
      }
      case QueryFamily::Clustered: {
        const std::size_t i = 2 + rng.index(spec.n);
        const std::size_t j = 2 + rng.index(spec.n);
        pair = {constructed_configuration(rng, o1, o2, spec.n, i), constructed_configuration(rng, o1, o2, spec.n, j)};
        break;
      }
    }
    validate_query_pair(pair);
    out.push_back(std::move(pair));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct Witness {
  QueryPair query;
  double t = 0.0;
  std::string detail;
};

struct Failure {
  std::size_t instance = 0;
  std::string property;
  Witness witness;
};

struct VerificationReport {
  std::size_t instances = 0;
  std::vector<Failure> failures;
  double min_separation = std::numeric_limits<double>::infinity();
  std::optional<double> continuity_constant;
  std::map<std::size_t, std::size_t> region_histogram;

  bool passed() const noexcept { return failures.empty(); }

  void merge(const VerificationReport& other) {
    instances += other.instances;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    min_separation = std::min(min_separation, other.min_separation);
    if (other.continuity_constant) {
      continuity_constant = std::max(continuity_constant.value_or(0.0), *other.continuity_constant);
    }
    for (const auto& [ell, c] : other.region_histogram) region_histogram[ell] += c;
  }
};

// ---------------------------------------------------------------------------
// Separation

struct SeparationMinimum {
  double value = std::numeric_limits<double>::infinity();
  double t = 0.0;
  std::pair<std::size_t, std::size_t> pair{0, 1};
};

inline SeparationMinimum min_separation_sampled(const PlannedPath& path, std::size_t samples) {
  SeparationMinimum best;
  for (const Sample& s : sample(path, samples)) {
    const auto [dist, where] = min_pairwise_distance(s.configuration);
    if (dist < best.value) best = {dist, s.t, where};
  }
  return best;
}

/// Exact minimum over the whole path. Between consecutive breakpoints every
/// point moves affinely, so each pairwise squared distance is a quadratic in
/// t whose minimum over the segment has a closed form.
inline SeparationMinimum min_separation_exact(const PlannedPath& path) {
  SeparationMinimum best;
  const auto bps = path.breakpoints();
  Configuration prev = path(bps.front());
  for (std::size_t s = 1; s < bps.size(); ++s) {
    Configuration next = path(bps[s]);
    const double t0 = bps[s - 1];
    const double t1 = bps[s];
    for (std::size_t a = 0; a < prev.point_count(); ++a) {
      for (std::size_t b = a + 1; b < prev.point_count(); ++b) {
        const Point r0 = prev.point(a) - prev.point(b);
        const Point dr = (next.point(a) - next.point(b)) - r0;
        const double dd = dot(dr, dr);
        const double u = dd > 0.0 ? std::clamp(-dot(r0, dr) / dd, 0.0, 1.0) : 0.0;
        const double dist = norm(axpy(r0, u, dr));
        if (dist < best.value) best = {dist, t0 + u * (t1 - t0), {a, b}};
      }
    }
    prev = std::move(next);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Path checks

struct VerifyOptions {
  std::size_t samples = 1000;
  double proj_tol = kDefaultProjectionTol;
  double endpoint_tol = 1e-9;        // relative, per coordinate
  double separation_floor = 1e-10;   // a separation at or below this counts as a collision
};

namespace detail {

inline bool close_relative(const Configuration& a, const Configuration& b, double tol) {
  if (a.point_count() != b.point_count()) return false;
  for (std::size_t k = 0; k < a.point_count(); ++k) {
    if (a.point(k).dim() != b.point(k).dim()) return false;
    for (std::size_t c = 0; c < a.point(k).dim(); ++c) {
      const double ref = std::max(1.0, std::abs(b.point(k)[c]));
      if (!(std::abs(a.point(k)[c] - b.point(k)[c]) <= tol * ref)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Endpoint exactness, bit-constant obstacles and collision-freeness, both
/// on the sample grid and at the exact per-segment minima. Failures are
/// recorded, never thrown.
inline VerificationReport verify_path(const PlannedPath& path, std::size_t instance, const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.instances = 1;
  const QueryPair& q = path.query();
  auto fail = [&](std::string property, double t, std::string detail) {
    rep.failures.push_back({instance, std::move(property), {q, t, std::move(detail)}});
  };

  if (!detail::close_relative(path(0.0), q.start, opt.endpoint_tol)) fail("endpoint-start", 0.0, "path(0) != start");
  if (!detail::close_relative(path(1.0), q.goal, opt.endpoint_tol)) fail("endpoint-goal", 1.0, "path(1) != goal");

  SeparationMinimum sampled;
  for (const Sample& s : sample(path, opt.samples)) {
    if (!(s.configuration.o1() == q.start.o1() && s.configuration.o2() == q.start.o2())) {
      fail("obstacle-constancy", s.t, "obstacle coordinates moved");
      break;
    }
    const auto [dist, where] = min_pairwise_distance(s.configuration);
    if (dist < sampled.value) sampled = {dist, s.t, where};
  }
  const SeparationMinimum exact = min_separation_exact(path);
  rep.min_separation = std::min(sampled.value, exact.value);
  if (!(sampled.value > opt.separation_floor)) {
    fail("collision-sampled", sampled.t,
         point_label(sampled.pair.first) + "/" + point_label(sampled.pair.second) + " at distance " +
             std::to_string(sampled.value));
  }
  if (!(exact.value > opt.separation_floor)) {
    fail("collision-exact", exact.t,
         point_label(exact.pair.first) + "/" + point_label(exact.pair.second) + " at distance " +
             std::to_string(exact.value));
  }
  if (path.region()) ++rep.region_histogram[path.region()->ell];
  return rep;
}

inline VerificationReport verify_plan(const QueryPair& pair, std::size_t instance, const VerifyOptions& opt = {}) {
  try {
    return verify_path(plan(pair, opt.proj_tol), instance, opt);
  } catch (const PlanningError& e) {
    VerificationReport rep;
    rep.instances = 1;
    rep.failures.push_back({instance, "planning-error", {pair, 0.0, e.what()}});
    return rep;
  }
}

inline VerificationReport verify_queries(const std::vector<QueryPair>& queries, const VerifyOptions& opt = {}) {
  VerificationReport rep;
  for (std::size_t k = 0; k < queries.size(); ++k) rep.merge(verify_plan(queries[k], k, opt));
  return rep;
}

// ---------------------------------------------------------------------------
// Region census

struct RegionCensus {
  std::size_t n = 0;
  std::map<std::size_t, std::size_t> histogram;
  std::size_t witness_mismatches = 0;  // constructed (i, j) witnesses that classified differently

  std::set<std::size_t> attainable() const {
    std::set<std::size_t> out;
    for (const auto& [ell, c] : histogram) {
      if (c > 0) out.insert(ell);
    }
    return out;
  }

  /// The attained labels are exactly 4..2n+4.
  bool complete() const {
    std::set<std::size_t> expected;
    for (std::size_t ell = 4; ell <= 2 * n + 4; ++ell) expected.insert(ell);
    return witness_mismatches == 0 && attainable() == expected;
  }
};

/// Classifies spec.count generated queries plus, when `with_witnesses`, one
/// constructed query for every stratum pair (i, j) in {2..n+2}^2.
inline RegionCensus verify_region_census(std::size_t n, std::size_t d, InstanceSpec spec, bool with_witnesses = true,
                                         double proj_tol = kDefaultProjectionTol) {
  spec.n = n;
  spec.d = d;
  RegionCensus census;
  census.n = n;
  for (const QueryPair& q : generate_queries(spec)) ++census.histogram[classify(q, proj_tol).ell];
  if (with_witnesses) {
    Rng rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = 2; i <= n + 2; ++i) {
      for (std::size_t j = 2; j <= n + 2; ++j) {
        const QueryPair q = constructed_query(rng, d, n, i, j, spec.scale);
        const RegionIndex r = classify(q, proj_tol);
        if (r.i != i || r.j != j) ++census.witness_mismatches;
        ++census.histogram[r.ell];
      }
    }
  }
  return census;
}

// ---------------------------------------------------------------------------
// Semicontinuity of strata

/// Perturbs the robots of each generated configuration by `delta` and
/// checks that the stratum never drops. Clustered (and Mixed) specs yield
/// configurations with coincident projections.
inline VerificationReport verify_semicontinuity(const InstanceSpec& spec, double delta,
                                                double proj_tol = kDefaultProjectionTol,
                                                std::size_t perturbations = 1) {
  if (!(delta > 0.0 && delta < proj_tol / 10.0)) {
    throw PlanningError(ErrorKind::InvalidArgument, "delta must lie in (0, proj_tol/10)");
  }
  VerificationReport rep;
  Rng rng(spec.seed ^ 0x5bd1e995ULL);
  std::size_t instance = 0;
  for (const QueryPair& q : generate_queries(spec)) {
    for (const Configuration* c : {&q.start, &q.goal}) {
      const Stratum before = cp_count(*c, proj_tol);
      for (std::size_t p = 0; p < perturbations; ++p) {
        Configuration moved = *c;
        for (std::size_t j = 0; j < moved.robot_count(); ++j) {
          moved.robot(j) = axpy(moved.robot(j), delta, rng.unit_vector(moved.dim()));
        }
        const Stratum after = cp_count(moved, proj_tol);
        ++rep.instances;
        if (after < before) {
          rep.failures.push_back({instance, "stratum-decrease",
                                  {QueryPair{*c, moved}, 0.0,
                                   "cp went from " + std::to_string(before.value) + " to " +
                                       std::to_string(after.value)}});
        }
      }
    }
    ++instance;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Within-region continuity

namespace detail {

inline double sup_deviation(const PlannedPath& a, const PlannedPath& b, std::size_t samples) {
  std::vector<double> ts;
  for (const Sample& s : sample(a, samples)) ts.push_back(s.t);
  for (double t : a.breakpoints()) ts.push_back(t);
  double worst = 0.0;
  for (double t : ts) {
    const Configuration ca = a(t);
    const Configuration cb = b(t);
    for (std::size_t k = 0; k < ca.point_count(); ++k) {
      for (std::size_t c = 0; c < ca.dim(); ++c) worst = std::max(worst, std::abs(ca.point(k)[c] - cb.point(k)[c]));
    }
  }
  return worst;
}

}  // namespace detail

/// A direction in query space along which small moves keep the query in its
/// (i, j) class: generic queries move every point (the obstacle moves are
/// shared by start and goal), lower strata only move robots orthogonally
/// to the obstacle line so that coincident projections stay coincident.
inline std::vector<Point> region_preserving_direction(Rng& rng, const QueryPair& pair, RegionIndex region) {
  const std::size_t m = pair.start.point_count();
  const std::size_t d = pair.start.dim();
  const std::size_t full = m;
  std::vector<Point> dir;  // o1, o2, start robots, goal robots
  const bool generic = region.i == full && region.j == full;
  const OrientedLine line = line_of(pair.start.o1(), pair.start.o2());
  for (std::size_t k = 0; k < 2; ++k) dir.push_back(generic ? rng.unit_vector(d) : Point(d));
  for (std::size_t k = 0; k < 2 * (m - 2); ++k) {
    Point v = rng.unit_vector(d);
    if (!generic) v = axpy(v, -dot(v, line.direction), line.direction);
    dir.push_back(std::move(v));
  }
  return dir;
}

inline QueryPair perturb_query(const QueryPair& pair, const std::vector<Point>& dir, double delta) {
  const std::size_t n = pair.start.robot_count();
  const Point o1 = axpy(pair.start.o1(), delta, dir[0]);
  const Point o2 = axpy(pair.start.o2(), delta, dir[1]);
  std::vector<Point> s, g;
  for (std::size_t j = 0; j < n; ++j) {
    s.push_back(axpy(pair.start.robot(j), delta, dir[2 + j]));
    g.push_back(axpy(pair.goal.robot(j), delta, dir[2 + n + j]));
  }
  return QueryPair{Configuration(o1, o2, std::move(s)), Configuration(o1, o2, std::move(g))};
}

struct ContinuityProbe {
  std::vector<double> deltas;
  std::vector<double> deviations;  // sup-norm path deviation per delta

  /// deviations[k] / deviations[k+1]
  std::vector<double> ratios() const {
    std::vector<double> out;
    for (std::size_t k = 0; k + 1 < deviations.size(); ++k) out.push_back(deviations[k] / deviations[k + 1]);
    return out;
  }
};

/// Perturbs `pair` along one region-preserving direction by each delta and
/// measures how far the planned path moves. Returns nullopt when no
/// direction keeps every perturbed query in the original (i, j).
inline std::optional<ContinuityProbe> probe_continuity(const QueryPair& pair, const std::vector<double>& deltas,
                                                       Rng& rng, std::size_t samples = 1000,
                                                       double proj_tol = kDefaultProjectionTol) {
  const RegionIndex region = classify(pair, proj_tol);
  const PlannedPath base = plan(pair, proj_tol);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const std::vector<Point> dir = region_preserving_direction(rng, pair, region);
    ContinuityProbe probe{deltas, {}};
    bool stayed = true;
    for (double delta : deltas) {
      const QueryPair moved = perturb_query(pair, dir, delta);
      try {
        validate_query_pair(moved);
        if (!(classify(moved, proj_tol) == region)) {
          stayed = false;
          break;
        }
      } catch (const PlanningError&) {
        stayed = false;
        break;
      }
      probe.deviations.push_back(detail::sup_deviation(base, plan(moved, proj_tol), samples));
    }
    if (stayed) return probe;
  }
  return std::nullopt;
}

/// Runs probe_continuity on every query; a failure is a ratio between
/// consecutive delta levels (a factor 10 apart) outside [ratio_lo, ratio_hi].
/// continuity_constant is the largest deviation/delta seen.
inline VerificationReport verify_continuity(const std::vector<QueryPair>& queries, const std::vector<double>& deltas,
                                            std::uint64_t seed, std::size_t samples = 1000,
                                            double proj_tol = kDefaultProjectionTol, double ratio_lo = 5.0,
                                            double ratio_hi = 20.0) {
  VerificationReport rep;
  Rng rng(seed);
  double k_max = 0.0;
  for (std::size_t q = 0; q < queries.size(); ++q) {
    ++rep.instances;
    const auto probe = probe_continuity(queries[q], deltas, rng, samples, proj_tol);
    if (!probe) {
      rep.failures.push_back({q, "continuity-no-direction", {queries[q], 0.0, "every perturbation left the region"}});
      continue;
    }
    for (std::size_t k = 0; k < deltas.size(); ++k) k_max = std::max(k_max, probe->deviations[k] / deltas[k]);
    const auto ratios = probe->ratios();
    for (std::size_t k = 0; k < ratios.size(); ++k) {
      if (!(ratios[k] >= ratio_lo && ratios[k] <= ratio_hi)) {
        rep.failures.push_back({q, "continuity-ratio",
                                {queries[q], 0.0,
                                 "deviation ratio " + std::to_string(ratios[k]) + " between delta " +
                                     std::to_string(deltas[k]) + " and " + std::to_string(deltas[k + 1])}});
      }
    }
  }
  rep.continuity_constant = k_max;
  return rep;
}

// ---------------------------------------------------------------------------
// Baseline comparison

struct BaselineComparison {
  std::size_t queries = 0;
  std::size_t baseline_collisions = 0;
  std::size_t plan_collisions = 0;

  double baseline_rate() const { return queries ? static_cast<double>(baseline_collisions) / queries : 0.0; }
  double plan_rate() const { return queries ? static_cast<double>(plan_collisions) / queries : 0.0; }
};

inline BaselineComparison compare_baseline(const std::vector<QueryPair>& queries,
                                           double separation_floor = VerifyOptions{}.separation_floor,
                                           double proj_tol = kDefaultProjectionTol) {
  BaselineComparison cmp;
  for (const QueryPair& q : queries) {
    ++cmp.queries;
    if (!(min_separation_exact(straight_line_plan(q)).value > separation_floor)) ++cmp.baseline_collisions;
    if (!(min_separation_exact(plan(q, proj_tol)).value > separation_floor)) ++cmp.plan_collisions;
  }
  return cmp;
}

}  // namespace paraplan
