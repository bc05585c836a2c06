#pragma once

// Independent oracles and fixtures shared by the test binaries. Nothing here
// calls into the projection-class or deformation code it is used to check.

#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include "paraplan/paraplan.hpp"

namespace paraplan::testing {

inline Configuration make_config(Point o1, Point o2, std::vector<Point> robots) {
  return Configuration(std::move(o1), std::move(o2), std::move(robots));
}

/// Signed abscissa along the o1 -> o2 direction, computed from scratch.
inline double oracle_lambda(const Configuration& c, const Point& x) {
  double len2 = 0.0;
  for (std::size_t k = 0; k < c.dim(); ++k) len2 += (c.o2()[k] - c.o1()[k]) * (c.o2()[k] - c.o1()[k]);
  double s = 0.0;
  for (std::size_t k = 0; k < c.dim(); ++k) s += (x[k] - c.o1()[k]) * (c.o2()[k] - c.o1()[k]);
  return s / std::sqrt(len2);
}

/// Connected components of the "projections within threshold" graph,
/// via union-find over all pairs. Equivalent to single linkage.
inline std::vector<std::size_t> oracle_components(const Configuration& c, double proj_tol) {
  const std::size_t m = c.point_count();
  std::vector<double> lam(m);
  for (std::size_t k = 0; k < m; ++k) lam[k] = oracle_lambda(c, c.point(k));
  const double thr = proj_tol * std::max(1.0, distance(c.o1(), c.o2()));
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (std::abs(lam[a] - lam[b]) <= thr) parent[find(a)] = find(b);
    }
  }
  std::vector<std::size_t> root(m);
  for (std::size_t k = 0; k < m; ++k) root[k] = find(k);
  return root;
}

inline std::size_t oracle_cp_count(const Configuration& c, double proj_tol = kDefaultProjectionTol) {
  auto roots = oracle_components(c, proj_tol);
  std::sort(roots.begin(), roots.end());
  return static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

/// Min over all pairs of distinct components of the gap between component
/// means, divided by n+2.
inline double oracle_epsilon_bar(const Configuration& c, double proj_tol = kDefaultProjectionTol) {
  const auto roots = oracle_components(c, proj_tol);
  std::map<std::size_t, std::pair<double, std::size_t>> acc;
  for (std::size_t k = 0; k < c.point_count(); ++k) {
    acc[roots[k]].first += oracle_lambda(c, c.point(k));
    acc[roots[k]].second += 1;
  }
  std::vector<double> means;
  for (const auto& [r, v] : acc) means.push_back(v.first / static_cast<double>(v.second));
  double best = INFINITY;
  for (std::size_t a = 0; a < means.size(); ++a) {
    for (std::size_t b = a + 1; b < means.size(); ++b) best = std::min(best, std::abs(means[a] - means[b]));
  }
  return best / static_cast<double>(c.point_count());
}

inline double oracle_min_separation(const Configuration& c) {
  double best = INFINITY;
  for (std::size_t a = 0; a < c.point_count(); ++a) {
    for (std::size_t b = a + 1; b < c.point_count(); ++b) {
      double s = 0.0;
      for (std::size_t k = 0; k < c.dim(); ++k) {
        const double diff = c.point(a)[k] - c.point(b)[k];
        s += diff * diff;
      }
      best = std::min(best, std::sqrt(s));
    }
  }
  return best;
}

inline double max_abs_diff(const Configuration& a, const Configuration& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.point_count(); ++k) {
    for (std::size_t c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a.point(k)[c] - b.point(k)[c]));
  }
  return worst;
}

/// A generic random configuration in the unit box, points 1e-2 apart.
inline Configuration random_configuration(Rng& rng, std::size_t d, std::size_t n) {
  for (;;) {
    std::vector<Point> pts;
    for (std::size_t k = 0; k < n + 2; ++k) pts.push_back(rng.box_point(d, 1.0));
    Configuration c = Configuration::from_points(std::move(pts));
    if (oracle_min_separation(c) > 1e-2) return c;
  }
}

inline QueryPair random_pair(Rng& rng, std::size_t d, std::size_t n) {
  Configuration s = random_configuration(rng, d, n);
  for (;;) {
    std::vector<Point> pts{s.o1(), s.o2()};
    for (std::size_t k = 0; k < n; ++k) pts.push_back(rng.box_point(d, 1.0));
    Configuration g = Configuration::from_points(std::move(pts));
    if (oracle_min_separation(g) > 1e-2) return {s, g};
  }
}

}  // namespace paraplan::testing
