#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "paraplan/error.hpp"

namespace paraplan {

inline constexpr double kDefaultDegeneracyTol = 1e-9;

/// A point (or free vector) of R^d. The dimension is carried at runtime so
/// one binary serves every even d.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : coords_(dim, 0.0) {}
  Point(std::initializer_list<double> coords) : coords_(coords) {}
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}
  explicit Point(std::span<const double> coords) : coords_(coords.begin(), coords.end()) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t k) const { return coords_[k]; }
  double& operator[](std::size_t k) { return coords_[k]; }
  std::span<const double> coords() const noexcept { return coords_; }

  bool is_finite() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](double c) { return std::isfinite(c); });
  }

  Point& operator+=(const Point& o) {
    check_same_dim(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  Point& operator-=(const Point& o) {
    check_same_dim(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
    return *this;
  }
  Point& operator*=(double s) noexcept {
    for (double& c : coords_) c *= s;
    return *this;
  }

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }
  friend Point operator-(Point a) { return a *= -1.0; }

  /// Bitwise coordinate equality; tolerance comparisons are explicit elsewhere.
  friend bool operator==(const Point&, const Point&) = default;

  void check_same_dim(const Point& o) const {
    if (o.dim() != dim()) {
      throw PlanningError(ErrorKind::DimensionMismatch,
                          "points of dimension " + std::to_string(dim()) + " and " + std::to_string(o.dim()));
    }
  }

 private:
  std::vector<double> coords_;
};

inline double dot(const Point& a, const Point& b) {
  a.check_same_dim(b);
  double s = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) s += a[k] * b[k];
  return s;
}

inline double norm(const Point& a) { return std::sqrt(dot(a, a)); }

inline double distance(const Point& a, const Point& b) {
  a.check_same_dim(b);
  double s = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const double diff = a[k] - b[k];
    s += diff * diff;
  }
  return std::sqrt(s);
}

/// x + s * v without the temporaries of the operator form.
inline Point axpy(const Point& x, double s, const Point& v) {
  x.check_same_dim(v);
  Point out(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k) out[k] = x[k] + s * v[k];
  return out;
}

/// The line through the obstacle pair, oriented from o1 towards o2.
struct OrientedLine {
  Point base;       // o1
  Point direction;  // unit vector e_C

  std::size_t dim() const noexcept { return base.dim(); }
};

inline OrientedLine line_of(const Point& o1, const Point& o2, double degeneracy_tol = kDefaultDegeneracyTol) {
  Point diff = o2 - o1;
  const double len = norm(diff);
  if (!(len > degeneracy_tol)) {
    throw PlanningError(ErrorKind::DegenerateObstacles,
                        "obstacles are " + std::to_string(len) + " apart (tolerance " + std::to_string(degeneracy_tol) +
                            ")");
  }
  diff *= 1.0 / len;
  return OrientedLine{o1, std::move(diff)};
}

/// Signed coordinate of the orthogonal projection of x along the line:
/// project_point(line, x) == line.base + project_scalar(line, x) * line.direction.
inline double project_scalar(const OrientedLine& line, const Point& x) {
  line.base.check_same_dim(x);
  double s = 0.0;
  for (std::size_t k = 0; k < x.dim(); ++k) s += (x[k] - line.base[k]) * line.direction[k];
  return s;
}

inline Point project_point(const OrientedLine& line, const Point& x) {
  return axpy(line.base, project_scalar(line, x), line.direction);
}

/// Coordinate-pair rotation (x1, y1, ..., xl, yl) -> (-y1, x1, ..., -yl, xl).
/// Orthogonal to its argument and norm preserving; only exists for even d.
inline Point nu(const Point& v) {
  if (v.dim() == 0 || v.dim() % 2 != 0) {
    throw PlanningError(ErrorKind::OddDimension, "tangent field needs even dimension, got " + std::to_string(v.dim()));
  }
  Point out(v.dim());
  for (std::size_t k = 0; k < v.dim(); k += 2) {
    out[k] = -v[k + 1];
    out[k + 1] = v[k];
  }
  return out;
}

}  // namespace paraplan
