#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "paraplan/geometry.hpp"

namespace paraplan {

/// Seeded source for instance generation. Doubles are built from the raw
/// 64-bit stream rather than std distributions so that a seed yields the
/// same instances on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::size_t index(std::size_t bound) { return static_cast<std::size_t>(unit() * static_cast<double>(bound)); }

  Point box_point(std::size_t d, double half_width) {
    Point p(d);
    for (std::size_t k = 0; k < d; ++k) p[k] = uniform(-half_width, half_width);
    return p;
  }

  /// Uniformly distributed direction (rejection from the cube).
  Point unit_vector(std::size_t d) {
    for (;;) {
      Point p = box_point(d, 1.0);
      const double len = norm(p);
      if (len > 1e-3 && len <= 1.0) return p * (1.0 / len);
    }
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[index(k)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Orthonormal basis of R^d whose first vector is `first` (assumed unit).
inline std::vector<Point> orthonormal_frame(Rng& rng, const Point& first) {
  const std::size_t d = first.dim();
  std::vector<Point> frame{first};
  while (frame.size() < d) {
    Point v = rng.unit_vector(d);
    for (const Point& b : frame) v = axpy(v, -dot(v, b), b);
    const double len = norm(v);
    if (len < 1e-6) continue;
    frame.push_back(v * (1.0 / len));
  }
  return frame;
}

}  // namespace paraplan
