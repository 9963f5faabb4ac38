#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "cyclogon/geom/point.hpp"

namespace cyclogon::geom {

/// Seeded source of random point configurations. Each instance owns its
/// engine; share seeds, not instances, across threads.
class ConfigGenerator {
 public:
  explicit ConfigGenerator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() noexcept { return rng_; }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// n points uniform in the square [-1, 1]^2.
  std::vector<Point<double>> points_in_square(std::size_t n) {
    std::vector<Point<double>> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.emplace_back(uniform(-1, 1), uniform(-1, 1));
    return pts;
  }

  /// Sorted angles in [0, 2pi) with a minimum gap, so consecutive vertices never coincide.
  std::vector<double> sorted_angles(std::size_t n, double min_gap = 1e-3) {
    while (true) {
      std::vector<double> th(n);
      for (auto& t : th) t = uniform(0, 2 * std::numbers::pi);
      std::sort(th.begin(), th.end());
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        const double next = i + 1 < n ? th[i + 1] : th[0] + 2 * std::numbers::pi;
        if (next - th[i] < min_gap) ok = false;
      }
      if (ok) return th;
    }
  }

  /// Convex counterclockwise n-gon: vertices on a random rotated, translated
  /// ellipse at sorted angles.
  PolygonPath<double> convex_polygon(std::size_t n) {
    const auto th = sorted_angles(n, 0.05);
    const double a = uniform(0.5, 2.0), b = uniform(0.5, 2.0), rot = uniform(0, 2 * std::numbers::pi);
    const double cx = uniform(-1, 1), cy = uniform(-1, 1);
    std::vector<Point<double>> pts;
    pts.reserve(n);
    for (double t : th) {
      const double ex = a * std::cos(t), ey = b * std::sin(t);
      pts.emplace_back(cx + ex * std::cos(rot) - ey * std::sin(rot), cy + ex * std::sin(rot) + ey * std::cos(rot));
    }
    return PolygonPath<double>(std::move(pts));
  }

  /// n counterclockwise points on a circle of the given radius about the origin.
  std::vector<Point<double>> concyclic_points(std::size_t n, double radius = 1.0, double min_gap = 0.05) {
    std::vector<Point<double>> pts;
    for (double t : sorted_angles(n, min_gap)) pts.emplace_back(radius * std::cos(t), radius * std::sin(t));
    return pts;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cyclogon::geom
