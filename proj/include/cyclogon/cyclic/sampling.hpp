#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cyclogon/cyclic/pentagon.hpp"
#include "cyclogon/geom/random.hpp"

namespace cyclogon::cyclic {

/// Side lengths of a random convex pentagon inscribed in a circle of random
/// radius, in the a_i labeling (edge (i, i+1) is a_{i+3}).
inline std::array<double, 5> random_cyclic_sides(geom::ConfigGenerator& gen) {
  const double radius = gen.uniform(0.5, 2.0);
  const auto pts = gen.concyclic_points(5, radius, 0.15);
  std::array<double, 5> a{};
  for (std::size_t v = 0; v < 5; ++v) a[(v + 3) % 5] = geom::distance(pts[v], pts[(v + 1) % 5]);
  return a;
}

struct OracleSample {
  std::array<double, 5> sides{};
  CyclicPentagonSolution<double> sol;
};

/// Seeded oracle instances; the same seed always yields the same list.
inline std::vector<OracleSample> oracle_samples(std::uint64_t seed, std::size_t count) {
  geom::ConfigGenerator gen(seed);
  std::vector<OracleSample> out;
  out.reserve(count);
  while (out.size() < count) {
    const auto a = random_cyclic_sides(gen);
    out.push_back({a, construct_cyclic_pentagon(SideLengths5<double>(a))});
  }
  return out;
}

}  // namespace cyclogon::cyclic
