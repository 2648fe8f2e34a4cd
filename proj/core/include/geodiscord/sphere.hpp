#pragma once

// Maximization of a continuous function over the unit sphere: a coarse
// Fibonacci lattice followed by Nelder-Mead refinement from the best lattice
// points. Each refinement runs in a tangent-plane chart centred on its start
// point, x(u, v) = normalize(s + u e1 + v e2), which has no pole singularity.

#include <cstdint>
#include <functional>
#include <vector>

#include "geodiscord/types.hpp"

namespace geodiscord {

struct OptimizerConfig {
  int lattice_points = 2048;
  int refine_starts = 8;
  double tol = 1e-10;  // simplex size at which refinement stops
  std::uint64_t seed = 0;  // nonzero seeds apply a random rotation to the lattice
};

struct SphereMaximum {
  Vec3 argmax = Vec3::UnitZ();
  double value = 0.0;
  int evaluations = 0;
};

using SphereFunction = std::function<double(const Vec3&)>;

/// `n` quasi-uniform points on the full sphere.
std::vector<Vec3> fibonacci_sphere(int n);

/// `n` quasi-uniform points on the upper hemisphere z >= 0. Enough for
/// objectives that are even in their argument.
std::vector<Vec3> fibonacci_hemisphere(int n);

/// `n` points on the half circle cos(a) u + sin(a) v, a = pi k / n.
std::vector<Vec3> half_circle(const Vec3& u, const Vec3& v, int n);

/// Rotation matrix drawn from a seeded generator; identity for seed 0.
Mat3 lattice_rotation(std::uint64_t seed);

/// Maximizes an even function f(n) = f(-n) over the unit sphere.
SphereMaximum maximize_on_sphere(const SphereFunction& f, const OptimizerConfig& cfg);

/// Nelder-Mead refinement from a single start point.
SphereMaximum refine_on_sphere(const SphereFunction& f, const Vec3& start,
                               double initial_step, double tol);

}  // namespace geodiscord
