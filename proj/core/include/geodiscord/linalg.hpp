#pragma once

// Eigen-decomposition of real symmetric 3x3 matrices.
//
// The analytic route solves the characteristic cubic in trigonometric form.
// When the normalized cubic discriminant 1 - r^2 is within 1e-12 of zero,
// or the analytic eigenpairs fail a residual check, a cyclic Jacobi sweep
// takes over. Eigenvalues come out in descending order; eigenvectors are
// orthonormal and sign-canonical (first component with |c| > 1e-12 positive).

#include <array>
#include <vector>

#include "geodiscord/types.hpp"

namespace geodiscord {

/// Relative and absolute thresholds below which two eigenvalues count as equal.
inline constexpr double kDegeneracyRelTol = 1e-9;
inline constexpr double kDegeneracyAbsTol = 1e-12;

struct SymEigen3 {
  std::array<double, 3> values{};
  std::array<Vec3, 3> vectors{Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  bool analytic = false;  // false when the Jacobi fallback produced the result

  const Vec3& top() const { return vectors[0]; }
  double top_value() const { return values[0]; }
};

SymEigen3 eigen_sym3(const Mat3& a);
SymEigen3 eigen_sym3_jacobi(const Mat3& a);

/// Tolerance used to decide that two eigenvalues of `e` are degenerate.
double degeneracy_tolerance(const SymEigen3& e);

/// Dimension of the eigenspace of the largest eigenvalue.
int top_multiplicity(const SymEigen3& e);

/// Groups of eigenvector indices sharing one (degenerate) eigenvalue, in
/// descending eigenvalue order.
std::vector<std::vector<int>> eigen_clusters(const SymEigen3& e);

/// Flips the sign of `v` so its first component with |c| > 1e-12 is positive.
Vec3 canonical_sign(const Vec3& v);

}  // namespace geodiscord
