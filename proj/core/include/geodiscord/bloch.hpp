#pragma once

// Two-qubit states in matrix and Bloch form.
//
// Pauli convention: sigma_1 = X, sigma_2 = Y, sigma_3 = Z in the
// computational basis, with qubit A the left tensor factor, so the basis
// index of |ab> is 2a + b.
//
//   rho = (I(x)I + x.sigma(x)I + I(x)y.sigma + sum_ij T_ij sigma_i(x)sigma_j) / 4

#include <array>
#include <cmath>

#include "geodiscord/types.hpp"

namespace geodiscord {

inline constexpr double kHermiticityTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-10;

/// A 4x4 complex matrix. Nothing is enforced on construction; call
/// validate() or go through to_bloch() to check the state conditions.
struct DensityMatrix {
  Mat4c entries = Mat4c::Identity() / 4.0;
};

/// Local Bloch vectors of qubits A and B and the correlation matrix.
/// A BlochForm need not describe a physical state.
struct BlochForm {
  Vec3 x = Vec3::Zero();
  Vec3 y = Vec3::Zero();
  Mat3 T = Mat3::Zero();
};

/// Unit 3-vector fixing a projective measurement direction n.sigma.
class Versor {
 public:
  Versor() : v_(0.0, 0.0, 1.0) {}
  /// Normalizes `v`; throws std::invalid_argument for a (near) zero vector.
  explicit Versor(const Vec3& v);
  static Versor from_angles(double theta, double phi);

  const Vec3& vec() const { return v_; }
  double operator[](int i) const { return v_[i]; }
  double dot(const Vec3& other) const { return v_.dot(other); }

  /// Same measurement, sign flipped so the first component with
  /// |c| > 1e-12 is positive.
  Versor canonical() const;

  /// n and -n define the same measurement.
  bool same_axis(const Versor& other, double tol = 1e-9) const {
    return std::abs(v_.dot(other.v_)) > 1.0 - tol;
  }

 private:
  Vec3 v_;
};

/// sigma_0 = I, then X, Y, Z.
const std::array<Mat2c, 4>& pauli_matrices();

/// Throws InvalidState describing the first failed check.
void validate(const DensityMatrix& rho);
bool is_valid(const DensityMatrix& rho);
bool is_valid_state(const BlochForm& b);

BlochForm to_bloch(const DensityMatrix& rho);
DensityMatrix from_bloch(const BlochForm& b, bool check = false);

/// tr(rho^2) = (1 + <x|x> + <y|y> + tr(T T^T)) / 4
double purity_norm_sq(const BlochForm& b);

/// Squared Hilbert-Schmidt distance ||rho_a - rho_b||^2.
double hs_distance_sq(const BlochForm& a, const BlochForm& b);

/// Exchanges the two qubits: x <-> y, T <-> T^T.
BlochForm swap_parties(const BlochForm& b);

/// Applies local rotations: (O_A x, O_B y, O_A T O_B^T).
BlochForm rotate_locally(const BlochForm& b, const Mat3& rot_a, const Mat3& rot_b);

/// Mixes two Bloch forms: (1 - w) a + w b.
BlochForm mix(const BlochForm& a, const BlochForm& b, double w);

}  // namespace geodiscord
