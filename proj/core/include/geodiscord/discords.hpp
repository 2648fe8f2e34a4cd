#pragma once

// Geometric discords of two-qubit states.
//
// D_A and D_B have closed forms through the top eigenpairs of
//   K_x = |x><x| + T T^T,   K_y = |y><y| + T^T T,
// with D_A = (tr K_x - k_x) / 4. The symmetric discord D_S reduces to a
// maximization over a single versor x_S:
//   D_S = ||rho||^2 - (1 + max_x [lambda_y(x) + <x|x_vec>^2]) / 4,
// where lambda_y(x) is the top eigenvalue of T^T|x><x|T + |y><y|.

#include <array>

#include "geodiscord/bloch.hpp"
#include "geodiscord/linalg.hpp"
#include "geodiscord/measurements.hpp"
#include "geodiscord/sphere.hpp"

namespace geodiscord {

struct AsymDiscordResult {
  double value = 0.0;
  Versor k_hat;
  double k_max = 0.0;
  BlochForm closest_state;
  bool degenerate = false;
  std::array<Versor, 3> eigen_basis;    // descending eigenvalues
  std::array<double, 3> eigen_values{};
};

struct CcDiscordResult {
  double value = 0.0;
  Versor x_hat;
  Versor y_hat;
  BlochForm closest_state;
  int optimizer_evals = 0;
  bool symmetric_pair = false;
};

Mat3 k_matrix_x(const BlochForm& b);
Mat3 k_matrix_y(const BlochForm& b);

/// Closed-form CQ discord (measurement on qubit A).
AsymDiscordResult cq_discord(const BlochForm& b);
/// Closed-form QC discord (measurement on qubit B).
AsymDiscordResult qc_discord(const BlochForm& b);

/// lambda_y(x_hat) + <x_hat|x>^2, the best measured purity (times 4, minus 1)
/// reachable with qubit-A direction `x_hat`.
double cc_objective(const BlochForm& b, const Versor& x_hat);
double cc_objective(const BlochForm& b, const Vec3& x_hat);

/// Best qubit-B direction for a fixed qubit-A direction: the top eigenvector
/// of T^T|x_hat><x_hat|T + |y><y|. Throws DegenerateTop if that eigenvalue
/// is degenerate.
Versor partner_versor(const BlochForm& b, const Versor& x_hat);

/// Symmetric (CC) discord by lattice search plus local refinement.
CcDiscordResult cc_discord(const BlochForm& b, const OptimizerConfig& cfg = {});

/// u(x, y) = <x|T|y>^2 + <x|x_vec>^2 + <y|y_vec>^2.
double pair_objective(const BlochForm& b, const Vec3& x_hat, const Vec3& y_hat);

/// max over x of u(x, x), the objective restricted to symmetric measurements.
SphereMaximum symmetric_pair_maximum(const BlochForm& b, const OptimizerConfig& cfg = {});

}  // namespace geodiscord
