#pragma once

// Measurement-based upper bounds on the symmetric discord.
//
// With k_x, k_y the top eigenvectors of K_x, K_y and
//   L_x = |x><x| + T|k_y><k_y|T^T,   L_y = |y><y| + T^T|k_x><k_x|T,
// the adaptive bound measures (k_x, l_y) or (l_x, k_y) and keeps the better
// one; the nonadaptive bound measures (k_x, k_y). Both are Hilbert-Schmidt
// distances to an actual CC state, so
//   max(D_A, D_B) <= D_S <= D_aub <= D_nub.

#include <vector>

#include "geodiscord/bloch.hpp"
#include "geodiscord/measurements.hpp"
#include "geodiscord/sphere.hpp"

namespace geodiscord {

enum class BoundBranch { SPrime, SDoublePrime, S0 };

const char* to_string(BoundBranch branch);

struct BoundResult {
  double value = 0.0;
  BlochForm sigma;  // the CC state realizing the bound
  MeasurementPair directions;
  BoundBranch branch = BoundBranch::S0;
};

/// Points used to discretize degenerate eigenspaces.
struct DegenerateSampling {
  int circle = 360;
  int sphere = 812;
};

struct OptimizedBounds {
  BoundResult aub;
  BoundResult nub;
};

Mat3 l_matrix_x(const BlochForm& b, const Versor& k_y);
Mat3 l_matrix_y(const BlochForm& b, const Versor& k_x);

/// Bound realized by measuring `pair`: ||rho||^2 - ||M(rho)||^2.
BoundResult bound_for_pair(const BlochForm& b, const MeasurementPair& pair,
                           BoundBranch branch);

BoundResult nonadaptive_bound(const BlochForm& b);
BoundResult adaptive_bound(const BlochForm& b);

/// Minimizes both bounds over every choice of top eigenvectors when the top
/// eigenvalues of K or L are degenerate.
OptimizedBounds degenerate_optimized_bounds(const BlochForm& b,
                                            const DegenerateSampling& sampling = {});

/// Adaptive bound minimized over all eigenvectors of K and of the induced L,
/// not only the top ones.
BoundResult nonoptimal_optimized_aub(const BlochForm& b,
                                     const DegenerateSampling& sampling = {});

/// Rows: eigenvectors k^(i) of K_x (S') or K_y (S''), descending. Columns:
/// eigenvectors l^(ij) of the induced L_y^(i) or L_x^(i), descending. Entry:
/// ||sigma^(ij)||^2. Uses the solver's basis inside degenerate eigenspaces.
Mat3 nonoptimal_norm_table(const BlochForm& b, BoundBranch family);

struct IterationStep {
  int n = 0;
  double value = 0.0;      // running minimum of the bound
  double raw_value = 0.0;  // bound of this round alone
  double delta = 0.0;      // value - reference D_S
  MeasurementPair pair_sprime;
  MeasurementPair pair_sdprime;
  bool criterion = false;  // k_x = l_y and k_y = l_x (up to sign)
  bool recurrent = false;  // next directions repeat an earlier round
};

struct IterationTrace {
  std::vector<IterationStep> steps;
  double reference_ds = 0.0;
  bool stalled = false;
  bool converged = false;
};

struct IterationOptions {
  int max_iters = 50;
  double tol = 1e-14;
  /// Use every eigenvector of L, not only the top one, in each round.
  bool optimized = false;
  /// Final gap to D_S below which the run counts as converged.
  double convergence_gap = 1e-9;
  OptimizerConfig optimizer{};
};

IterationTrace iterate_adaptive(const BlochForm& b, const IterationOptions& options = {});

}  // namespace geodiscord
