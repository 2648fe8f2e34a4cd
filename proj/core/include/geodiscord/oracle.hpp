#pragma once

// Brute-force reference computations for the symmetric discord. These search
// over both measurement directions directly and share nothing with the
// single-versor reduction used by cc_discord.

#include "geodiscord/bloch.hpp"
#include "geodiscord/measurements.hpp"

namespace geodiscord {

struct GridSpec {
  int resolution = 32;  // points per angle, >= 8
  bool refine = true;
  double tol = 1e-12;   // final coordinate-descent step
};

struct GridResult {
  double value = 0.0;
  MeasurementPair pair;
  long long evaluations = 0;
};

/// min over (theta_x, phi_x, theta_y, phi_y) of ||rho - M(rho)||^2, with
/// theta on [0, pi/2] and phi on [0, 2 pi), optionally followed by
/// coordinate descent from the best grid point.
GridResult grid_cc_search(const BlochForm& b, const GridSpec& grid);
double grid_cc_discord(const BlochForm& b, const GridSpec& grid);

/// |hs_distance_sq(b, M(b)) - (||b||^2 - ||M(b)||^2)| for the product
/// measurement defined by `pair`.
double check_observation2(const BlochForm& b, const MeasurementPair& pair);

}  // namespace geodiscord
