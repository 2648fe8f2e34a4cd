#include "geodiscord/oracle.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace geodiscord {

namespace {

constexpr int kRefineIterations = 60;
constexpr int kMaxMovesPerLine = 200;
constexpr long long kMaxRefineEvaluations = 2000000;

Vec3 direction(double theta, double phi) {
  return Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
              std::cos(theta));
}

double distance_for(const BlochForm& b, const std::array<double, 4>& angles) {
  const MeasurementPair pair{Versor(direction(angles[0], angles[1])),
                             Versor(direction(angles[2], angles[3]))};
  return hs_distance_sq(b, measure_ab(b, pair));
}

}  // namespace

GridResult grid_cc_search(const BlochForm& b, const GridSpec& grid) {
  if (grid.resolution < 8) throw InvalidParameters("grid resolution must be at least 8");
  validate(from_bloch(b));

  const int res = grid.resolution;
  const double dtheta = 0.5 * std::numbers::pi / res;
  const double dphi = 2.0 * std::numbers::pi / res;

  struct Node {
    double theta, phi;
    Versor v;
  };
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>((res + 1) * res));
  for (int i = 0; i <= res; ++i)
    for (int j = 0; j < res; ++j)
      nodes.push_back({i * dtheta, j * dphi, Versor(direction(i * dtheta, j * dphi))});

  GridResult out;
  double best = std::numeric_limits<double>::infinity();
  std::array<double, 4> best_angles{};
  for (const Node& a : nodes) {
    for (const Node& c : nodes) {
      const double d = hs_distance_sq(b, measure_ab(b, {a.v, c.v}));
      ++out.evaluations;
      if (d < best) {
        best = d;
        best_angles = {a.theta, a.phi, c.theta, c.phi};
      }
    }
  }

  const long long grid_evaluations = out.evaluations;
  if (grid.refine) {
    // Compass search: sweep the four coordinates at a fixed step and halve
    // the step only after a sweep without progress.
    std::array<double, 4> step{dtheta, dphi, dtheta, dphi};
    for (int halvings = 0; halvings < kRefineIterations;) {
      bool improved = false;
      for (int k = 0; k < 4; ++k) {
        for (double sign : {1.0, -1.0}) {
          for (int move = 0; move < kMaxMovesPerLine; ++move) {
            std::array<double, 4> trial = best_angles;
            trial[k] += sign * step[k];
            const double d = distance_for(b, trial);
            ++out.evaluations;
            if (!(d < best)) break;
            best = d;
            best_angles = trial;
            improved = true;
          }
        }
      }
      if (improved && out.evaluations < kMaxRefineEvaluations + grid_evaluations) continue;
      for (double& s : step) s *= 0.5;
      ++halvings;
      if (step[0] < grid.tol && step[1] < grid.tol) break;
    }
  }

  out.value = best;
  out.pair = MeasurementPair{Versor(direction(best_angles[0], best_angles[1])),
                             Versor(direction(best_angles[2], best_angles[3]))}
                 .canonical();
  return out;
}

double grid_cc_discord(const BlochForm& b, const GridSpec& grid) {
  return grid_cc_search(b, grid).value;
}

double check_observation2(const BlochForm& b, const MeasurementPair& pair) {
  const BlochForm measured = measure_ab(b, pair);
  return std::abs(hs_distance_sq(b, measured) -
                  (purity_norm_sq(b) - purity_norm_sq(measured)));
}

}  // namespace geodiscord
