#pragma once

// Reference two-qubit states and seeded random states.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include "geodiscord/bloch.hpp"

namespace geodiscord {

namespace preset {

/// p |Psi_phi><Psi_phi| + (1 - p) |00><00|, |Psi_phi> = (|01> + e^{i phi}|10>)/sqrt 2.
struct HState {
  double p = 0.5;
  double phi = 0.0;
};
/// x = y = 0, T = diag(c1, c2, c3).
struct BellDiagonal {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
};
/// |psi> = sum a_ij |ij>; amplitudes must be normalized.
struct Pure {
  std::array<Complex, 4> amplitudes{Complex(1.0), Complex(0.0), Complex(0.0), Complex(0.0)};
};
/// p |Psi-><Psi-| + (1 - p) I / 4.
struct Werner {
  double p = 0.5;
};
/// x = y = [1,1,1]/4, T = diag(1,-1,0)/4.
struct Example1 {};
/// x = y = [1,1,1]/4, T = diag(1,1,0)/4.
struct Example2 {};
/// x = [1,2,3]/6, y = 6x/7, T = diag(1,2,3)/8.
struct Example3 {};
/// diag(p00, p01, p10, p11) in the computational basis.
struct CcDiag {
  std::array<double, 4> probabilities{0.25, 0.25, 0.25, 0.25};
};

}  // namespace preset

using PresetId = std::variant<preset::HState, preset::BellDiagonal, preset::Pure,
                              preset::Werner, preset::Example1, preset::Example2,
                              preset::Example3, preset::CcDiag>;

/// Exact Bloch form of a preset. Throws InvalidParameters when the
/// parameters do not describe a state.
BlochForm make(const PresetId& id);

/// Parses "name" or "name:key=value,key=value". Names: hstate (p, phi),
/// bell (c1, c2, c3), werner (p), pure (re00, im00, ..., re11, im11),
/// cc (p00, p01, p10, p11), example1, example2, example3.
PresetId parse_preset(const std::string& text);

/// Preset family name as accepted by parse_preset.
std::string preset_name(const PresetId& id);

/// mt19937_64 with a Box-Muller normal transform, so streams are fixed by
/// the seed and the standard engine definition alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Standard normal.
  double normal();
  /// Haar-random rotation in SO(3).
  Mat3 rotation();
  Vec3 unit_vector();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// G G^dagger / tr(G G^dagger) with G a 4 x rank matrix of independent
/// standard complex normal entries drawn from Rng(seed) in row-major order.
BlochForm random_state(int rank, std::uint64_t seed);

}  // namespace geodiscord
