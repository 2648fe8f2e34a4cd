#pragma once

// Local von Neumann measurements acting on Bloch forms. Measuring n.sigma on
// qubit A maps f(x, y, T) to f(P x, y, P T) with P = |n><n|; on qubit B it
// maps to f(x, Q y, T Q) with Q = |m><m|.

#include "geodiscord/bloch.hpp"
#include "geodiscord/sphere.hpp"

namespace geodiscord {

struct MeasurementPair {
  Versor n_hat;  // qubit A
  Versor m_hat;  // qubit B

  MeasurementPair canonical() const { return {n_hat.canonical(), m_hat.canonical()}; }
};

BlochForm measure_a(const BlochForm& b, const Versor& n_hat);
BlochForm measure_b(const BlochForm& b, const Versor& m_hat);
BlochForm measure_ab(const BlochForm& b, const MeasurementPair& pair);

/// Squared norm of measure_ab(b, pair) without forming the measured state:
/// (1 + <n|x>^2 + <m|y>^2 + <n|T|m>^2) / 4.
double measured_purity(const BlochForm& b, const Vec3& n_hat, const Vec3& m_hat);

/// True when the symmetric discord of `b` is below `tol`, i.e. the state is
/// diagonal in some product basis.
bool is_cc_state(const BlochForm& b, double tol, const OptimizerConfig& cfg = {});

}  // namespace geodiscord
