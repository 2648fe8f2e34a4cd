#include "geodiscord/measurements.hpp"

#include "geodiscord/discords.hpp"

namespace geodiscord {

BlochForm measure_a(const BlochForm& b, const Versor& n_hat) {
  const Vec3& n = n_hat.vec();
  const Mat3 p = n * n.transpose();
  return BlochForm{p * b.x, b.y, p * b.T};
}

BlochForm measure_b(const BlochForm& b, const Versor& m_hat) {
  const Vec3& m = m_hat.vec();
  const Mat3 q = m * m.transpose();
  return BlochForm{b.x, q * b.y, b.T * q};
}

BlochForm measure_ab(const BlochForm& b, const MeasurementPair& pair) {
  const Vec3& n = pair.n_hat.vec();
  const Vec3& m = pair.m_hat.vec();
  return BlochForm{n.dot(b.x) * n, m.dot(b.y) * m,
                   n.dot(b.T * m) * (n * m.transpose())};
}

double measured_purity(const BlochForm& b, const Vec3& n_hat, const Vec3& m_hat) {
  const double a = n_hat.dot(b.x);
  const double c = m_hat.dot(b.y);
  const double t = n_hat.dot(b.T * m_hat);
  return (1.0 + a * a + c * c + t * t) / 4.0;
}

bool is_cc_state(const BlochForm& b, double tol, const OptimizerConfig& cfg) {
  return cc_discord(b, cfg).value < tol;
}

}  // namespace geodiscord
