#include "geodiscord/discords.hpp"

#include <cmath>

namespace geodiscord {

namespace {

void require_state(const BlochForm& b) { validate(from_bloch(b)); }

AsymDiscordResult asym_from_k(const Mat3& k) {
  const SymEigen3 e = eigen_sym3(k);
  AsymDiscordResult r;
  r.k_max = e.top_value();
  r.value = (k.trace() - r.k_max) / 4.0;
  r.k_hat = Versor(e.top());
  r.degenerate = top_multiplicity(e) > 1;
  for (int i = 0; i < 3; ++i) {
    r.eigen_basis[i] = Versor(e.vectors[i]);
    r.eigen_values[i] = e.values[i];
  }
  return r;
}

}  // namespace

Mat3 k_matrix_x(const BlochForm& b) {
  return b.x * b.x.transpose() + b.T * b.T.transpose();
}

Mat3 k_matrix_y(const BlochForm& b) {
  return b.y * b.y.transpose() + b.T.transpose() * b.T;
}

AsymDiscordResult cq_discord(const BlochForm& b) {
  require_state(b);
  AsymDiscordResult r = asym_from_k(k_matrix_x(b));
  r.closest_state = measure_a(b, r.k_hat);
  return r;
}

AsymDiscordResult qc_discord(const BlochForm& b) {
  require_state(b);
  AsymDiscordResult r = asym_from_k(k_matrix_y(b));
  r.closest_state = measure_b(b, r.k_hat);
  return r;
}

double cc_objective(const BlochForm& b, const Vec3& x_hat) {
  const Vec3 tx = b.T.transpose() * x_hat;  // T^T |x_hat>
  const double yy = b.y.squaredNorm();
  const double txx = tx.squaredNorm();  // <x_hat|T T^T|x_hat>
  const double h_plus = 0.5 * (yy + txx);
  const double h_minus = 0.5 * (yy - txx);
  const double cross = tx.dot(b.y);  // <x_hat|T|y>
  const double lambda = h_plus + std::sqrt(cross * cross + h_minus * h_minus);
  const double ax = x_hat.dot(b.x);
  return lambda + ax * ax;
}

double cc_objective(const BlochForm& b, const Versor& x_hat) {
  return cc_objective(b, x_hat.vec());
}

Versor partner_versor(const BlochForm& b, const Versor& x_hat) {
  const Vec3 tx = b.T.transpose() * x_hat.vec();
  const Mat3 m = tx * tx.transpose() + b.y * b.y.transpose();
  const SymEigen3 e = eigen_sym3(m);
  if (top_multiplicity(e) > 1)
    throw DegenerateTop("partner direction is not unique for this x_hat");
  return Versor(e.top()).canonical();
}

double pair_objective(const BlochForm& b, const Vec3& x_hat, const Vec3& y_hat) {
  const double t = x_hat.dot(b.T * y_hat);
  const double a = x_hat.dot(b.x);
  const double c = y_hat.dot(b.y);
  return t * t + a * a + c * c;
}

CcDiscordResult cc_discord(const BlochForm& b, const OptimizerConfig& cfg) {
  require_state(b);
  const SphereMaximum best = maximize_on_sphere(
      [&b](const Vec3& v) { return cc_objective(b, v); }, cfg);

  CcDiscordResult r;
  r.x_hat = Versor(best.argmax).canonical();
  try {
    r.y_hat = partner_versor(b, r.x_hat);
  } catch (const DegenerateTop&) {
    // every vector of the top eigenspace attains lambda_y
    const Vec3 tx = b.T.transpose() * r.x_hat.vec();
    const SymEigen3 e = eigen_sym3(tx * tx.transpose() + b.y * b.y.transpose());
    r.y_hat = Versor(e.top()).canonical();
  }
  r.value = purity_norm_sq(b) - (1.0 + best.value) / 4.0;
  r.closest_state = measure_ab(b, {r.x_hat, r.y_hat});
  r.optimizer_evals = best.evaluations;
  r.symmetric_pair = std::abs(r.x_hat.dot(r.y_hat.vec())) > 1.0 - 1e-8;
  return r;
}

SphereMaximum symmetric_pair_maximum(const BlochForm& b, const OptimizerConfig& cfg) {
  return maximize_on_sphere([&b](const Vec3& v) { return pair_objective(b, v, v); }, cfg);
}

}  // namespace geodiscord
