#include "geodiscord/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace geodiscord {

namespace {

constexpr double kDiscriminantTol = 1e-12;
constexpr double kResidualTol = 1e-11;

SymEigen3 sorted(const std::array<double, 3>& vals, const std::array<Vec3, 3>& vecs) {
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return vals[i] > vals[j]; });
  SymEigen3 out;
  for (int k = 0; k < 3; ++k) {
    out.values[k] = vals[order[k]];
    out.vectors[k] = canonical_sign(vecs[order[k]].normalized());
  }
  return out;
}

// Null vector of (a - lambda I) from the best-conditioned row cross product.
Vec3 null_vector(const Mat3& a, double lambda) {
  const Mat3 m = a - lambda * Mat3::Identity();
  const Vec3 c01 = m.row(0).cross(m.row(1));
  const Vec3 c02 = m.row(0).cross(m.row(2));
  const Vec3 c12 = m.row(1).cross(m.row(2));
  const double n01 = c01.squaredNorm(), n02 = c02.squaredNorm(), n12 = c12.squaredNorm();
  if (n01 >= n02 && n01 >= n12) return c01 / std::sqrt(n01);
  if (n02 >= n12) return c02 / std::sqrt(n02);
  return c12 / std::sqrt(n12);
}

bool analytic_path(const Mat3& a, SymEigen3& out) {
  const double scale = a.cwiseAbs().maxCoeff();
  if (scale == 0.0) return false;
  const double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  const double q = a.trace() / 3.0;
  const double d0 = a(0, 0) - q, d1 = a(1, 1) - q, d2 = a(2, 2) - q;
  const double p = std::sqrt((d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * off) / 6.0);
  if (p <= kDiscriminantTol * scale) return false;
  const Mat3 b = (a - q * Mat3::Identity()) / p;
  const double r = std::clamp(b.determinant() / 2.0, -1.0, 1.0);
  if (1.0 - r * r < kDiscriminantTol) return false;
  const double phi = std::acos(r) / 3.0;
  const double l1 = q + 2.0 * p * std::cos(phi);
  const double l3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double l2 = 3.0 * q - l1 - l3;
  const Vec3 v1 = null_vector(a, l1);
  Vec3 v3 = null_vector(a, l3);
  v3 = (v3 - v3.dot(v1) * v1).normalized();
  const Vec3 v2 = v3.cross(v1);
  const std::array<double, 3> vals{l1, l2, l3};
  const std::array<Vec3, 3> vecs{v1, v2, v3};
  for (int k = 0; k < 3; ++k) {
    if (!vecs[k].allFinite()) return false;
    if ((a * vecs[k] - vals[k] * vecs[k]).norm() > kResidualTol * scale) return false;
  }
  out = sorted(vals, vecs);
  out.analytic = true;
  return true;
}

}  // namespace

Vec3 canonical_sign(const Vec3& v) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v[i]) > 1e-12) return v[i] < 0 ? Vec3(-v) : v;
  }
  return v;
}

SymEigen3 eigen_sym3_jacobi(const Mat3& input) {
  Mat3 a = 0.5 * (input + input.transpose());
  Mat3 v = Mat3::Identity();
  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    if (off == 0.0) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Mat3 rot = Mat3::Identity();
        rot(p, p) = c;
        rot(q, q) = c;
        rot(p, q) = s;
        rot(q, p) = -s;
        a = rot.transpose() * a * rot;
        a(p, q) = a(q, p) = 0.0;
        v = v * rot;
      }
    }
  }
  const std::array<double, 3> vals{a(0, 0), a(1, 1), a(2, 2)};
  const std::array<Vec3, 3> vecs{v.col(0), v.col(1), v.col(2)};
  SymEigen3 out = sorted(vals, vecs);
  out.analytic = false;
  return out;
}

SymEigen3 eigen_sym3(const Mat3& a) {
  const Mat3 sym = 0.5 * (a + a.transpose());
  SymEigen3 out;
  if (analytic_path(sym, out)) return out;
  return eigen_sym3_jacobi(sym);
}

double degeneracy_tolerance(const SymEigen3& e) {
  const double scale = std::max(std::abs(e.values[0]), std::abs(e.values[2]));
  return std::max(kDegeneracyRelTol * scale, kDegeneracyAbsTol);
}

int top_multiplicity(const SymEigen3& e) {
  const double tol = degeneracy_tolerance(e);
  int m = 1;
  while (m < 3 && e.values[0] - e.values[m] < tol) ++m;
  return m;
}

std::vector<std::vector<int>> eigen_clusters(const SymEigen3& e) {
  const double tol = degeneracy_tolerance(e);
  std::vector<std::vector<int>> out{{0}};
  for (int k = 1; k < 3; ++k) {
    if (e.values[out.back().front()] - e.values[k] < tol)
      out.back().push_back(k);
    else
      out.push_back({k});
  }
  return out;
}

}  // namespace geodiscord
