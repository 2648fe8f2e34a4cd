#include "geodiscord/bloch.hpp"

#include <sstream>

#include <Eigen/Eigenvalues>

namespace geodiscord {

namespace {

Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

std::array<Mat4c, 16> make_two_qubit_paulis() {
  const auto& s = pauli_matrices();
  std::array<Mat4c, 16> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[4 * i + j] = kron(s[i], s[j]);
  return out;
}

// sigma_i (x) sigma_j, i, j in {0..3}
const Mat4c& pauli2(int i, int j) {
  static const std::array<Mat4c, 16> table = make_two_qubit_paulis();
  return table[4 * i + j];
}

double expectation(const Mat4c& rho, int i, int j) {
  return (rho * pauli2(i, j)).trace().real();
}

}  // namespace

Versor::Versor(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 1e-300) || !std::isfinite(n))
    throw std::invalid_argument("versor from zero or non-finite vector");
  v_ = v / n;
}

Versor Versor::from_angles(double theta, double phi) {
  return Versor(Vec3(std::sin(theta) * std::cos(phi),
                     std::sin(theta) * std::sin(phi), std::cos(theta)));
}

Versor Versor::canonical() const {
  Versor out = *this;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v_[i]) > 1e-12) {
      if (v_[i] < 0) out.v_ = -v_;
      break;
    }
  }
  return out;
}

const std::array<Mat2c, 4>& pauli_matrices() {
  static const std::array<Mat2c, 4> table = [] {
    const Complex i(0.0, 1.0);
    std::array<Mat2c, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return table;
}

void validate(const DensityMatrix& rho) {
  const Mat4c& m = rho.entries;
  if (!m.allFinite()) throw InvalidState("matrix has non-finite entries");
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermiticityTol) {
    std::ostringstream os;
    os << "matrix is not Hermitian (max |M - M^dagger| = " << herm << ")";
    throw InvalidState(os.str());
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "trace is " << tr.real() << " (expected 1)";
    throw InvalidState(os.str());
  }
  const Mat4c h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat4c> es(h, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  if (lmin < -kPositivityTol) {
    std::ostringstream os;
    os << "matrix is not positive semidefinite (min eigenvalue " << lmin << ")";
    throw InvalidState(os.str());
  }
}

bool is_valid(const DensityMatrix& rho) {
  try {
    validate(rho);
    return true;
  } catch (const InvalidState&) {
    return false;
  }
}

bool is_valid_state(const BlochForm& b) { return is_valid(from_bloch(b)); }

BlochForm to_bloch(const DensityMatrix& rho) {
  validate(rho);
  BlochForm b;
  for (int i = 0; i < 3; ++i) {
    b.x[i] = expectation(rho.entries, i + 1, 0);
    b.y[i] = expectation(rho.entries, 0, i + 1);
    for (int j = 0; j < 3; ++j) b.T(i, j) = expectation(rho.entries, i + 1, j + 1);
  }
  return b;
}

DensityMatrix from_bloch(const BlochForm& b, bool check) {
  DensityMatrix rho;
  Mat4c m = pauli2(0, 0);
  for (int i = 0; i < 3; ++i) {
    m += b.x[i] * pauli2(i + 1, 0);
    m += b.y[i] * pauli2(0, i + 1);
    for (int j = 0; j < 3; ++j) m += b.T(i, j) * pauli2(i + 1, j + 1);
  }
  rho.entries = m / 4.0;
  if (check) validate(rho);
  return rho;
}

double purity_norm_sq(const BlochForm& b) {
  return (1.0 + b.x.squaredNorm() + b.y.squaredNorm() + b.T.squaredNorm()) / 4.0;
}

double hs_distance_sq(const BlochForm& a, const BlochForm& b) {
  return ((a.x - b.x).squaredNorm() + (a.y - b.y).squaredNorm() +
          (a.T - b.T).squaredNorm()) /
         4.0;
}

BlochForm swap_parties(const BlochForm& b) {
  return BlochForm{b.y, b.x, b.T.transpose()};
}

BlochForm rotate_locally(const BlochForm& b, const Mat3& rot_a, const Mat3& rot_b) {
  return BlochForm{rot_a * b.x, rot_b * b.y, rot_a * b.T * rot_b.transpose()};
}

BlochForm mix(const BlochForm& a, const BlochForm& b, double w) {
  return BlochForm{(1.0 - w) * a.x + w * b.x, (1.0 - w) * a.y + w * b.y,
                   (1.0 - w) * a.T + w * b.T};
}

}  // namespace geodiscord
