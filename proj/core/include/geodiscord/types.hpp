#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace geodiscord {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Complex = std::complex<double>;

/// Raised when a matrix or Bloch form fails the density-matrix checks
/// (Hermiticity, unit trace, positivity).
class InvalidState : public std::runtime_error {
 public:
  explicit InvalidState(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by preset constructors on out-of-range parameters.
class InvalidParameters : public std::invalid_argument {
 public:
  explicit InvalidParameters(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Raised when a top eigenvector is requested from an eigenspace of
/// dimension larger than one.
class DegenerateTop : public std::runtime_error {
 public:
  explicit DegenerateTop(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geodiscord
