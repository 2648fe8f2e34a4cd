#include "geodiscord/presets.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace geodiscord {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameters(what);
}

BlochForm h_state(const preset::HState& s) {
  require(s.p >= 0.0 && s.p <= 1.0, "hstate: p must lie in [0, 1]");
  require(std::isfinite(s.phi), "hstate: phi must be finite");
  const double c = std::cos(s.phi), sn = std::sin(s.phi);
  BlochForm b;
  b.x = Vec3(0.0, 0.0, 1.0 - s.p);
  b.y = b.x;
  b.T << s.p * c, -s.p * sn, 0.0,
         s.p * sn, s.p * c, 0.0,
         0.0, 0.0, 1.0 - 2.0 * s.p;
  return b;
}

BlochForm bell_diagonal(const preset::BellDiagonal& s) {
  const double c1 = s.c1, c2 = s.c2, c3 = s.c3;
  // eigenvalues of the Bell-diagonal state
  const double l[4] = {1 - c1 - c2 - c3, 1 - c1 + c2 + c3, 1 + c1 - c2 + c3, 1 + c1 + c2 - c3};
  for (double v : l)
    require(v >= -4.0 * kPositivityTol,
            "bell: (c1, c2, c3) lies outside the physical tetrahedron");
  BlochForm b;
  b.T = Vec3(c1, c2, c3).asDiagonal();
  return b;
}

BlochForm pure_state(const preset::Pure& s) {
  Eigen::Vector4cd psi;
  for (int i = 0; i < 4; ++i) psi[i] = s.amplitudes[i];
  require(psi.allFinite(), "pure: amplitudes must be finite");
  require(std::abs(psi.squaredNorm() - 1.0) < 1e-10, "pure: amplitudes must be normalized");
  DensityMatrix rho{psi * psi.adjoint()};
  return to_bloch(rho);
}

BlochForm werner(const preset::Werner& s) {
  require(s.p >= -1.0 / 3.0 && s.p <= 1.0, "werner: p must lie in [-1/3, 1]");
  BlochForm b;
  b.T = -s.p * Mat3::Identity();
  return b;
}

BlochForm cc_diag(const preset::CcDiag& s) {
  const auto& q = s.probabilities;
  double total = 0.0;
  for (double v : q) {
    require(v >= 0.0 && std::isfinite(v), "cc: probabilities must be nonnegative");
    total += v;
  }
  require(std::abs(total - 1.0) < 1e-10, "cc: probabilities must sum to 1");
  BlochForm b;
  b.x = Vec3(0.0, 0.0, q[0] + q[1] - q[2] - q[3]);
  b.y = Vec3(0.0, 0.0, q[0] - q[1] + q[2] - q[3]);
  b.T(2, 2) = q[0] - q[1] - q[2] + q[3];
  return b;
}

using Params = std::map<std::string, double>;

double parse_number(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw InvalidParameters("preset parameter '" + key + "' is not a number: '" + text + "'");
  return v;
}

Params parse_params(const std::string& text) {
  Params out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InvalidParameters("expected key=value in preset parameters, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    out[key] = parse_number(key, item.substr(eq + 1));
  }
  return out;
}

double take(Params& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  const double v = it->second;
  params.erase(it);
  return v;
}

}  // namespace

BlochForm make(const PresetId& id) {
  return std::visit(
      Overloaded{
          [](const preset::HState& s) { return h_state(s); },
          [](const preset::BellDiagonal& s) { return bell_diagonal(s); },
          [](const preset::Pure& s) { return pure_state(s); },
          [](const preset::Werner& s) { return werner(s); },
          [](const preset::Example1&) {
            BlochForm b;
            b.x = Vec3::Constant(0.25);
            b.y = b.x;
            b.T = Vec3(0.25, -0.25, 0.0).asDiagonal();
            return b;
          },
          [](const preset::Example2&) {
            BlochForm b;
            b.x = Vec3::Constant(0.25);
            b.y = b.x;
            b.T = Vec3(0.25, 0.25, 0.0).asDiagonal();
            return b;
          },
          [](const preset::Example3&) {
            BlochForm b;
            b.x = Vec3(1.0, 2.0, 3.0) / 6.0;
            b.y = (6.0 / 7.0) * b.x;
            b.T = (Vec3(1.0, 2.0, 3.0) / 8.0).asDiagonal();
            return b;
          },
          [](const preset::CcDiag& s) { return cc_diag(s); },
      },
      id);
}

PresetId parse_preset(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  Params params = parse_params(colon == std::string::npos ? "" : text.substr(colon + 1));

  PresetId id;
  if (name == "hstate") {
    preset::HState s;
    s.p = take(params, "p", s.p);
    s.phi = take(params, "phi", s.phi);
    id = s;
  } else if (name == "bell") {
    preset::BellDiagonal s;
    s.c1 = take(params, "c1", 0.0);
    s.c2 = take(params, "c2", 0.0);
    s.c3 = take(params, "c3", 0.0);
    id = s;
  } else if (name == "werner") {
    preset::Werner s;
    s.p = take(params, "p", s.p);
    id = s;
  } else if (name == "pure") {
    preset::Pure s;
    const char* labels[4] = {"00", "01", "10", "11"};
    for (int i = 0; i < 4; ++i) {
      const std::string l = labels[i];
      s.amplitudes[i] = Complex(take(params, "re" + l, i == 0 ? 1.0 : 0.0),
                                take(params, "im" + l, 0.0));
    }
    id = s;
  } else if (name == "cc") {
    preset::CcDiag s;
    const char* labels[4] = {"p00", "p01", "p10", "p11"};
    for (int i = 0; i < 4; ++i) s.probabilities[i] = take(params, labels[i], 0.25);
    id = s;
  } else if (name == "example1") {
    id = preset::Example1{};
  } else if (name == "example2") {
    id = preset::Example2{};
  } else if (name == "example3") {
    id = preset::Example3{};
  } else {
    throw InvalidParameters("unknown preset '" + name + "'");
  }
  if (!params.empty())
    throw InvalidParameters("unknown parameter '" + params.begin()->first + "' for preset '" +
                            name + "'");
  return id;
}

std::string preset_name(const PresetId& id) {
  return std::visit(Overloaded{
                        [](const preset::HState&) { return std::string("hstate"); },
                        [](const preset::BellDiagonal&) { return std::string("bell"); },
                        [](const preset::Pure&) { return std::string("pure"); },
                        [](const preset::Werner&) { return std::string("werner"); },
                        [](const preset::Example1&) { return std::string("example1"); },
                        [](const preset::Example2&) { return std::string("example2"); },
                        [](const preset::Example3&) { return std::string("example3"); },
                        [](const preset::CcDiag&) { return std::string("cc"); },
                    },
                    id);
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller on (0, 1] x [0, 1)
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

Vec3 Rng::unit_vector() {
  Vec3 v;
  do {
    v = Vec3(normal(), normal(), normal());
  } while (v.norm() < 1e-12);
  return v.normalized();
}

Mat3 Rng::rotation() {
  Eigen::Quaterniond q(normal(), normal(), normal(), normal());
  return q.normalized().toRotationMatrix();
}

BlochForm random_state(int rank, std::uint64_t seed) {
  if (rank < 1 || rank > 4) throw InvalidParameters("random_state: rank must be in 1..4");
  Rng rng(seed);
  Eigen::MatrixXcd g(4, rank);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < rank; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(re, im) / std::numbers::sqrt2;
    }
  Mat4c rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return to_bloch(DensityMatrix{rho});
}

}  // namespace geodiscord
