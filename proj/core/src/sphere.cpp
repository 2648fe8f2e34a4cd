#include "geodiscord/sphere.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace geodiscord {

namespace {

constexpr double kGoldenAngle = 2.399963229728653;  // pi (3 - sqrt 5)
constexpr int kMaxEvaluationsPerRun = 4000;
constexpr int kMaxRestarts = 4;

void tangent_basis(const Vec3& s, Vec3& e1, Vec3& e2) {
  const Vec3 helper = std::abs(s.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  e1 = (helper - helper.dot(s) * s).normalized();
  e2 = s.cross(e1);
}

struct Vertex {
  std::array<double, 2> uv;
  double cost;  // -f
};

// One Nelder-Mead run in the chart centred at `centre`.
SphereMaximum nelder_mead(const SphereFunction& f, const Vec3& centre, double step,
                          double tol) {
  Vec3 e1, e2;
  tangent_basis(centre, e1, e2);
  int evals = 0;
  auto point = [&](const std::array<double, 2>& uv) -> Vec3 {
    return (centre + uv[0] * e1 + uv[1] * e2).normalized();
  };
  auto cost = [&](const std::array<double, 2>& uv) {
    ++evals;
    return -f(point(uv));
  };

  std::array<Vertex, 3> s;
  s[0] = {{0.0, 0.0}, 0.0};
  s[1] = {{step, 0.0}, 0.0};
  s[2] = {{0.0, step}, 0.0};
  for (auto& v : s) v.cost = cost(v.uv);

  auto combine = [](const std::array<double, 2>& a, const std::array<double, 2>& b,
                    double t) {
    // a + t (b - a)
    return std::array<double, 2>{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };

  while (evals < kMaxEvaluationsPerRun) {
    std::sort(s.begin(), s.end(),
              [](const Vertex& a, const Vertex& b) { return a.cost < b.cost; });
    double size = 0.0;
    for (int k = 1; k < 3; ++k)
      size = std::max(size, std::hypot(s[k].uv[0] - s[0].uv[0], s[k].uv[1] - s[0].uv[1]));
    if (size < tol) break;

    const std::array<double, 2> c{(s[0].uv[0] + s[1].uv[0]) / 2.0,
                                  (s[0].uv[1] + s[1].uv[1]) / 2.0};
    const auto xr = combine(c, s[2].uv, -1.0);
    const double fr = cost(xr);
    if (fr < s[0].cost) {
      const auto xe = combine(c, s[2].uv, -2.0);
      const double fe = cost(xe);
      s[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < s[1].cost) {
      s[2] = {xr, fr};
    } else {
      const bool outside = fr < s[2].cost;
      const auto xc = outside ? combine(c, xr, 0.5) : combine(c, s[2].uv, 0.5);
      const double fc = cost(xc);
      if (fc < std::min(fr, s[2].cost)) {
        s[2] = {xc, fc};
      } else {
        for (int k = 1; k < 3; ++k) {
          s[k].uv = combine(s[0].uv, s[k].uv, 0.5);
          s[k].cost = cost(s[k].uv);
        }
      }
    }
  }
  const auto best = std::min_element(
      s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.cost < b.cost; });
  return SphereMaximum{point(best->uv), -best->cost, evals};
}

}  // namespace

std::vector<Vec3> fibonacci_sphere(int n) {
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double a = kGoldenAngle * k;
    out.emplace_back(r * std::cos(a), r * std::sin(a), z);
  }
  return out;
}

std::vector<Vec3> fibonacci_hemisphere(int n) {
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) {
    const double z = 1.0 - (k + 0.5) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double a = kGoldenAngle * k;
    out.emplace_back(r * std::cos(a), r * std::sin(a), z);
  }
  return out;
}

std::vector<Vec3> half_circle(const Vec3& u, const Vec3& v, int n) {
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) {
    const double a = std::numbers::pi * k / n;
    out.push_back((std::cos(a) * u + std::sin(a) * v).normalized());
  }
  return out;
}

Mat3 lattice_rotation(std::uint64_t seed) {
  if (seed == 0) return Mat3::Identity();
  std::mt19937_64 gen(seed);
  // unit quaternion from three uniforms (Shoemake)
  auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  const double u1 = uniform(), u2 = uniform(), u3 = uniform();
  const double two_pi = 2.0 * std::numbers::pi;
  Eigen::Quaterniond q(std::sqrt(u1) * std::cos(two_pi * u3),
                       std::sqrt(1.0 - u1) * std::sin(two_pi * u2),
                       std::sqrt(1.0 - u1) * std::cos(two_pi * u2),
                       std::sqrt(u1) * std::sin(two_pi * u3));
  return q.normalized().toRotationMatrix();
}

SphereMaximum refine_on_sphere(const SphereFunction& f, const Vec3& start,
                               double initial_step, double tol) {
  SphereMaximum best{start.normalized(), f(start.normalized()), 1};
  double step = initial_step;
  for (int run = 0; run < kMaxRestarts; ++run) {
    const SphereMaximum r = nelder_mead(f, best.argmax, step, tol);
    best.evaluations += r.evaluations;
    if (r.value > best.value) {
      best.argmax = r.argmax;
      best.value = r.value;
    } else if (run > 0) {
      break;
    }
    // restart with a fresh chart and a smaller simplex
    step = std::max(100.0 * tol, step * 0.05);
  }
  return best;
}

SphereMaximum maximize_on_sphere(const SphereFunction& f, const OptimizerConfig& cfg) {
  const int n = std::max(cfg.lattice_points, 1);
  std::vector<Vec3> lattice = fibonacci_hemisphere(n);
  if (cfg.seed != 0) {
    const Mat3 rot = lattice_rotation(cfg.seed);
    for (auto& p : lattice) p = rot * p;
  }
  std::vector<double> values(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) values[i] = f(lattice[i]);

  std::vector<std::size_t> order(lattice.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

  SphereMaximum best{lattice[order[0]], values[order[0]], static_cast<int>(lattice.size())};
  const double spacing = std::sqrt(2.0 * std::numbers::pi / n);
  const int starts = std::clamp(cfg.refine_starts, 0, static_cast<int>(lattice.size()));
  for (int s = 0; s < starts; ++s) {
    const SphereMaximum r = refine_on_sphere(f, lattice[order[s]], spacing, cfg.tol);
    best.evaluations += r.evaluations;
    if (r.value > best.value) {
      best.argmax = r.argmax;
      best.value = r.value;
    }
  }
  return best;
}

}  // namespace geodiscord
