#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "geodiscord/presets.hpp"
#include "geodiscord/sphere.hpp"

namespace gd = geodiscord;
using gd::Mat3;
using gd::Vec3;

TEST(Lattices, UnitNormAndCoverage) {
  const auto full = gd::fibonacci_sphere(1000);
  const auto half = gd::fibonacci_hemisphere(1000);
  ASSERT_EQ(full.size(), 1000u);
  ASSERT_EQ(half.size(), 1000u);
  Vec3 mean = Vec3::Zero();
  for (const Vec3& p : full) {
    EXPECT_NEAR(p.norm(), 1.0, 1e-14);
    mean += p;
  }
  EXPECT_LT((mean / 1000.0).norm(), 1e-2);
  for (const Vec3& p : half) {
    EXPECT_NEAR(p.norm(), 1.0, 1e-14);
    EXPECT_GE(p.z(), 0.0);
  }
  // every direction has a lattice point (or its antipode) within a few spacings
  gd::Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    const Vec3 d = rng.unit_vector();
    double best = 0.0;
    for (const Vec3& p : half) best = std::max(best, std::abs(p.dot(d)));
    EXPECT_GT(best, std::cos(0.15));
  }
}

TEST(Lattices, HalfCircle) {
  const auto ring = gd::half_circle(Vec3::UnitX(), Vec3::UnitY(), 4);
  ASSERT_EQ(ring.size(), 4u);
  EXPECT_NEAR(ring[2].y(), 1.0, 1e-15);
  for (const Vec3& p : ring) EXPECT_NEAR(p.z(), 0.0, 1e-15);
}

TEST(LatticeRotation, IdentityForSeedZeroOrthogonalOtherwise) {
  EXPECT_EQ(gd::lattice_rotation(0), Mat3::Identity());
  const Mat3 r = gd::lattice_rotation(17);
  EXPECT_LT((r * r.transpose() - Mat3::Identity()).norm(), 1e-14);
  EXPECT_NEAR(r.determinant(), 1.0, 1e-14);
  EXPECT_EQ(r, gd::lattice_rotation(17));
}

TEST(MaximizeOnSphere, QuadraticFormsReachTopEigenvalue) {
  gd::Rng rng(99);
  for (int k = 0; k < 50; ++k) {
    Mat3 a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = rng.normal();
    a = 0.5 * (a + a.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Mat3> es(a);
    const auto f = [&a](const Vec3& v) { return v.dot(a * v); };
    for (std::uint64_t seed : {0ULL, 5ULL}) {
      gd::OptimizerConfig cfg;
      cfg.seed = seed;
      const gd::SphereMaximum m = gd::maximize_on_sphere(f, cfg);
      EXPECT_NEAR(m.value, es.eigenvalues()[2], 1e-14);
      EXPECT_NEAR(m.argmax.norm(), 1.0, 1e-14);
      EXPECT_GT(m.evaluations, cfg.lattice_points);
    }
  }
}

TEST(MaximizeOnSphere, NonSmoothObjective) {
  // max of two quadratic forms has a ridge where they cross
  const Mat3 a = Vec3(1.0, 0.2, 0.0).asDiagonal();
  const Mat3 b = Vec3(0.0, 0.3, 0.9).asDiagonal();
  const auto f = [&](const Vec3& v) { return std::max(v.dot(a * v), v.dot(b * v)) - 0.1 * v.x() * v.z(); };
  const gd::SphereMaximum m = gd::maximize_on_sphere(f, {});
  // reference: dense scan plus the optimizer's own larger value
  double ref = -1.0;
  for (const Vec3& p : gd::fibonacci_hemisphere(200000)) ref = std::max(ref, f(p));
  EXPECT_GE(m.value, ref - 1e-12);
  EXPECT_LT(m.value - ref, 1e-5);
}
