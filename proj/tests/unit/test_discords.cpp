#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "geodiscord/discords.hpp"
#include "geodiscord/presets.hpp"
#include "support/oracles.hpp"

namespace gd = geodiscord;
using gd::BlochForm;
using gd::Mat3;
using gd::Vec3;
using gd::Versor;
namespace oracle = geodiscord::testing;

namespace {

const double kSqrt3 = std::sqrt(3.0);

BlochForm shrink_until_valid(BlochForm b) {
  while (!gd::is_valid_state(b)) {
    b.x *= 0.9;
    b.y *= 0.9;
    b.T *= 0.9;
  }
  return b;
}

// Dense scan of hs distance to the measured state, computed from matrices.
double scan_cq_discord(const BlochForm& b, int n) {
  const gd::Mat4c rho = oracle::matrix_of(b);
  double best = 1e300;
  for (const Vec3& v : gd::fibonacci_hemisphere(n))
    best = std::min(best, oracle::hs_distance_sq_matrix(rho, oracle::sandwich(rho, v, Vec3::Zero())));
  return best;
}

}  // namespace

TEST(KMatrix, HStateIsDiagonal) {
  for (double p : {0.1, 0.5, 2.0 / 3, 0.9}) {
    for (double phi : {0.0, 0.7, std::numbers::pi / 2}) {
      const BlochForm h = gd::make(gd::preset::HState{p, phi});
      const double q = (1 - 2 * p) * (1 - 2 * p) + (1 - p) * (1 - p);
      const Mat3 expected = Vec3(p * p, p * p, q).asDiagonal();
      EXPECT_LT((gd::k_matrix_x(h) - expected).cwiseAbs().maxCoeff(), 1e-15);
      EXPECT_LT((gd::k_matrix_y(h) - expected).cwiseAbs().maxCoeff(), 1e-15);
    }
  }
}

TEST(KMatrix, ElementwiseConstruction) {
  for (const BlochForm& b : {gd::make(gd::preset::Example1{}), gd::random_state(3, 5)}) {
    const Mat3 kx = gd::k_matrix_x(b);
    const Mat3 ky = gd::k_matrix_y(b);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        double sx = b.x[i] * b.x[j];
        double sy = b.y[i] * b.y[j];
        for (int k = 0; k < 3; ++k) {
          sx += b.T(i, k) * b.T(j, k);
          sy += b.T(k, i) * b.T(k, j);
        }
        EXPECT_NEAR(kx(i, j), sx, 1e-16);
        EXPECT_NEAR(ky(i, j), sy, 1e-16);
      }
    }
  }
  EXPECT_EQ(gd::k_matrix_x(BlochForm{}), Mat3::Zero());
}

TEST(CqDiscord, ReferenceValues) {
  const BlochForm h = gd::make(gd::preset::HState{2.0 / 3, 0.4});
  EXPECT_NEAR(gd::cq_discord(h).value, 1.0 / 6, 1e-12);
  EXPECT_NEAR(gd::qc_discord(h).value, 1.0 / 6, 1e-12);
  const double e1 = (3 - kSqrt3) / 64;
  EXPECT_NEAR(gd::cq_discord(gd::make(gd::preset::Example1{})).value, e1, 1e-12);
  EXPECT_NEAR(gd::qc_discord(gd::make(gd::preset::Example1{})).value, e1, 1e-12);
  EXPECT_NEAR(gd::cq_discord(gd::make(gd::preset::Example2{})).value, e1, 1e-12);
  const BlochForm e3 = gd::make(gd::preset::Example3{});
  EXPECT_NEAR(gd::qc_discord(e3).value, 0.0259, 0.0259e-2);
  EXPECT_NEAR(gd::cq_discord(e3).value, 0.0262, 0.0262e-2);
  EXPECT_LT(gd::qc_discord(e3).value, gd::cq_discord(e3).value);
  EXPECT_EQ(gd::cq_discord(BlochForm{}).value, 0.0);
}

TEST(CqDiscord, MatchesMatrixScan) {
  for (int s = 0; s < 5; ++s) {
    const BlochForm b = gd::random_state(4, 50 + s);
    const gd::AsymDiscordResult r = gd::cq_discord(b);
    const double scan = scan_cq_discord(b, 20000);
    EXPECT_LE(r.value, scan + 1e-14);
    EXPECT_NEAR(r.value, scan, 1e-4);
    EXPECT_NEAR(gd::hs_distance_sq(b, r.closest_state), r.value, 1e-14);
    EXPECT_NEAR(oracle::hs_distance_sq_matrix(oracle::matrix_of(b),
                                              oracle::sandwich(oracle::matrix_of(b), r.k_hat.vec(),
                                                               Vec3::Zero())),
                r.value, 1e-13);
  }
}

TEST(CqDiscord, ClosestStateIsMeasuredState) {
  const BlochForm b = gd::random_state(4, 77);
  const gd::AsymDiscordResult a = gd::cq_discord(b);
  EXPECT_LT(oracle::max_abs_diff(a.closest_state, gd::measure_a(b, a.k_hat)), 1e-16);
  const gd::AsymDiscordResult q = gd::qc_discord(b);
  EXPECT_LT(oracle::max_abs_diff(q.closest_state, gd::measure_b(b, q.k_hat)), 1e-16);
  EXPECT_NEAR(a.k_max, oracle::lambda_max(gd::k_matrix_x(b)), 1e-14);
  EXPECT_FALSE(a.degenerate);
}

TEST(CqDiscord, DegenerateFlag) {
  // K_x = diag(p^2, p^2, q) with p^2 on top for p > 1/2.
  const gd::AsymDiscordResult r = gd::cq_discord(gd::make(gd::preset::HState{0.8, 0.3}));
  EXPECT_TRUE(r.degenerate);
  EXPECT_FALSE(gd::cq_discord(gd::make(gd::preset::HState{0.3, 0.3})).degenerate);
}

TEST(QcDiscord, SwapSymmetry) {
  for (int s = 0; s < 30; ++s) {
    const BlochForm b = gd::random_state(1 + s % 4, 200 + s);
    EXPECT_NEAR(gd::qc_discord(b).value, gd::cq_discord(gd::swap_parties(b)).value, 1e-15);
  }
}

TEST(QcDiscord, BellDiagonalEqualsCq) {
  for (const auto& c : {std::array{0.3, -0.2, 0.1}, std::array{-1.0, -1.0, -1.0},
                        std::array{0.5, 0.5, -0.5}, std::array{0.0, 0.2, 0.0}}) {
    const BlochForm b = gd::make(gd::preset::BellDiagonal{c[0], c[1], c[2]});
    EXPECT_NEAR(gd::qc_discord(b).value, gd::cq_discord(b).value, 1e-15);
  }
}

TEST(QcDiscord, RejectsInvalidState) {
  BlochForm b;
  b.T = Mat3::Identity();
  EXPECT_THROW(gd::cq_discord(b), gd::InvalidState);
  EXPECT_THROW(gd::qc_discord(b), gd::InvalidState);
  EXPECT_THROW(gd::cc_discord(b), gd::InvalidState);
}

TEST(CcObjective, MatchesRankTwoEigenvalue) {
  gd::Rng rng(4);
  for (int s = 0; s < 200; ++s) {
    const BlochForm b = gd::random_state(4, 400 + s);
    const Vec3 xh = rng.unit_vector();
    const Vec3 tx = b.T.transpose() * xh;
    const Mat3 m = tx * tx.transpose() + b.y * b.y.transpose();
    const double expected = oracle::lambda_max(m) + std::pow(xh.dot(b.x), 2);
    EXPECT_NEAR(gd::cc_objective(b, xh), expected, 1e-12);
    EXPECT_NEAR(gd::cc_objective(b, xh), gd::cc_objective(b, Versor(xh)), 1e-15);
  }
}

TEST(CcObjective, EqualsBestPartnerObjective) {
  gd::Rng rng(6);
  for (int s = 0; s < 5; ++s) {
    const BlochForm b = gd::random_state(4, 600 + s);
    const Vec3 xh = rng.unit_vector();
    double best = 0.0;
    for (const Vec3& y : gd::fibonacci_sphere(40000)) best = std::max(best, gd::pair_objective(b, xh, y));
    const double value = gd::cc_objective(b, xh);
    EXPECT_GE(value, best - 1e-14);
    EXPECT_NEAR(value, best, 1e-4);
    EXPECT_NEAR(gd::pair_objective(b, xh, gd::partner_versor(b, Versor(xh)).vec()), value, 1e-14);
  }
}

TEST(CcObjective, HStateAtZ) {
  for (double p : {0.1, 0.5, 0.7, 1.0}) {
    const BlochForm h = gd::make(gd::preset::HState{p, 0.9});
    EXPECT_NEAR(gd::cc_objective(h, Vec3::UnitZ()), 2 * (1 - p) * (1 - p) + (1 - 2 * p) * (1 - 2 * p),
                1e-15);
  }
}

TEST(CcObjective, DiagonalCorrelations) {
  BlochForm b;
  b.T = Vec3(0.4, -0.3, 0.2).asDiagonal();
  EXPECT_NEAR(gd::cc_objective(b, Vec3::UnitX()), 0.16, 1e-16);
  EXPECT_NEAR(gd::cc_objective(b, Vec3::UnitY()), 0.09, 1e-16);
}

TEST(PartnerVersor, ZeroCorrelationsPointAlongY) {
  BlochForm b;
  b.x = Vec3(0.1, 0.0, 0.2);
  b.y = Vec3(-0.3, 0.2, 0.1);
  const Versor y = gd::partner_versor(b, Versor(Vec3(1, 2, 3)));
  EXPECT_TRUE(y.same_axis(Versor(b.y)));
  EXPECT_GT(y[0], 0.0);  // canonical
  EXPECT_THROW(gd::partner_versor(BlochForm{}, Versor(Vec3::UnitX())), gd::DegenerateTop);
}

TEST(PartnerVersor, ZeroMarginalAStructure) {
  for (int s = 0; s < 20; ++s) {
    BlochForm b = gd::random_state(4, 1000 + s);
    b.x.setZero();
    b = shrink_until_valid(b);
    const gd::CcDiscordResult r = gd::cc_discord(b);
    const Vec3 ty = b.T * r.y_hat.vec();
    EXPECT_TRUE(r.x_hat.same_axis(Versor(ty), 1e-7)) << "seed " << s;
    // y_hat is the top eigenvector of |y><y| + T^T T
    const gd::SymEigen3 e = gd::eigen_sym3(gd::k_matrix_y(b));
    EXPECT_TRUE(r.y_hat.same_axis(Versor(e.top()), 1e-7)) << "seed " << s;
  }
}

TEST(CcDiscord, ReferenceValues) {
  for (double phi : {0.0, 0.5, std::numbers::pi / 2, 2.0}) {
    EXPECT_NEAR(gd::cc_discord(gd::make(gd::preset::HState{2.0 / 3, phi})).value, 7.0 / 36, 1e-12);
  }
  EXPECT_NEAR(gd::cc_discord(gd::make(gd::preset::Example1{})).value, 1.0 / 32, 1e-12);
  EXPECT_NEAR(gd::cc_discord(gd::make(gd::preset::Example2{})).value, 0.02322, 0.5e-5);
  EXPECT_NEAR(gd::cc_discord(gd::make(gd::preset::Example3{})).value, 0.0280, 0.0280e-2);
  EXPECT_EQ(gd::cc_discord(BlochForm{}).value, 0.0);
}

TEST(CcDiscord, ResultIsConsistent) {
  for (int s = 0; s < 30; ++s) {
    const BlochForm b = gd::random_state(4, 1100 + s);
    const gd::CcDiscordResult r = gd::cc_discord(b);
    EXPECT_LT(oracle::max_abs_diff(r.closest_state, gd::measure_ab(b, {r.x_hat, r.y_hat})), 1e-16);
    EXPECT_NEAR(gd::hs_distance_sq(b, r.closest_state), r.value, 1e-14);
    EXPECT_GT(r.optimizer_evals, 0);
    EXPECT_EQ(r.symmetric_pair, std::abs(r.x_hat.dot(r.y_hat.vec())) > 1 - 1e-8);
    EXPECT_GE(r.value, -1e-15);
  }
}

TEST(CcDiscord, StationaryUnderPerturbation) {
  gd::Rng rng(9);
  for (int s = 0; s < 20; ++s) {
    const BlochForm b = gd::random_state(4, 1200 + s);
    const gd::CcDiscordResult r = gd::cc_discord(b);
    const double u0 = gd::pair_objective(b, r.x_hat.vec(), r.y_hat.vec());
    for (int k = 0; k < 20; ++k) {
      for (double eps : {1e-3, 1e-5}) {
        const Vec3 x = (r.x_hat.vec() + eps * rng.unit_vector()).normalized();
        const Vec3 y = (r.y_hat.vec() + eps * rng.unit_vector()).normalized();
        EXPECT_LE(gd::pair_objective(b, x, y), u0 + 1e-13);
        EXPECT_LE(gd::cc_objective(b, x), u0 + 1e-13);
      }
    }
  }
}

TEST(CcDiscord, BoundedBelowByAsymmetricDiscords) {
  for (int s = 0; s < 200; ++s) {
    const BlochForm b = gd::random_state(1 + s % 4, 1300 + s);
    const double ds = gd::cc_discord(b).value;
    const double da = gd::cq_discord(b).value;
    const double db = gd::qc_discord(b).value;
    EXPECT_GE(ds, std::max(da, db) - 1e-10);
    const double top = gd::purity_norm_sq(b) - 0.25;
    for (double v : {da, db, ds}) {
      EXPECT_GE(v, -1e-15);
      EXPECT_LE(v, top + 1e-15);
    }
  }
}

TEST(CcDiscord, LocalUnitaryCovariance) {
  gd::Rng rng(10);
  for (int s = 0; s < 20; ++s) {
    const BlochForm b = gd::random_state(4, 1400 + s);
    const gd::CcDiscordResult r = gd::cc_discord(b);
    const gd::AsymDiscordResult a = gd::cq_discord(b);
    const gd::AsymDiscordResult q = gd::qc_discord(b);
    for (int k = 0; k < 5; ++k) {
      const Mat3 oa = rng.rotation();
      const Mat3 ob = rng.rotation();
      const BlochForm rb = gd::rotate_locally(b, oa, ob);
      const gd::CcDiscordResult rr = gd::cc_discord(rb);
      const gd::AsymDiscordResult ra = gd::cq_discord(rb);
      const gd::AsymDiscordResult rq = gd::qc_discord(rb);
      EXPECT_NEAR(rr.value, r.value, 1e-10);
      EXPECT_NEAR(ra.value, a.value, 1e-12);
      EXPECT_NEAR(rq.value, q.value, 1e-12);
      EXPECT_TRUE(ra.k_hat.same_axis(Versor(oa * a.k_hat.vec()), 1e-9));
      EXPECT_TRUE(rq.k_hat.same_axis(Versor(ob * q.k_hat.vec()), 1e-9));
      EXPECT_TRUE(rr.x_hat.same_axis(Versor(oa * r.x_hat.vec()), 1e-6));
      EXPECT_TRUE(rr.y_hat.same_axis(Versor(ob * r.y_hat.vec()), 1e-6));
    }
  }
}

TEST(CcDiscord, ZeroMarginalA) {
  for (int s = 0; s < 30; ++s) {
    BlochForm b = gd::random_state(4, 1500 + s);
    b.x.setZero();
    b = shrink_until_valid(b);
    const double db = gd::qc_discord(b).value;
    EXPECT_NEAR(gd::cc_discord(b).value, db, 1e-9);
    const double closed = (b.y.squaredNorm() + b.T.squaredNorm() - oracle::lambda_max(gd::k_matrix_y(b))) / 4;
    EXPECT_NEAR(db, closed, 1e-14);
    EXPECT_LE(gd::cq_discord(b).value, db + 1e-12);
  }
}

TEST(CcDiscord, ZeroMarginals) {
  for (int s = 0; s < 30; ++s) {
    BlochForm b = gd::random_state(4, 1600 + s);
    b.x.setZero();
    b.y.setZero();
    b = shrink_until_valid(b);
    const double da = gd::cq_discord(b).value;
    EXPECT_NEAR(da, gd::qc_discord(b).value, 1e-12);
    EXPECT_NEAR(gd::cc_discord(b).value, da, 1e-9);
  }
}

TEST(CcDiscord, SymmetricPairsSufficeForDefiniteCorrelations) {
  for (bool negative : {false, true}) {
    for (int s = 0; s < 30; ++s) {
      const BlochForm b = oracle::random_symmetric_psd_state(1700 + s, negative);
      const double best = 4 * (gd::purity_norm_sq(b) - gd::cc_discord(b).value) - 1;
      EXPECT_NEAR(gd::symmetric_pair_maximum(b).value, best, 1e-9) << "seed " << s;
    }
  }
}

TEST(CcDiscord, MatchesFourAngleBruteForce) {
  for (int s = 0; s < 2; ++s) {
    const BlochForm b = gd::random_state(4, 1800 + s);
    const double brute = oracle::brute_pair_max(
        [&](const Vec3& x, const Vec3& y) { return gd::pair_objective(b, x, y); }, 24);
    const double best = 4 * (gd::purity_norm_sq(b) - gd::cc_discord(b).value) - 1;
    EXPECT_NEAR(best, brute, 1e-9);
  }
}

TEST(CcDiscord, SeededLatticeAgrees) {
  const BlochForm b = gd::random_state(4, 1900);
  const double base = gd::cc_discord(b).value;
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    gd::OptimizerConfig cfg;
    cfg.seed = seed;
    EXPECT_NEAR(gd::cc_discord(b, cfg).value, base, 1e-12);
  }
  gd::OptimizerConfig coarse;
  coarse.lattice_points = 64;
  coarse.refine_starts = 2;
  EXPECT_GE(gd::cc_discord(b, coarse).value, base - 1e-12);  // a coarse lattice may settle on a local maximum
}
