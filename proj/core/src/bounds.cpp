#include "geodiscord/bounds.hpp"

#include <algorithm>
#include <limits>

#include "geodiscord/discords.hpp"
#include "geodiscord/linalg.hpp"

namespace geodiscord {

namespace {

constexpr double kSameAxisTol = 1e-9;

void require_state(const BlochForm& b) { validate(from_bloch(b)); }

Vec3 top_vector(const Mat3& m) { return eigen_sym3(m).top(); }

// Unit vectors spanning eigenspace `cluster` of `e`; degenerate eigenspaces
// are discretized in addition to their basis vectors.
std::vector<Vec3> eigenspace_samples(const SymEigen3& e, const std::vector<int>& cluster,
                                     const DegenerateSampling& sampling) {
  std::vector<Vec3> out;
  for (int i : cluster) out.push_back(e.vectors[i]);
  if (cluster.size() == 2) {
    const auto ring = half_circle(e.vectors[cluster[0]], e.vectors[cluster[1]], sampling.circle);
    out.insert(out.end(), ring.begin(), ring.end());
  } else if (cluster.size() == 3) {
    const auto cap = fibonacci_hemisphere(sampling.sphere);
    out.insert(out.end(), cap.begin(), cap.end());
  }
  return out;
}

std::vector<Vec3> top_samples(const Mat3& m, const DegenerateSampling& sampling) {
  const SymEigen3 e = eigen_sym3(m);
  return eigenspace_samples(e, eigen_clusters(e).front(), sampling);
}

std::vector<Vec3> all_samples(const Mat3& m, const DegenerateSampling& sampling) {
  const SymEigen3 e = eigen_sym3(m);
  std::vector<Vec3> out;
  for (const auto& cluster : eigen_clusters(e)) {
    const auto part = eigenspace_samples(e, cluster, sampling);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

struct Best {
  double purity = -std::numeric_limits<double>::infinity();
  Vec3 n = Vec3::UnitZ();
  Vec3 m = Vec3::UnitZ();
  BoundBranch branch = BoundBranch::S0;

  void offer(const BlochForm& b, const Vec3& nv, const Vec3& mv, BoundBranch br) {
    const double p = measured_purity(b, nv, mv);
    if (p > purity) {
      purity = p;
      n = nv;
      m = mv;
      branch = br;
    }
  }

  BoundResult result(const BlochForm& b) const {
    return bound_for_pair(b, {Versor(n), Versor(m)}, branch);
  }
};

// Searches both adaptive families: (k_x, l_y) with l_y from L_y(k_x), and
// (l_x, k_y) with l_x from L_x(k_y).
template <class KSamples, class LSamples>
Best adaptive_search(const BlochForm& b, KSamples&& k_samples, LSamples&& l_samples) {
  Best best;
  for (const Vec3& kx : k_samples(k_matrix_x(b)))
    for (const Vec3& ly : l_samples(l_matrix_y(b, Versor(kx))))
      best.offer(b, kx, ly, BoundBranch::SPrime);
  for (const Vec3& ky : k_samples(k_matrix_y(b)))
    for (const Vec3& lx : l_samples(l_matrix_x(b, Versor(ky))))
      best.offer(b, lx, ky, BoundBranch::SDoublePrime);
  return best;
}

}  // namespace

const char* to_string(BoundBranch branch) {
  switch (branch) {
    case BoundBranch::SPrime:
      return "S'";
    case BoundBranch::SDoublePrime:
      return "S''";
    case BoundBranch::S0:
      return "S0";
  }
  return "?";
}

Mat3 l_matrix_x(const BlochForm& b, const Versor& k_y) {
  const Vec3 t = b.T * k_y.vec();
  return b.x * b.x.transpose() + t * t.transpose();
}

Mat3 l_matrix_y(const BlochForm& b, const Versor& k_x) {
  const Vec3 t = b.T.transpose() * k_x.vec();
  return b.y * b.y.transpose() + t * t.transpose();
}

BoundResult bound_for_pair(const BlochForm& b, const MeasurementPair& pair,
                           BoundBranch branch) {
  BoundResult r;
  r.directions = pair.canonical();
  r.value = purity_norm_sq(b) - measured_purity(b, pair.n_hat.vec(), pair.m_hat.vec());
  r.sigma = measure_ab(b, r.directions);
  r.branch = branch;
  return r;
}

BoundResult nonadaptive_bound(const BlochForm& b) {
  require_state(b);
  const Versor kx(top_vector(k_matrix_x(b)));
  const Versor ky(top_vector(k_matrix_y(b)));
  return bound_for_pair(b, {kx, ky}, BoundBranch::S0);
}

BoundResult adaptive_bound(const BlochForm& b) {
  require_state(b);
  auto top_only = [](const Mat3& m) { return std::vector<Vec3>{top_vector(m)}; };
  return adaptive_search(b, top_only, top_only).result(b);
}

OptimizedBounds degenerate_optimized_bounds(const BlochForm& b,
                                            const DegenerateSampling& sampling) {
  require_state(b);
  auto tops = [&sampling](const Mat3& m) { return top_samples(m, sampling); };
  OptimizedBounds out;
  out.aub = adaptive_search(b, tops, tops).result(b);

  Best nub;
  const auto kxs = tops(k_matrix_x(b));
  const auto kys = tops(k_matrix_y(b));
  for (const Vec3& kx : kxs)
    for (const Vec3& ky : kys) nub.offer(b, kx, ky, BoundBranch::S0);
  out.nub = nub.result(b);
  return out;
}

BoundResult nonoptimal_optimized_aub(const BlochForm& b, const DegenerateSampling& sampling) {
  require_state(b);
  auto all = [&sampling](const Mat3& m) { return all_samples(m, sampling); };
  return adaptive_search(b, all, all).result(b);
}

Mat3 nonoptimal_norm_table(const BlochForm& b, BoundBranch family) {
  const bool prime = family != BoundBranch::SDoublePrime;
  const SymEigen3 k = eigen_sym3(prime ? k_matrix_x(b) : k_matrix_y(b));
  Mat3 table;
  for (int i = 0; i < 3; ++i) {
    const Versor ki(k.vectors[i]);
    const SymEigen3 l = eigen_sym3(prime ? l_matrix_y(b, ki) : l_matrix_x(b, ki));
    for (int j = 0; j < 3; ++j)
      table(i, j) = prime ? measured_purity(b, ki.vec(), l.vectors[j])
                          : measured_purity(b, l.vectors[j], ki.vec());
  }
  return table;
}

IterationTrace iterate_adaptive(const BlochForm& b, const IterationOptions& options) {
  require_state(b);
  IterationTrace trace;
  trace.reference_ds = cc_discord(b, options.optimizer).value;
  const double purity = purity_norm_sq(b);

  Vec3 kx = top_vector(k_matrix_x(b));
  Vec3 ky = top_vector(k_matrix_y(b));
  std::vector<MeasurementPair> history;
  double running = std::numeric_limits<double>::infinity();
  bool any_stall_sign = false;

  for (int n = 0; n <= options.max_iters; ++n) {
    const Mat3 ly_matrix = l_matrix_y(b, Versor(kx));
    const Mat3 lx_matrix = l_matrix_x(b, Versor(ky));
    Vec3 ly = top_vector(ly_matrix);
    Vec3 lx = top_vector(lx_matrix);
    if (options.optimized) {
      const SymEigen3 ey = eigen_sym3(ly_matrix);
      const SymEigen3 ex = eigen_sym3(lx_matrix);
      for (int j = 1; j < 3; ++j) {
        if (measured_purity(b, kx, ey.vectors[j]) > measured_purity(b, kx, ly))
          ly = ey.vectors[j];
        if (measured_purity(b, ex.vectors[j], ky) > measured_purity(b, lx, ky))
          lx = ex.vectors[j];
      }
    }

    IterationStep step;
    step.n = n;
    step.pair_sprime = MeasurementPair{Versor(kx), Versor(ly)}.canonical();
    step.pair_sdprime = MeasurementPair{Versor(lx), Versor(ky)}.canonical();
    step.raw_value =
        purity - std::max(measured_purity(b, kx, ly), measured_purity(b, lx, ky));
    const double previous = running;
    running = std::min(running, step.raw_value);
    step.value = running;
    step.delta = running - trace.reference_ds;
    step.criterion = step.pair_sprime.n_hat.same_axis(step.pair_sprime.m_hat, kSameAxisTol) &&
                     step.pair_sdprime.m_hat.same_axis(step.pair_sdprime.n_hat, kSameAxisTol);

    history.push_back(MeasurementPair{Versor(kx), Versor(ky)});
    const MeasurementPair next{Versor(lx), Versor(ly)};
    step.recurrent = std::any_of(history.begin(), history.end(), [&](const MeasurementPair& p) {
      return p.n_hat.same_axis(next.n_hat, kSameAxisTol) &&
             p.m_hat.same_axis(next.m_hat, kSameAxisTol);
    });
    any_stall_sign = any_stall_sign || step.criterion || step.recurrent;
    trace.steps.push_back(step);

    if (n > 0 && std::abs(previous - running) < options.tol) break;
    kx = lx;
    ky = ly;
  }

  const double final_gap = trace.steps.back().delta;
  trace.converged = final_gap <= options.convergence_gap;
  trace.stalled = !trace.converged && any_stall_sign;
  return trace;
}

}  // namespace geodiscord
