#include <benchmark/benchmark.h>

#include <vector>

#include "geodiscord/bounds.hpp"
#include "geodiscord/discords.hpp"
#include "geodiscord/oracle.hpp"
#include "geodiscord/presets.hpp"

namespace gd = geodiscord;

namespace {

const std::vector<gd::BlochForm>& states() {
  static const std::vector<gd::BlochForm> s = [] {
    std::vector<gd::BlochForm> out;
    for (int i = 0; i < 64; ++i) out.push_back(gd::random_state(4, 9000 + i));
    return out;
  }();
  return s;
}

template <class F>
void over_states(benchmark::State& st, F&& f) {
  std::size_t i = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(f(states()[i++ % states().size()]));
  }
}

void BM_EigenSym3(benchmark::State& st) {
  over_states(st, [](const gd::BlochForm& b) { return gd::eigen_sym3(gd::k_matrix_x(b)).values[0]; });
}
BENCHMARK(BM_EigenSym3);

void BM_CqDiscord(benchmark::State& st) {
  over_states(st, [](const gd::BlochForm& b) { return gd::cq_discord(b).value; });
}
BENCHMARK(BM_CqDiscord);

void BM_CcDiscord(benchmark::State& st) {
  gd::OptimizerConfig cfg;
  cfg.lattice_points = static_cast<int>(st.range(0));
  over_states(st, [&](const gd::BlochForm& b) { return gd::cc_discord(b, cfg).value; });
}
BENCHMARK(BM_CcDiscord)->Arg(256)->Arg(2048)->Arg(8192)->Unit(benchmark::kMicrosecond);

void BM_AdaptiveBound(benchmark::State& st) {
  over_states(st, [](const gd::BlochForm& b) { return gd::adaptive_bound(b).value; });
}
BENCHMARK(BM_AdaptiveBound);

void BM_NonoptimalOptimizedAub(benchmark::State& st) {
  over_states(st, [](const gd::BlochForm& b) { return gd::nonoptimal_optimized_aub(b).value; });
}
BENCHMARK(BM_NonoptimalOptimizedAub);

void BM_DegenerateOptimizedHState(benchmark::State& st) {
  const gd::BlochForm h = gd::make(gd::preset::HState{0.7, 0.3});
  for (auto _ : st) benchmark::DoNotOptimize(gd::degenerate_optimized_bounds(h).nub.value);
}
BENCHMARK(BM_DegenerateOptimizedHState)->Unit(benchmark::kMillisecond);

void BM_IterateAdaptive(benchmark::State& st) {
  over_states(st, [](const gd::BlochForm& b) { return gd::iterate_adaptive(b).steps.size(); });
}
BENCHMARK(BM_IterateAdaptive)->Unit(benchmark::kMicrosecond);

void BM_GridOracle(benchmark::State& st) {
  const gd::GridSpec grid{static_cast<int>(st.range(0)), true, 1e-12};
  over_states(st, [&](const gd::BlochForm& b) { return gd::grid_cc_discord(b, grid); });
}
BENCHMARK(BM_GridOracle)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
