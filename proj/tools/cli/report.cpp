#include "report.hpp"

#include <chrono>

#include "geodiscord/state_io.hpp"

namespace geodiscord::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

DirectionPair directions_of(const MeasurementPair& p) {
  const MeasurementPair c = p.canonical();
  return {c.n_hat.vec(), c.m_hat.vec()};
}

nlohmann::ordered_json pair_json(const DirectionPair& d) {
  return {{"a", to_json(d.a)}, {"b", to_json(d.b)}};
}

}  // namespace

nlohmann::ordered_json to_json(const Vec3& v) { return nlohmann::ordered_json::array({v[0], v[1], v[2]}); }

nlohmann::ordered_json to_json(const MeasurementPair& p) { return pair_json(directions_of(p)); }

DiscordReport build_report(const BlochForm& b, const OptimizerConfig& cfg) {
  const auto t0 = Clock::now();
  validate(from_bloch(b));

  DiscordReport r;
  r.state = b;
  r.purity = purity_norm_sq(b);

  const AsymDiscordResult da = cq_discord(b);
  const AsymDiscordResult db = qc_discord(b);
  r.d_a = da.value;
  r.d_b = db.value;
  r.k_a = da.k_hat.canonical().vec();
  r.k_b = db.k_hat.canonical().vec();

  const auto tc = Clock::now();
  const CcDiscordResult ds = cc_discord(b, cfg);
  r.seconds_cc = seconds_since(tc);
  r.d_s = ds.value;
  r.dir_s = {ds.x_hat.canonical().vec(), ds.y_hat.canonical().vec()};
  r.optimizer_evals = ds.optimizer_evals;

  const BoundResult nub = nonadaptive_bound(b);
  const BoundResult aub = adaptive_bound(b);
  r.d_nub = nub.value;
  r.dir_nub = directions_of(nub.directions);
  r.d_aub = aub.value;
  r.dir_aub = directions_of(aub.directions);
  r.aub_branch = aub.branch;

  const OptimizedBounds deg = degenerate_optimized_bounds(b);
  r.d_aub_degopt = deg.aub.value;
  r.dir_aub_degopt = directions_of(deg.aub.directions);
  r.d_nub_degopt = deg.nub.value;
  r.dir_nub_degopt = directions_of(deg.nub.directions);

  const BoundResult tilde = nonoptimal_optimized_aub(b);
  r.d_aub_tilde = tilde.value;
  r.dir_aub_tilde = directions_of(tilde.directions);
  r.aub_tilde_branch = tilde.branch;

  IterationOptions io;
  io.optimizer = cfg;
  const IterationTrace trace = iterate_adaptive(b, io);
  r.iteration.steps = static_cast<int>(trace.steps.size());
  r.iteration.final_value = trace.steps.back().value;
  r.iteration.final_delta = trace.steps.back().delta;
  r.iteration.stalled = trace.stalled;
  r.iteration.converged = trace.converged;

  r.seconds_total = seconds_since(t0);
  return r;
}

nlohmann::ordered_json to_json(const DiscordReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["state"] = nlohmann::ordered_json::parse(state_to_json(r.state))["bloch"];
  j["purity"] = r.purity;
  j["D_A"] = r.d_a;
  j["D_B"] = r.d_b;
  j["D_S"] = r.d_s;
  j["D_nub"] = r.d_nub;
  j["D_aub"] = r.d_aub;
  j["D_aub_degopt"] = r.d_aub_degopt;
  j["D_nub_degopt"] = r.d_nub_degopt;
  j["D_aub_tilde"] = r.d_aub_tilde;
  j["directions"] = {
      {"D_A", to_json(r.k_a)},
      {"D_B", to_json(r.k_b)},
      {"D_S", pair_json(r.dir_s)},
      {"D_nub", pair_json(r.dir_nub)},
      {"D_aub", pair_json(r.dir_aub)},
      {"D_aub_degopt", pair_json(r.dir_aub_degopt)},
      {"D_nub_degopt", pair_json(r.dir_nub_degopt)},
      {"D_aub_tilde", pair_json(r.dir_aub_tilde)},
  };
  j["branches"] = {{"D_aub", to_string(r.aub_branch)}, {"D_aub_tilde", to_string(r.aub_tilde_branch)}};
  j["iteration"] = {{"steps", r.iteration.steps},
                    {"final_value", r.iteration.final_value},
                    {"final_delta", r.iteration.final_delta},
                    {"stalled", r.iteration.stalled},
                    {"converged", r.iteration.converged}};
  j["optimizer_evals"] = r.optimizer_evals;
  if (timing) j["timing"] = {{"total_s", r.seconds_total}, {"cc_discord_s", r.seconds_cc}};
  return j;
}

}  // namespace geodiscord::cli
