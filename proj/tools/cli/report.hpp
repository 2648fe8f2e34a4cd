#pragma once

#include "json.hpp"

#include "geodiscord/bounds.hpp"
#include "geodiscord/discords.hpp"

namespace geodiscord::cli {

struct DirectionPair {
  Vec3 a = Vec3::UnitZ();
  Vec3 b = Vec3::UnitZ();
};

struct IterationSummary {
  int steps = 0;
  double final_value = 0.0;
  double final_delta = 0.0;
  bool stalled = false;
  bool converged = false;
};

struct DiscordReport {
  BlochForm state;
  double purity = 0.0;
  double d_a = 0.0, d_b = 0.0, d_s = 0.0;
  double d_nub = 0.0, d_aub = 0.0, d_aub_degopt = 0.0, d_nub_degopt = 0.0, d_aub_tilde = 0.0;
  Vec3 k_a = Vec3::UnitZ(), k_b = Vec3::UnitZ();
  DirectionPair dir_s, dir_nub, dir_aub, dir_aub_degopt, dir_nub_degopt, dir_aub_tilde;
  BoundBranch aub_branch = BoundBranch::S0;
  BoundBranch aub_tilde_branch = BoundBranch::S0;
  int optimizer_evals = 0;
  IterationSummary iteration;
  double seconds_total = 0.0;
  double seconds_cc = 0.0;
};

/// Throws InvalidState when `b` is not a density matrix.
DiscordReport build_report(const BlochForm& b, const OptimizerConfig& cfg);

nlohmann::ordered_json to_json(const DiscordReport& r, bool timing = true);
nlohmann::ordered_json to_json(const Vec3& v);
nlohmann::ordered_json to_json(const MeasurementPair& p);

}  // namespace geodiscord::cli
