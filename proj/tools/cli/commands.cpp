#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "geodiscord/bounds.hpp"
#include "geodiscord/discords.hpp"
#include "geodiscord/oracle.hpp"
#include "geodiscord/presets.hpp"
#include "geodiscord/state_io.hpp"
#include "report.hpp"

namespace geodiscord::cli {

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const StateParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {  // InvalidParameters and bad versors
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidState& e) {
    err << "error: invalid state: " << e.what() << '\n';
    return kInvalidState;
  } catch (const StateIoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

BlochForm load_state(const StateSource& s) {
  if (!s.preset.empty() && !s.path.empty())
    throw InvalidParameters("give either --preset or --state, not both");
  if (!s.preset.empty()) return make(parse_preset(s.preset));
  if (!s.path.empty()) return read_state_file(s.path);
  throw InvalidParameters("one of --preset or --state is required");
}

// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw StateIoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw StateIoError("failed writing '" + path + "'");
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

std::string fixed_width(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw InvalidParameters("bad seed range '" + text + "', expected a..b");
    return v;
  };
  if (dots == std::string::npos) {
    const std::uint64_t v = number(text);
    return {v, v};
  }
  const auto range = std::make_pair(number(text.substr(0, dots)), number(text.substr(dots + 2)));
  if (range.first > range.second) throw InvalidParameters("seed range '" + text + "' is empty");
  return range;
}

struct SweepRow {
  double param = 0.0;
  std::vector<double> values;
};

double sweep_value(const std::string& column, const BlochForm& b, const OptimizerConfig& cfg) {
  if (column == "D_A") return cq_discord(b).value;
  if (column == "D_B") return qc_discord(b).value;
  if (column == "D_S") return cc_discord(b, cfg).value;
  if (column == "D_nub") return degenerate_optimized_bounds(b).nub.value;
  if (column == "D_aub") return adaptive_bound(b).value;
  if (column == "D_aub_tilde") return nonoptimal_optimized_aub(b).value;
  if (column == "D_S11_nub") return nonadaptive_bound(b).value;
  throw InvalidParameters("unknown column '" + column + "'");
}

int verify_hstate(const VerifyOptions& o, std::ostream& out) {
  if (o.p_grid < 2) throw InvalidParameters("--p-grid must be at least 2");
  double worst_ds = 0.0, worst_da = 0.0, worst_tilde = 0.0;
  std::vector<std::string> failures;
  for (double phi : {0.0, std::numbers::pi / 4, std::numbers::pi / 2}) {
    for (int i = 0; i < o.p_grid; ++i) {
      const double p = static_cast<double>(i) / (o.p_grid - 1);
      const BlochForm h = make(preset::HState{p, phi});
      const double ds = 0.25 * std::min(2 * p * p, 7 * p * p - 8 * p + 3);
      const double da = 0.5 * std::min(p * p, 3 * p * p - 3 * p + 1);
      const double r_ds = std::abs(cc_discord(h, o.optimizer).value - ds);
      const double r_da = std::max(std::abs(cq_discord(h).value - da), std::abs(qc_discord(h).value - da));
      const double r_tilde = std::abs(nonoptimal_optimized_aub(h).value - ds);
      worst_ds = std::max(worst_ds, r_ds);
      worst_da = std::max(worst_da, r_da);
      worst_tilde = std::max(worst_tilde, r_tilde);
      if (r_ds > 1e-9 || r_da > 1e-12 || r_tilde > 1e-9) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "p=%.6g phi=%.6g", p, phi);
        failures.emplace_back(buf);
      }
    }
  }
  out << "hstate closed-form check: " << 3 * o.p_grid << " states\n"
      << "  max |D_S - closed form|       " << fixed_width(worst_ds) << "  (limit 1e-9)\n"
      << "  max |D_A,B - closed form|     " << fixed_width(worst_da) << "  (limit 1e-12)\n"
      << "  max |D_aub_tilde - D_S form|  " << fixed_width(worst_tilde) << "  (limit 1e-9)\n";
  if (failures.empty()) {
    out << "PASS\n";
    return kOk;
  }
  out << "FAIL at";
  for (const auto& f : failures) out << ' ' << f << ';';
  out << '\n';
  return kVerifyFailed;
}

int verify_random(const VerifyOptions& o, std::ostream& out) {
  if (o.count < 1 && !o.seeds) throw InvalidParameters("--count must be positive");
  std::uint64_t first = o.optimizer.seed;
  std::uint64_t last = first + static_cast<std::uint64_t>(o.count) - 1;
  if (o.seeds) std::tie(first, last) = *o.seeds;
  const bool table = o.seeds.has_value();
  const GridSpec grid{o.strict ? 64 : 32, true, 1e-12};
  OptimizerConfig cfg = o.optimizer;
  cfg.seed = 0;

  std::vector<double> gaps, oracle_diffs, obs2;
  std::vector<std::uint64_t> failing;
  if (table) out << "seed        D_S                  D_aub-D_S   |grid-D_S|  obs2        status\n";
  for (std::uint64_t seed = first;; ++seed) {
    const BlochForm b = random_state(o.rank, seed);
    const double da = cq_discord(b).value;
    const double db = qc_discord(b).value;
    const double ds = cc_discord(b, cfg).value;
    const double aub = adaptive_bound(b).value;
    const double nub = nonadaptive_bound(b).value;
    Rng rng(seed ^ 0x5deece66dULL);
    const MeasurementPair pair{Versor(rng.unit_vector()), Versor(rng.unit_vector())};
    const double r2 = check_observation2(b, pair);
    const double g = grid_cc_discord(b, grid);

    const bool chain = std::max(da, db) <= ds + 1e-10 && ds <= aub + 1e-10 && aub <= nub + 1e-10;
    const bool ok = chain && r2 < 1e-12 && std::abs(g - ds) < 1e-6;
    gaps.push_back(aub - ds);
    oracle_diffs.push_back(std::abs(g - ds));
    obs2.push_back(r2);
    if (!ok) failing.push_back(seed);
    if (table) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-11llu %-20.17g %-11s %-11s %-11s %s\n",
                    static_cast<unsigned long long>(seed), ds, fixed_width(aub - ds).c_str(),
                    fixed_width(std::abs(g - ds)).c_str(), fixed_width(r2).c_str(), ok ? "ok" : "FAIL");
      out << buf;
    }
    if (seed == last) break;
  }
  out << "verified " << gaps.size() << " states (rank " << o.rank << ", grid resolution " << grid.resolution
      << ")\n"
      << "  D_aub - D_S   max " << fixed_width(max_of(gaps)) << "  median " << fixed_width(median(gaps)) << '\n'
      << "  |grid - D_S|  max " << fixed_width(max_of(oracle_diffs)) << "  median "
      << fixed_width(median(oracle_diffs)) << '\n'
      << "  Pythagorean identity residual max " << fixed_width(max_of(obs2)) << '\n';
  if (failing.empty()) {
    out << "PASS\n";
    return kOk;
  }
  out << "FAIL: " << failing.size() << " seeds:";
  for (auto s : failing) out << ' ' << s;
  out << '\n';
  return kVerifyFailed;
}

void add_optimizer_flags(CLI::App* app, OptimizerConfig& cfg, bool with_seed = true) {
  app->add_option("--lattice-points", cfg.lattice_points, "Lattice size for the D_S search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--refine-starts", cfg.refine_starts, "Lattice points refined locally")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--tol", cfg.tol, "Simplex size at which refinement stops")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  if (with_seed)
    app->add_option("--seed", cfg.seed, "Lattice rotation seed (0 = none)")->capture_default_str();
}

void add_source_flags(CLI::App* app, StateSource& s) {
  auto* p = app->add_option("--preset", s.preset, "Preset, e.g. hstate:p=0.6667,phi=1.5708");
  auto* f = app->add_option("--state", s.path, "JSON state file");
  p->excludes(f);
  f->excludes(p);
}

}  // namespace

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols = {"D_A",   "D_B",         "D_S",      "D_nub",
                                                "D_aub", "D_aub_tilde", "D_S11_nub"};
  return cols;
}

int cmd_compute(const ComputeOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BlochForm b = load_state(o.source);
    out << to_json(build_report(b, o.optimizer), o.timing).dump(2) << '\n';
    return kOk;
  });
}

int cmd_sweep(const SweepSpec& s, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(s.step > 0.0)) throw InvalidParameters("sweep: --step must be positive");
    if (s.start > s.stop) throw InvalidParameters("sweep: --start must not exceed --stop");
    if (s.side && !(*s.side > 0.0)) throw InvalidParameters("sweep: --side must be positive");
    std::vector<std::string> columns = s.columns.empty() ? sweep_columns() : s.columns;
    for (const auto& c : columns)
      if (std::find(sweep_columns().begin(), sweep_columns().end(), c) == sweep_columns().end())
        throw InvalidParameters("sweep: unknown column '" + c + "'");

    const long n = static_cast<long>(std::floor((s.stop - s.start) / s.step * (1 + 1e-12) + 1e-9));
    struct Point {
      double v;
      bool side;
    };
    std::vector<Point> points;
    for (long i = 0; i <= n; ++i) {
      const double v = i == n && std::abs(s.start + n * s.step - s.stop) < 1e-9 * s.step
                           ? s.stop
                           : s.start + static_cast<double>(i) * s.step;
      if (s.side) points.push_back({v - *s.side, true});
      points.push_back({v, false});
      if (s.side) points.push_back({v + *s.side, true});
    }

    std::ostringstream csv;
    csv << "param";
    for (const auto& c : columns) csv << ',' << c;
    csv << '\n';
    for (const Point& pt : points) {
      std::string text = s.family + ":" + s.param + "=" + format_double(pt.v);
      if (!s.fixed.empty()) text += "," + s.fixed;
      BlochForm b;
      try {
        b = make(parse_preset(text));
      } catch (const InvalidParameters&) {
        if (pt.side) continue;  // one-sided row outside the parameter range
        throw;
      }
      validate(from_bloch(b));
      csv << format_double(pt.v);
      for (const auto& c : columns) csv << ',' << format_double(sweep_value(c, b, s.optimizer));
      csv << '\n';
    }
    emit(s.out, csv.str(), out);
    return kOk;
  });
}

int cmd_iterate(const IterateOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BlochForm b = load_state(o.source);
    IterationOptions io;
    io.max_iters = o.max_iters;
    io.tol = o.tol;
    io.optimized = o.optimized;
    io.optimizer = o.optimizer;
    const IterationTrace t = iterate_adaptive(b, io);
    for (const IterationStep& s : t.steps) {
      nlohmann::ordered_json j;
      j["n"] = s.n;
      j["value"] = s.value;
      j["raw_value"] = s.raw_value;
      j["delta"] = s.delta;
      j["pair_Sprime"] = to_json(s.pair_sprime);
      j["pair_Sdprime"] = to_json(s.pair_sdprime);
      j["criterion"] = s.criterion;
      j["recurrent"] = s.recurrent;
      out << j.dump() << '\n';
    }
    nlohmann::ordered_json summary;
    summary["summary"] = {{"steps", t.steps.size()},
                          {"reference_D_S", t.reference_ds},
                          {"stalled", t.stalled},
                          {"converged", t.converged}};
    out << summary.dump() << '\n';
    return kOk;
  });
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.rank < 1 || o.rank > 4) throw InvalidParameters("verify: --rank must be in 1..4");
    if (o.preset.empty()) return verify_random(o, out);
    if (o.preset == "hstate") return verify_hstate(o, out);
    throw InvalidParameters("verify: only --preset hstate is supported");
  });
}

int cmd_random(const RandomOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    emit(o.out, state_to_json(random_state(o.rank, o.seed)) + "\n", out);
    return kOk;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric discords of two-qubit states", "geodiscord"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "Report all discords and bounds for one state");
  add_source_flags(c, compute.source);
  add_optimizer_flags(c, compute.optimizer);
  c->add_flag("!--no-timing", compute.timing, "Omit wall-clock timings");

  SweepSpec sweep;
  std::string columns;
  auto* s = app.add_subcommand("sweep", "Tabulate discords along one preset parameter");
  s->add_option("--preset", sweep.family, "Preset family")->capture_default_str();
  s->add_option("--param", sweep.param, "Swept parameter")->capture_default_str();
  s->add_option("--start", sweep.start)->capture_default_str();
  s->add_option("--stop", sweep.stop)->capture_default_str();
  s->add_option("--step", sweep.step)->capture_default_str();
  s->add_option("--fixed", sweep.fixed, "Other parameters, e.g. phi=1.5708");
  s->add_option("--out", sweep.out, "CSV path (default: standard output)");
  s->add_option("--columns", columns, "Comma-separated subset of the columns");
  s->add_option("--side", sweep.side, "Also evaluate param -/+ eps (default eps 1e-6)")
      ->expected(0, 1)
      ->default_str("1e-6");
  add_optimizer_flags(s, sweep.optimizer);

  IterateOptions iterate;
  auto* it = app.add_subcommand("iterate", "Trace the iterated adaptive bound as JSON lines");
  add_source_flags(it, iterate.source);
  it->add_option("--max-iters", iterate.max_iters)->check(CLI::NonNegativeNumber)->capture_default_str();
  it->add_option("--tol", iterate.tol, "Stop when successive values differ by less")->capture_default_str();
  it->add_flag("--optimized", iterate.optimized, "Use every eigenvector of L in each round");
  it->add_option("--lattice-points", iterate.optimizer.lattice_points)->check(CLI::PositiveNumber);
  it->add_option("--refine-starts", iterate.optimizer.refine_starts)->check(CLI::PositiveNumber);
  it->add_option("--seed", iterate.optimizer.seed, "Lattice rotation seed");

  VerifyOptions verify;
  std::string seeds;
  auto* v = app.add_subcommand("verify", "Check invariants and the grid oracle on random states");
  v->add_option("--count", verify.count)->capture_default_str();
  v->add_option("--seeds", seeds, "Inclusive seed range a..b; prints a per-seed table");
  v->add_option("--rank", verify.rank)->capture_default_str();
  v->add_flag("--strict", verify.strict, "Grid resolution 64 instead of 32");
  v->add_option("--preset", verify.preset, "hstate: check the closed forms instead");
  v->add_option("--p-grid", verify.p_grid)->capture_default_str();
  add_optimizer_flags(v, verify.optimizer);

  RandomOptions random;
  auto* r = app.add_subcommand("random", "Write a random state as JSON");
  r->add_option("--rank", random.rank)->capture_default_str();
  r->add_option("--seed", random.seed)->capture_default_str();
  r->add_option("--out", random.out, "Output path (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  if (*c) return cmd_compute(compute, out, err);
  if (*s) {
    if (s->count("--side") && !sweep.side) sweep.side = 1e-6;
    std::stringstream ss(columns);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) sweep.columns.push_back(item);
    return cmd_sweep(sweep, out, err);
  }
  if (*it) return cmd_iterate(iterate, out, err);
  if (*v) {
    if (!seeds.empty()) {
      const int code = guarded(err, [&] {
        verify.seeds = parse_seed_range(seeds);
        return kOk;
      });
      if (code != kOk) return code;
    }
    return cmd_verify(verify, out, err);
  }
  return cmd_random(random, out, err);
}

}  // namespace geodiscord::cli
