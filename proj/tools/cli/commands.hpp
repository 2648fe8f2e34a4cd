#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geodiscord/sphere.hpp"

namespace geodiscord::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kInvalidState = 3,
  kIoError = 4,
};

/// Either a preset string or a JSON state file.
struct StateSource {
  std::string preset;
  std::string path;
};

struct ComputeOptions {
  StateSource source;
  OptimizerConfig optimizer;
  bool timing = true;
};

struct SweepSpec {
  std::string family = "hstate";
  std::string param = "p";
  double start = 0.0;
  double stop = 1.0;
  double step = 0.01;
  std::string fixed;  // "key=value,..." appended to every preset string
  std::string out;    // empty: standard output
  std::vector<std::string> columns;  // empty: all
  std::optional<double> side;        // add param -/+ side rows
  OptimizerConfig optimizer;
};

struct IterateOptions {
  StateSource source;
  int max_iters = 50;
  double tol = 1e-14;
  bool optimized = false;
  OptimizerConfig optimizer;
};

struct VerifyOptions {
  int count = 200;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> seeds;  // inclusive
  int rank = 4;
  bool strict = false;
  std::string preset;  // "hstate" switches to the closed-form check
  int p_grid = 101;
  OptimizerConfig optimizer;
};

struct RandomOptions {
  int rank = 4;
  std::uint64_t seed = 0;
  std::string out;
};

/// CSV columns written by sweep, in order.
const std::vector<std::string>& sweep_columns();

int cmd_compute(const ComputeOptions& o, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepSpec& s, std::ostream& out, std::ostream& err);
int cmd_iterate(const IterateOptions& o, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err);
int cmd_random(const RandomOptions& o, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geodiscord::cli
