#pragma once

// JSON state files. Two input layouts are accepted:
//   {"matrix": [[[re, im], x4] x4]}                    row-major density matrix
//   {"bloch": {"x": [3], "y": [3], "T": [[3] x3]}}     Bloch form
// Output is always the Bloch layout with 17 significant digits.

#include <string>

#include "geodiscord/bloch.hpp"

namespace geodiscord {

class StateParseError : public std::runtime_error {
 public:
  explicit StateParseError(const std::string& what) : std::runtime_error(what) {}
};

class StateIoError : public std::runtime_error {
 public:
  explicit StateIoError(const std::string& what) : std::runtime_error(what) {}
};

/// Throws StateParseError on malformed input and InvalidState when a matrix
/// input fails the density-matrix checks. Bloch inputs are not validated.
BlochForm parse_state_json(const std::string& text);
BlochForm read_state_file(const std::string& path);

std::string state_to_json(const BlochForm& b);
void write_state_file(const std::string& path, const BlochForm& b);

/// %.17g, enough to round-trip any double.
std::string format_double(double v);

}  // namespace geodiscord
