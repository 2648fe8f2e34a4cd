#include "geodiscord/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace geodiscord {

namespace {

using nlohmann::json;

double number(const json& j, const char* where) {
  if (!j.is_number()) throw StateParseError(std::string("expected a number in ") + where);
  return j.get<double>();
}

Vec3 vec3(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 3)
    throw StateParseError(std::string("'") + where + "' must be an array of 3 numbers");
  return Vec3(number(j[0], where), number(j[1], where), number(j[2], where));
}

BlochForm parse_bloch(const json& j) {
  if (!j.is_object()) throw StateParseError("'bloch' must be an object");
  for (const char* key : {"x", "y", "T"})
    if (!j.contains(key)) throw StateParseError(std::string("'bloch' is missing '") + key + "'");
  BlochForm b;
  b.x = vec3(j["x"], "x");
  b.y = vec3(j["y"], "y");
  const json& t = j["T"];
  if (!t.is_array() || t.size() != 3) throw StateParseError("'T' must be a 3x3 array");
  for (int i = 0; i < 3; ++i) b.T.row(i) = vec3(t[i], "T").transpose();
  return b;
}

BlochForm parse_matrix(const json& j) {
  if (!j.is_array() || j.size() != 4) throw StateParseError("'matrix' must have 4 rows");
  DensityMatrix rho;
  for (int r = 0; r < 4; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != 4)
      throw StateParseError("each 'matrix' row must have 4 entries");
    for (int c = 0; c < 4; ++c) {
      const json& e = row[c];
      if (e.is_number()) {
        rho.entries(r, c) = Complex(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2) {
        rho.entries(r, c) = Complex(number(e[0], "matrix"), number(e[1], "matrix"));
      } else {
        throw StateParseError("'matrix' entries must be [re, im] pairs");
      }
    }
  }
  return to_bloch(rho);
}

std::string vec_json(const Vec3& v) {
  return "[" + format_double(v[0]) + ", " + format_double(v[1]) + ", " + format_double(v[2]) +
         "]";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

BlochForm parse_state_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StateParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw StateParseError("state must be a JSON object");
  if (j.contains("bloch")) return parse_bloch(j["bloch"]);
  if (j.contains("matrix")) return parse_matrix(j["matrix"]);
  throw StateParseError("state needs a 'bloch' or 'matrix' member");
}

BlochForm read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateIoError("cannot open state file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_state_json(ss.str());
}

std::string state_to_json(const BlochForm& b) {
  std::string out = "{\"bloch\": {\"x\": " + vec_json(b.x) + ", \"y\": " + vec_json(b.y) +
                    ", \"T\": [";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ", ";
    out += vec_json(b.T.row(i).transpose());
  }
  out += "]}}";
  return out;
}

void write_state_file(const std::string& path, const BlochForm& b) {
  std::ofstream out(path);
  if (!out) throw StateIoError("cannot write state file '" + path + "'");
  out << state_to_json(b) << '\n';
  if (!out) throw StateIoError("write failed for '" + path + "'");
}

}  // namespace geodiscord
