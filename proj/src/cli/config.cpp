#include "pwkit/cli/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace pwkit {

using nlohmann::json;

RunConfig RunConfig::from_preset(const std::string& name) {
  RunConfig c;
  c.preset = name;
  if (name == "desk") return c;
  if (name == "thorough") {
    c.grid_points = 513;
    c.directions = 128;
    c.suite_size = 10;
    c.grid3_points = 129;
    c.inversion_nodes = 50;
    c.sphere_samples = 4097;
    c.lift_targets = 25;
    return c;
  }
  throw ConfigError("unknown preset: " + name);
}

void RunConfig::validate() const {
  static const char* commands[] = {"radon", "slice", "pw", "sphere", "weyl", "all"};
  bool known = false;
  for (const char* c : commands) known = known || command == c;
  if (!known) throw ConfigError("unknown command: " + command);
  if (grid_points < 33 || grid_points % 2 == 0) throw ConfigError("grid points must be odd and >= 33");
  if (grid3_points < 33 || grid3_points % 2 == 0)
    throw ConfigError("3-D grid points must be odd and >= 33");
  if (!(half_width > 0.0)) throw ConfigError("half width must be positive");
  if (directions < 8) throw ConfigError("need at least 8 directions");
  if (suite_size < 1) throw ConfigError("suite size must be positive");
  if (inversion_nodes < 1) throw ConfigError("need at least one inversion node");
  if (k_max < 0 || k_max > 8) throw ConfigError("kmax must lie in [0, 8]");
  if (N < 0) throw ConfigError("N must be nonnegative");
  if (sphere_samples < 5 || sphere_samples % 2 == 0)
    throw ConfigError("sphere samples must be odd and >= 5");
  if (m_max < 1) throw ConfigError("m_max must be positive");
  if (sphere_n != 2 && sphere_n != 3) throw ConfigError("sphere n must be 2 or 3");
  if (k < 1 || n < 0 || n > k) throw ConfigError("need 0 <= n <= k");
  if (degree < 0 || degree > 10) throw ConfigError("degree must lie in [0, 10]");
  const double tols[] = {tol.evenness,        tol.mass,           tol.fourier_slice,
                         tol.plancherel,      tol.inversion,      tol.projection,
                         tol.support_radius,  tol.growth_stable,  tol.growth_unstable,
                         tol.homogeneity,     tol.violation,      tol.extension,
                         tol.quadric,         tol.sphere_slice_n3, tol.sphere_slice_n2,
                         tol.sphere_constant};
  for (double t : tols)
    if (!(t > 0.0)) throw ConfigError("tolerances must be positive");
}

namespace {

std::map<std::string, double*> tolerance_fields(Tolerances& t) {
  return {{"evenness", &t.evenness},
          {"mass", &t.mass},
          {"fourier_slice", &t.fourier_slice},
          {"plancherel", &t.plancherel},
          {"inversion", &t.inversion},
          {"projection", &t.projection},
          {"support_radius", &t.support_radius},
          {"growth_stable", &t.growth_stable},
          {"growth_unstable", &t.growth_unstable},
          {"homogeneity", &t.homogeneity},
          {"violation", &t.violation},
          {"extension", &t.extension},
          {"quadric", &t.quadric},
          {"sphere_slice_n3", &t.sphere_slice_n3},
          {"sphere_slice_n2", &t.sphere_slice_n2},
          {"sphere_constant", &t.sphere_constant}};
}

std::map<std::string, int*> int_fields(RunConfig& c) {
  return {{"directions", &c.directions},   {"suite_size", &c.suite_size},
          {"grid3_points", &c.grid3_points}, {"inversion_nodes", &c.inversion_nodes},
          {"kmax", &c.k_max},              {"N", &c.N},
          {"sphere_samples", &c.sphere_samples}, {"m_max", &c.m_max},
          {"lift_targets", &c.lift_targets}, {"sphere_n", &c.sphere_n},
          {"k", &c.k},                     {"n", &c.n},
          {"d", &c.degree}};
}

std::map<std::string, std::string*> string_fields(RunConfig& c) {
  return {{"command", &c.command}, {"family", &c.family}, {"in", &c.input_path},
          {"out", &c.output_path}, {"report", &c.report_path}};
}

}  // namespace

json RunConfig::to_json() const {
  RunConfig copy = *this;
  json j;
  j["preset"] = preset;
  j["grid"] = {grid_points, half_width};
  j["seed"] = seed;
  j["certify"] = certify;
  for (const auto& [k, v] : int_fields(copy)) j[k] = *v;
  for (const auto& [k, v] : string_fields(copy)) j[k] = *v;
  json t;
  for (const auto& [k, v] : tolerance_fields(copy.tol)) t[k] = *v;
  j["tolerances"] = t;
  return j;
}

RunConfig apply_json(const json& doc, RunConfig base) {
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
  if (doc.empty()) throw ConfigError("configuration is empty");
  if (doc.contains("preset")) {
    RunConfig fresh = RunConfig::from_preset(doc.at("preset").get<std::string>());
    fresh.command = base.command;
    fresh.input_path = base.input_path;
    fresh.output_path = base.output_path;
    fresh.report_path = base.report_path;
    base = fresh;
  }
  auto ints = int_fields(base);
  auto strings = string_fields(base);
  auto tols = tolerance_fields(base.tol);
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "preset") continue;
      if (key == "grid") {
        if (!value.is_array() || value.size() != 2) throw ConfigError("grid must be [M, L]");
        base.grid_points = value[0].get<int>();
        base.half_width = value[1].get<double>();
      } else if (key == "seed") {
        base.seed = value.get<std::uint64_t>();
      } else if (key == "certify") {
        base.certify = value.get<bool>();
      } else if (key == "tolerances") {
        if (!value.is_object()) throw ConfigError("tolerances must be an object");
        for (const auto& [name, v] : value.items()) {
          const auto it = tols.find(name);
          if (it == tols.end()) throw ConfigError("unknown tolerance: " + name);
          *it->second = v.get<double>();
        }
      } else if (auto it = ints.find(key); it != ints.end()) {
        *it->second = value.get<int>();
      } else if (auto st = strings.find(key); st != strings.end()) {
        *st->second = value.get<std::string>();
      } else {
        throw ConfigError("unknown key: " + key);
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value: ") + e.what());
  }
  base.validate();
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw ConfigError(path + " is empty");
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return apply_json(doc, std::move(base));
}

}  // namespace pwkit
