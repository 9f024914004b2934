#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "pwkit/errors.hpp"

namespace pwkit {

/// Pass thresholds, one per check.
struct Tolerances {
  double evenness = 1e-12;
  double mass = 1e-6;
  double fourier_slice = 1e-5;
  double plancherel = 1e-4;
  double inversion = 1e-3;        // relative to sup |f|
  double projection = 1e-5;
  double support_radius = 0.05;   // relative
  double growth_stable = 2.0;     // max ratio under b -> 2b
  double growth_unstable = 2.0;   // min ratio under b -> 2b
  double homogeneity = 1e-6;
  double violation = 0.5;         // minimum defect of the violating sinogram
  double extension = 1e-5;
  double quadric = 1e-12;
  double sphere_slice_n3 = 1e-6;
  double sphere_slice_n2 = 1e-4;
  double sphere_constant = 1e-8;
};

struct RunConfig {
  std::string command = "all";  // radon slice pw sphere weyl all
  std::string preset = "desk";

  int grid_points = 257;
  double half_width = 1.5;
  int directions = 64;
  int suite_size = 5;
  int grid3_points = 97;
  int inversion_nodes = 20;
  int k_max = 6;
  int N = 2;
  int sphere_samples = 2049;
  int m_max = 12;
  int lift_targets = 10;
  std::uint64_t seed = 7;

  // pwkit sphere --n, pwkit weyl certify --family/--k/--n/--d
  int sphere_n = 3;
  bool certify = false;
  std::string family = "B";
  int k = 4;
  int n = 2;
  int degree = 6;

  std::string input_path;
  std::string output_path;
  std::string report_path;

  Tolerances tol;

  /// desk or thorough.
  static RunConfig from_preset(const std::string& name);
  /// Throws ConfigError on out-of-range values.
  void validate() const;
  nlohmann::json to_json() const;
};

/// Overrides fields of `base` from a JSON object. Unknown keys, a non-object
/// document and an empty document throw ConfigError.
RunConfig apply_json(const nlohmann::json& doc, RunConfig base);
RunConfig load_config(const std::string& path, RunConfig base);

}  // namespace pwkit
