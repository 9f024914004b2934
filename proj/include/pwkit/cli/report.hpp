#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pwkit {

/// One certified property: pass when defect < threshold, or defect >
/// threshold for checks that expect a large value.
struct CheckRecord {
  std::string name;
  std::string anchor;
  double defect = 0.0;
  double threshold = 0.0;
  bool expect_above = false;
  bool pass = false;
  double runtime_s = 0.0;
  nlohmann::json mesh = nlohmann::json::object();
  std::string note;

  static CheckRecord make(std::string name, std::string anchor, double defect, double threshold,
                          nlohmann::json mesh = nlohmann::json::object(),
                          bool expect_above = false);
  nlohmann::json to_json(bool with_runtime = true) const;
};

struct Report {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  std::vector<bool> pass_vector() const;
  void append(const Report& other);
  nlohmann::json to_json(bool with_runtime = true) const;
  void write(const std::string& path) const;
  /// One line per check.
  std::string summary() const;
};

}  // namespace pwkit
