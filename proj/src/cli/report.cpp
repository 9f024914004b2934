#include "pwkit/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pwkit/errors.hpp"

namespace pwkit {

using nlohmann::json;

CheckRecord CheckRecord::make(std::string name, std::string anchor, double defect,
                              double threshold, json mesh, bool expect_above) {
  CheckRecord r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.defect = defect;
  r.threshold = threshold;
  r.expect_above = expect_above;
  r.pass = std::isfinite(defect) && (expect_above ? defect > threshold : defect < threshold);
  r.mesh = std::move(mesh);
  return r;
}

json CheckRecord::to_json(bool with_runtime) const {
  json j{{"name", name},           {"anchor", anchor}, {"defect", defect},
         {"threshold", threshold}, {"pass", pass},     {"mesh", mesh},
         {"relation", expect_above ? ">" : "<"}};
  if (!std::isfinite(defect)) j["defect"] = nullptr;
  if (with_runtime) j["runtime_s"] = runtime_s;
  if (!note.empty()) j["note"] = note;
  return j;
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

std::vector<bool> Report::pass_vector() const {
  std::vector<bool> v;
  for (const auto& c : checks) v.push_back(c.pass);
  return v;
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

json Report::to_json(bool with_runtime) const {
  json j{{"command", command}, {"config", config}, {"all_pass", all_pass()}};
  j["checks"] = json::array();
  for (const auto& c : checks) j["checks"].push_back(c.to_json(with_runtime));
  return j;
}

void Report::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write report to " + path);
  out << to_json().dump(2) << '\n';
}

std::string Report::summary() const {
  std::ostringstream os;
  char line[256];
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-4s %-28s %12.4e %s %-10.3e %7.2fs\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.defect, c.expect_above ? ">" : "<",
                  c.threshold, c.runtime_s);
    os << line;
  }
  return os.str();
}

}  // namespace pwkit
