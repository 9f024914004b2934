#include <CLI11.hpp>

#include <iostream>

#include "pwkit/cli/pipelines.hpp"

namespace {

struct Flags {
  std::string preset = "desk";
  std::string config;
  std::string grid;
  int directions = 0;
  int kmax = -1;
  int N = -1;
  std::uint64_t seed = 7;
  std::string report;
  std::string in;
  std::string out;
  int sphere_n = 3;
  std::string family = "B";
  int k = 4;
  int n = 2;
  int d = 6;
};

pwkit::RunConfig build_config(const CLI::App& app, const Flags& fl, const std::string& command,
                              bool certify) {
  pwkit::RunConfig cfg = pwkit::RunConfig::from_preset(fl.preset);
  cfg.command = command;
  if (!fl.config.empty()) cfg = pwkit::load_config(fl.config, cfg);
  auto given = [&](const char* name) { return app.get_option(name)->count() > 0; };
  if (given("--grid")) {
    const auto comma = fl.grid.find(',');
    if (comma == std::string::npos) throw pwkit::ConfigError("--grid expects M,L");
    try {
      cfg.grid_points = std::stoi(fl.grid.substr(0, comma));
      cfg.half_width = std::stod(fl.grid.substr(comma + 1));
    } catch (const std::exception&) {
      throw pwkit::ConfigError("--grid expects M,L, got " + fl.grid);
    }
  }
  if (given("--directions")) cfg.directions = fl.directions;
  if (given("--kmax")) cfg.k_max = fl.kmax;
  if (given("--N")) cfg.N = fl.N;
  if (given("--seed")) cfg.seed = fl.seed;
  if (given("--report")) cfg.report_path = fl.report;
  cfg.input_path = fl.in.empty() ? cfg.input_path : fl.in;
  cfg.output_path = fl.out.empty() ? cfg.output_path : fl.out;
  if (command == "sphere") cfg.sphere_n = fl.sphere_n;
  if (certify) {
    cfg.certify = true;
    cfg.family = fl.family;
    cfg.k = fl.k;
    cfg.n = fl.n;
    cfg.degree = fl.d;
  }
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paley-Wiener certification toolkit"};
  app.require_subcommand(1);
  Flags fl;
  app.add_option("--preset", fl.preset, "desk or thorough")->check(CLI::IsMember({"desk", "thorough"}));
  app.add_option("--config", fl.config, "JSON configuration file");
  app.add_option("--grid", fl.grid, "grid as M,L");
  app.add_option("--directions", fl.directions, "number of directions Q");
  app.add_option("--kmax", fl.kmax, "largest moment degree");
  app.add_option("--N", fl.N, "polynomial weight exponent");
  app.add_option("--seed", fl.seed, "seed for the test functions");
  app.add_option("--report", fl.report, "JSON report path");

  auto* radon = app.add_subcommand("radon", "Radon transform checks");
  auto* slice = app.add_subcommand("slice", "Fourier-slice, Plancherel and inversion checks");
  auto* pw = app.add_subcommand("pw", "Paley-Wiener checks");
  auto* sphere = app.add_subcommand("sphere", "compact sphere checks");
  auto* weyl = app.add_subcommand("weyl", "Weyl group restriction checks");
  auto* all = app.add_subcommand("all", "every pipeline");
  for (auto* sub : {radon, slice, pw}) {
    sub->add_option("--in", fl.in, "function CSV");
    sub->add_option("--out", fl.out, "CSV output");
  }
  sphere->add_option("--in", fl.in, "profile CSV");
  sphere->add_option("--n", fl.sphere_n, "sphere dimension (2 or 3)");
  auto* certify = weyl->add_subcommand("certify", "restriction certificate for one pair");
  certify->add_option("--family", fl.family, "A, B, C or D");
  certify->add_option("--k", fl.k, "upstairs rank")->required();
  certify->add_option("--n", fl.n, "downstairs rank")->required();
  certify->add_option("--d", fl.d, "degree bound");
  for (auto* sub : {radon, slice, pw, sphere, weyl, all}) sub->fallthrough();
  certify->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    std::string command;
    for (auto* sub : {radon, slice, pw, sphere, weyl, all})
      if (sub->parsed()) command = sub->get_name();
    const pwkit::RunConfig cfg = build_config(app, fl, command, certify->parsed());
    const pwkit::Report report = pwkit::run(cfg);
    std::cout << report.summary();
    if (!cfg.report_path.empty()) report.write(cfg.report_path);
    std::cout << (report.all_pass() ? "all checks pass" : "some checks fail") << '\n';
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
