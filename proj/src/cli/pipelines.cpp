#include "pwkit/cli/pipelines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>

#include "pwkit/pw.hpp"
#include "pwkit/radon.hpp"
#include "pwkit/slice.hpp"
#include "pwkit/sphere.hpp"
#include "pwkit/weyl/invariants.hpp"

namespace pwkit {

using nlohmann::json;

namespace {

template <typename Body>
CheckRecord timed(Body&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckRecord r = body();
  r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

json grid_mesh(const RunConfig& cfg, int dim = 2) {
  return {{"dim", dim},
          {"M", dim == 3 ? cfg.grid3_points : cfg.grid_points},
          {"L", cfg.half_width},
          {"Q", cfg.directions}};
}

std::vector<RealFunction> test_functions(const RunConfig& cfg) {
  if (cfg.input_path.empty()) return bump_suite(cfg);
  RealFunction f = read_csv(cfg.input_path);
  validate(f);
  return {f};
}

Report make_report(const RunConfig& cfg, const char* command) {
  Report r;
  r.command = command;
  r.config = cfg.to_json();
  return r;
}

std::string sibling_path(const std::string& path, const std::string& suffix) {
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
  return path.substr(0, dot) + suffix;
}

}  // namespace

std::vector<RealFunction> bump_suite(const RunConfig& cfg) {
  PortableRng rng(cfg.seed);
  const GridSpec grid = GridSpec::make(2, cfg.grid_points, cfg.half_width);
  std::vector<RealFunction> out;
  for (int b = 0; b < cfg.suite_size; ++b) {
    const double radius = rng.uniform(0.4, 0.6);
    const double rho = 0.3 * std::sqrt(rng.uniform());
    const double theta = 2.0 * M_PI * rng.uniform();
    Eigen::Vector2d c(rho * std::cos(theta), rho * std::sin(theta));
    out.push_back(make_bump(c, radius, 1.0, grid));
  }
  return out;
}

Report run_radon(const RunConfig& cfg) {
  Report report = make_report(cfg, "radon");
  const auto fs = test_functions(cfg);
  const DirectionSet dirs = DirectionSet::circle(cfg.directions);
  std::vector<Sinogram> sinos;
  for (const auto& f : fs) sinos.push_back(radon_transform(f, dirs));

  report.checks.push_back(timed([&] {
    double worst = 0.0;
    for (const auto& s : sinos) worst = std::max(worst, evenness_defect(s));
    return CheckRecord::make("radon.evenness", "§1 condition (1), f(r,ω)=f(-r,-ω)", worst,
                             cfg.tol.evenness, grid_mesh(cfg));
  }));
  report.checks.push_back(timed([&] {
    double worst = 0.0;
    for (size_t i = 0; i < fs.size(); ++i) {
      const double mass = integrate(fs[i]);
      const Eigen::VectorXd m0 = moment(sinos[i], 0);
      const double gap = (m0.array() - mass).abs().maxCoeff();
      worst = std::max(worst, gap / std::max(std::abs(mass), 1e-300));
    }
    return CheckRecord::make("radon.mass", "§1 definition of Rf", worst, cfg.tol.mass,
                             grid_mesh(cfg));
  }));

  if (!cfg.output_path.empty()) {
    write_csv(cfg.output_path, sinos.front());
    std::ofstream dir_out(sibling_path(cfg.output_path, ".directions.csv"));
    if (!dir_out) throw Error("cannot write direction table next to " + cfg.output_path);
    write_direction_csv(dir_out, dirs);
  }
  return report;
}

Report run_slice(const RunConfig& cfg) {
  Report report = make_report(cfg, "slice");
  const auto fs = test_functions(cfg);
  SliceConfig sc;
  sc.directions = DirectionSet::circle(cfg.directions);

  report.checks.push_back(timed([&] {
    double worst = 0.0;
    for (const auto& f : fs) worst = std::max(worst, fourier_slice_defect(f, sc));
    return CheckRecord::make("slice.fourier_slice", "eq-FST", worst, cfg.tol.fourier_slice,
                             grid_mesh(cfg));
  }));
  report.checks.push_back(timed([&] {
    double worst = 0.0;
    for (const auto& f : fs) worst = std::max(worst, plancherel_defect(f, sc));
    json mesh = grid_mesh(cfg);
    mesh["tail_tolerance"] = sc.tail_tolerance;
    return CheckRecord::make("slice.plancherel", "§5 Theorem, dτ(r)=σ_n r^{n−1} dr", worst,
                             cfg.tol.plancherel, mesh);
  }));
  report.checks.push_back(timed([&] {
    PortableRng rng(cfg.seed + 1);
    SliceConfig fine = sc;
    fine.tail_tolerance = 1e-8;
    double worst = 0.0;
    for (const auto& f : fs) {
      const MotionGroupTransform mgt(f, fine);
      const double scale = sup_norm(f);
      const double reach = f.support_radius.value_or(f.grid.half_width);
      const int m = f.grid.points;
      for (int t = 0; t < cfg.inversion_nodes; ++t) {
        int i = 0, j = 0;
        do {
          i = rng.integer(0, m - 1);
          j = rng.integer(0, m - 1);
        } while (std::hypot(f.grid.coord(i), f.grid.coord(j)) > reach);
        Eigen::Vector2d x(f.grid.coord(i), f.grid.coord(j));
        const double gap = std::abs(mgt.invert_at(x) - f(i, j));
        worst = std::max(worst, gap / scale);
      }
    }
    json mesh = grid_mesh(cfg);
    mesh["nodes"] = cfg.inversion_nodes;
    mesh["tail_tolerance"] = fine.tail_tolerance;
    return CheckRecord::make("slice.inversion", "§5 Theorem inversion formula", worst,
                             cfg.tol.inversion, mesh);
  }));
  if (cfg.input_path.empty()) {
    report.checks.push_back(timed([&] {
      const GridSpec g3 = GridSpec::make(3, cfg.grid3_points, 1.0);
      double worst = 0.0;
      Eigen::Vector3d c1(0.1, -0.05, 0.08), c2(-0.15, 0.1, -0.1);
      for (const auto& [c, r] : {std::pair{c1, 0.5}, std::pair{c2, 0.45}}) {
        const RealFunction f = make_bump(c, r, 1.0, g3);
        worst = std::max(worst, projection_compatibility_defect(f, cfg.directions));
      }
      return CheckRecord::make("slice.projection", "eq-rad", worst, cfg.tol.projection,
                               grid_mesh(cfg, 3));
    }));
  }

  if (!cfg.output_path.empty()) {
    const MotionGroupTransform mgt(fs.front(), sc);
    std::ofstream out(cfg.output_path);
    if (!out) throw Error("cannot write " + cfg.output_path);
    write_csv(out, mgt.spectrum());
  }
  return report;
}

Report run_pw(const RunConfig& cfg) {
  Report report = make_report(cfg, "pw");
  const auto fs = test_functions(cfg);
  const DirectionSet dirs = DirectionSet::circle(cfg.directions);
  std::vector<Sinogram> sinos;
  for (const auto& f : fs) sinos.push_back(radon_transform(f, dirs));

  report.checks.push_back(timed([&] {
    double worst = 0.0;
    json radii = json::array();
    if (cfg.input_path.empty()) {
      const GridSpec grid = GridSpec::make(2, cfg.grid_points, cfg.half_width);
      for (double rs : {0.3, 0.6, 0.9})
        for (bool shifted : {false, true}) {
          Eigen::Vector2d c = shifted ? Eigen::Vector2d(0.25 * rs, -0.2 * rs)
                                      : Eigen::Vector2d::Zero();
          const RealFunction f = make_bump(c, rs - c.norm(), 1.0, grid);
          const auto est = support_radius_estimate(radon_transform(f, dirs));
          worst = std::max(worst, std::abs(est.radius / rs - 1.0));
          radii.push_back(rs);
        }
    } else {
      for (const auto& s : sinos) {
        const double rs = *s.support_radius;
        worst = std::max(worst, std::abs(support_radius_estimate(s).radius / rs - 1.0));
        radii.push_back(rs);
      }
    }
    json mesh = grid_mesh(cfg);
    mesh["radii"] = radii;
    return CheckRecord::make("pw.support_radius", "classical PW theorem, of exponential type",
                             worst, cfg.tol.support_radius, mesh);
  }));

  // Growth of the seminorm under b -> 2b, at the support radius and at half of it.
  std::vector<double> stable, unstable;
  const auto growth_start = std::chrono::steady_clock::now();
  for (const auto& s : sinos) {
    const double r = *s.support_radius;
    const ComplexGrid mesh = ComplexGrid::make(4.0 / r, 3.0 / r);
    stable.push_back(pw_seminorm(s, cfg.N, r, mesh.scaled_imag(2.0)) /
                     pw_seminorm(s, cfg.N, r, mesh));
    unstable.push_back(pw_seminorm(s, cfg.N, 0.5 * r, mesh.scaled_imag(2.0)) /
                       pw_seminorm(s, cfg.N, 0.5 * r, mesh));
  }
  const double growth_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - growth_start).count();
  json growth_mesh = grid_mesh(cfg);
  growth_mesh["N"] = cfg.N;
  growth_mesh["complex_mesh"] = {{"a", "4/r"}, {"b", "3/r"}, {"count", 9}};
  {
    auto rec = CheckRecord::make("pw.growth_stable", "Introduction, q_N(H) seminorm",
                                 *std::max_element(stable.begin(), stable.end()),
                                 cfg.tol.growth_stable, growth_mesh);
    rec.runtime_s = 0.5 * growth_time;
    report.checks.push_back(rec);
    rec = CheckRecord::make("pw.growth_unstable", "Introduction, q_N(H) seminorm",
                            *std::min_element(unstable.begin(), unstable.end()),
                            cfg.tol.growth_unstable, growth_mesh, true);
    rec.runtime_s = 0.5 * growth_time;
    report.checks.push_back(rec);
  }

  report.checks.push_back(timed([&] {
    double worst = 0.0;
    for (const auto& s : sinos) worst = std::max(worst, homogeneity_defect(s, cfg.k_max));
    json mesh = grid_mesh(cfg);
    mesh["kmax"] = cfg.k_max;
    return CheckRecord::make("pw.homogeneity", "§6 Thm PW_Th condition (2)", worst,
                             cfg.tol.homogeneity, mesh);
  }));
  report.checks.push_back(timed([&] {
    Sinogram v = sinos.front();
    v.support_radius = 0.5;
    for (Eigen::Index i = 0; i < v.offsets.size(); ++i) {
      const double p = v.offsets[i];
      const double g = std::abs(p) < 0.5 ? std::pow(1.0 - 4.0 * p * p, 2) : 0.0;
      for (Eigen::Index j = 0; j < v.directions.size(); ++j) {
        const Eigen::VectorXd w = v.directions.direction(j);
        v.values(i, j) = g * (w[0] * w[0] * w[0] - 3.0 * w[0] * w[1] * w[1]);
      }
    }
    json mesh = grid_mesh(cfg);
    mesh["kmax"] = cfg.k_max;
    return CheckRecord::make("pw.violation", "§1 condition (3), homogeneous polynomial of degree k",
                             homogeneity_defect(v, cfg.k_max), cfg.tol.violation, mesh, true);
  }));
  report.checks.push_back(timed([&] {
    double worst = 0.0;
    ExtensionConsistency last;
    for (const auto& f : fs) {
      last = extension_consistency(f);
      worst = std::max(worst, last.defect);
    }
    json mesh = grid_mesh(cfg);
    mesh["complex_mesh"] = {{"count", last.mesh.real_count}, {"b", "1/(2 pi r)"}, {"a", "4/r"}};
    mesh["directions"] = last.directions;
    return CheckRecord::make("pw.extension", "Thm firstTh proof, these two extensions agree",
                             worst, cfg.tol.extension, mesh);
  }));
  report.checks.push_back(timed([&] {
    PortableRng rng(cfg.seed + 2);
    double worst = 0.0;
    for (int t = 0; t < 64; ++t) {
      ComplexSpherePoint pt;
      pt.dim = t % 2 == 0 ? 2 : 3;
      pt.zeta = {rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
      pt.azimuth = rng.uniform(0.0, 2.0 * M_PI);
      const double scale = std::pow(std::cosh(std::abs(pt.zeta.imag())), 2);
      worst = std::max(worst, pt.quadric_defect() / scale);
    }
    return CheckRecord::make("pw.quadric", "§6 definition of S^{n−1}_C, z_1^2+...+z_n^2=1", worst,
                             cfg.tol.quadric, json{{"points", 64}});
  }));
  return report;
}

Report run_sphere(const RunConfig& cfg) {
  Report report = make_report(cfg, "sphere");
  const Eigen::Index count = cfg.sphere_samples;
  const double radii[] = {0.3, 0.5, 0.8, 1.2};
  json radii_json = json::array({0.3, 0.5, 0.8, 1.2});

  if (!cfg.input_path.empty()) {
    std::ifstream in(cfg.input_path);
    if (!in) throw Error("cannot open " + cfg.input_path);
    const ZonalProfile F = read_zonal_csv(in, cfg.sphere_n);
    const json mesh{{"n", F.n}, {"T", F.size()}, {"m_max", cfg.m_max}};
    report.checks.push_back(timed([&] {
      return CheckRecord::make("sphere.slice", "eq-FSlSn", sphere_slice_defect(F, cfg.m_max),
                               F.n == 3 ? cfg.tol.sphere_slice_n3 : cfg.tol.sphere_slice_n2, mesh);
    }));
    if (F.n == 3)
      report.checks.push_back(timed([&] {
        const auto [a, b] = sphere_support_check(F);
        return CheckRecord::make("sphere.support", "§7, supp(R(f)) ⊆ [−r,r] if and only if",
                                 std::abs(a - b) / F.step(), 1.5, mesh);
      }));
    return report;
  }

  for (int n : {3, 2}) {
    report.checks.push_back(timed([&] {
      double worst = 0.0;
      for (double ts : radii)
        worst = std::max(worst, sphere_slice_defect(ZonalProfile::cap_bump(n, ts, count), cfg.m_max));
      return CheckRecord::make(n == 3 ? "sphere.slice_n3" : "sphere.slice_n2", "eq-FSlSn", worst,
                               n == 3 ? cfg.tol.sphere_slice_n3 : cfg.tol.sphere_slice_n2,
                               json{{"n", n}, {"T", count}, {"m_max", cfg.m_max}, {"caps", radii_json}});
    }));
  }
  report.checks.push_back(timed([&] {
    double worst = 0.0;
    for (double ts : radii)
      worst = std::max(worst,
                       sphere_slice(ZonalProfile::cap_bump(3, ts, count), cfg.m_max).constant_spread);
    return CheckRecord::make("sphere.constant", "eq-FSlSn", worst, cfg.tol.sphere_constant,
                             json{{"n", 3}, {"T", count}, {"m_max", cfg.m_max}, {"caps", radii_json}});
  }));
  report.checks.push_back(timed([&] {
    double worst = 0.0;
    for (double ts : radii) {
      const ZonalProfile F = ZonalProfile::cap_power(3, ts, 2, count);
      const auto [a, b] = sphere_support_check(F);
      worst = std::max(worst, std::abs(a - b) / F.step());
    }
    auto rec = CheckRecord::make("sphere.support", "§7, supp(R(f)) ⊆ [−r,r] if and only if", worst,
                                 1.5, json{{"n", 3}, {"T", count}, {"caps", radii_json},
                                           {"profile", "cap_power 2"}, {"unit", "t-steps"}});
    return rec;
  }));
  return report;
}

namespace {

using weyl::Polynomial;
using weyl::RootSystemSpec;

Polynomial odd_part(const Polynomial& p) {
  Polynomial out(p.vars());
  for (const auto& [e, c] : p.terms())
    if (!e.empty() && e[0] % 2 == 1) out.add_term(e, c);
  return out;
}

struct ObstructionSummary {
  int codimension = 0;
  int odd_rank = 0;
  bool matches = false;
};

// The cokernel of the restriction against the span of the parts of the
// targets that are odd in x1.
ObstructionSummary obstruction_summary(const weyl::SurjectivityCertificate& cert) {
  ObstructionSummary s;
  s.codimension = cert.target_rank - cert.image_rank;
  std::vector<Polynomial> odd;
  if (cert.downstairs.family != weyl::Family::A)
    for (const auto& t : cert.targets) odd.push_back(odd_part(t));
  s.odd_rank = odd.empty() ? 0 : weyl::span_rank(odd);
  std::vector<Polynomial> together = cert.restricted_basis;
  together.insert(together.end(), odd.begin(), odd.end());
  s.matches = s.codimension == s.odd_rank && weyl::span_rank(together) == cert.target_rank;
  return s;
}

// Number of random targets whose lift fails to restrict exactly or is not
// invariant.
int lift_failures(const RootSystemSpec& up, const RootSystemSpec& down, int d, int count,
                  std::uint64_t seed) {
  PortableRng rng(seed);
  const auto basis = weyl::invariant_basis(down, d);
  const auto group = weyl::weyl_group(up);
  const int restrict_to = down.ambient_dim();
  int failures = 0;
  for (int t = 0; t < count; ++t) {
    Polynomial F(basis.front().vars());
    for (const auto& b : basis) F += b * mpq_class(rng.integer(-5, 5), rng.integer(1, 4));
    try {
      const Polynomial H = weyl::ow1_lift(F, up, down, d);
      if (!(weyl::restrict_poly(H, restrict_to) - F).is_zero() || !weyl::is_invariant(H, group))
        ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  return failures;
}

Report run_certify(const RunConfig& cfg) {
  Report report = make_report(cfg, "weyl");
  const RootSystemSpec up = RootSystemSpec::make(cfg.family, cfg.k);
  const RootSystemSpec down = RootSystemSpec::make(cfg.family, cfg.n);
  const json mesh{{"family", cfg.family}, {"k", cfg.k}, {"n", cfg.n}, {"d", cfg.degree}};
  weyl::SurjectivityCertificate cert;
  report.checks.push_back(timed([&] {
    cert = weyl::surjectivity_certificate(up, down, cfg.degree);
    json m = mesh;
    m["image_rank"] = cert.image_rank;
    m["target_rank"] = cert.target_rank;
    m["surjective"] = cert.surjective();
    const auto s = obstruction_summary(cert);
    auto rec = CheckRecord::make(cert.surjective() ? "weyl.surjectivity" : "weyl.obstruction",
                                 cert.surjective() ? "Thm OW1, is surjective for all r>0"
                                                   : "Thm th-AdmExtG/K(3), even γ_n-invariant",
                                 s.matches ? 0.0 : 1.0, 0.5, m);
    if (!cert.surjective()) {
      rec.note = "obstruction of dimension " + std::to_string(s.codimension) +
                 " spanned by invariants odd in x1";
      for (int u : cert.unreachable) rec.mesh["unreachable"].push_back(cert.targets[u].to_string());
    }
    return rec;
  }));
  if (cert.surjective())
    report.checks.push_back(timed([&] {
      const int bad = lift_failures(up, down, cfg.degree, cfg.lift_targets, cfg.seed);
      json m = mesh;
      m["targets"] = cfg.lift_targets;
      return CheckRecord::make("weyl.ow1_lift", "proof of Thm OW1, G=p_1G_1+...+p_kG_k", bad, 0.5, m);
    }));
  return report;
}

}  // namespace

Report run_weyl(const RunConfig& cfg) {
  if (cfg.certify) return run_certify(cfg);
  Report report = make_report(cfg, "weyl");

  report.checks.push_back(timed([&] {
    int mismatches = 0;
    for (int k = 1; k <= 5; ++k)
      for (int n = 1; n <= k; ++n)
        if (weyl::restricted_group(RootSystemSpec::make("B", k), n) !=
            weyl::weyl_group(RootSystemSpec::make("B", n)))
          ++mismatches;
    return CheckRecord::make("weyl.restriction_B", "eq-RestrictionOfWeyl1, W_n(k)|a_n = W(n)",
                             mismatches, 0.5, json{{"k_max", 5}, {"pairs", 15}});
  }));
  report.checks.push_back(timed([&] {
    int mismatches = 0;
    for (int k = 4; k <= 5; ++k)
      for (int n = 1; n < k; ++n) {
        const auto g = weyl::restricted_group(RootSystemSpec::make("D", k), n);
        if (g != weyl::weyl_group(RootSystemSpec::make("B", n))) ++mismatches;
      }
    return CheckRecord::make("weyl.restriction_D", "Thm th-AdmExtG/K(2), all sign changes",
                             mismatches, 0.5, json{{"k", {4, 5}}, {"pairs", 7}});
  }));
  report.checks.push_back(timed([&] {
    int failures = 0;
    for (const char* fam : {"A", "B", "D"})
      for (int k = fam[0] == 'D' ? 4 : 2; k <= 4; ++k) {
        const auto spec = RootSystemSpec::make(fam, k);
        const auto g = weyl::weyl_group(spec);
        if (static_cast<double>(g.size()) != spec.order() || !weyl::is_group(g)) ++failures;
        if (!weyl::is_group(weyl::stabilizer(spec, k - 1))) ++failures;
      }
    return CheckRecord::make("weyl.groups", "eq-defWnk, w(R^n)=R^n", failures, 0.5,
                             json{{"families", {"A", "B", "D"}}, {"k_max", 4}});
  }));

  RunConfig c = cfg;
  c.certify = true;
  for (const auto& [family, k, n, d] :
       {std::tuple{"B", 4, 2, 6}, std::tuple{"D", 5, 4, 4}}) {
    c.family = family;
    c.k = k;
    c.n = n;
    c.degree = d;
    report.append(run_certify(c));
  }
  return report;
}

Report run(const RunConfig& cfg) {
  cfg.validate();
  auto guarded = [&](const char* name, Report (*fn)(const RunConfig&)) {
    try {
      return fn(cfg);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(std::string(name) + " pipeline: " + e.what());
    }
  };
  if (cfg.command == "radon") return guarded("radon", run_radon);
  if (cfg.command == "slice") return guarded("slice", run_slice);
  if (cfg.command == "pw") return guarded("pw", run_pw);
  if (cfg.command == "sphere") return guarded("sphere", run_sphere);
  if (cfg.command == "weyl") return guarded("weyl", run_weyl);
  Report all = make_report(cfg, "all");
  for (auto [name, fn] : {std::pair{"radon", run_radon}, std::pair{"slice", run_slice},
                          std::pair{"pw", run_pw}, std::pair{"sphere", run_sphere},
                          std::pair{"weyl", run_weyl}})
    all.append(guarded(name, fn));
  return all;
}

}  // namespace pwkit
