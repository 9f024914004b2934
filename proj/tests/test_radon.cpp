#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "pwkit/radon.hpp"

using namespace pwkit;

namespace {

double bump(double r2, double R) {
  return r2 < R * R ? std::exp(1.0 - R * R / (R * R - r2)) : 0.0;
}

double simpson(double a, double b, int n, auto&& g) {
  if (b <= a) return 0.0;
  const double h = (b - a) / n;
  double acc = g(a) + g(b);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * g(a + i * h);
  return acc * h / 3.0;
}

// Line integral of the centered planar bump at offset p.
double line_oracle(double p, double R) {
  const double half = std::sqrt(std::max(R * R - p * p, 0.0));
  return simpson(-half, half, 4000, [&](double t) { return bump(p * p + t * t, R); });
}

// Plane integral of the centered spatial bump: pi int_{p^2}^{R^2} g(u) du.
double plane_oracle(double p, double R) {
  return M_PI * simpson(p * p, R * R, 4000, [&](double u) { return bump(u, R); });
}

}  // namespace

TEST_CASE("radon of a centered bump matches line integrals") {
  const double R = 0.6;
  const RealFunction f = make_bump(Eigen::Vector2d::Zero(), R, 1.0, GridSpec::make(2, 257, 1.5));
  const Sinogram s = radon_transform(f, DirectionSet::circle(16));
  CHECK(s.values.rows() == s.offsets.size());
  double worst = 0.0;
  for (Eigen::Index i = 0; i < s.offsets.size(); ++i)
    for (Eigen::Index j = 0; j < s.directions.size(); ++j)
      worst = std::max(worst, std::abs(s.values(i, j) - line_oracle(s.offsets[i], R)));
  CHECK(worst < 1e-5 * line_oracle(0.0, R));
}

TEST_CASE("translation shifts the offset by v . omega") {
  const double R = 0.5;
  const Eigen::Vector2d v(0.2, -0.15);
  const RealFunction f = make_bump(v, R, 1.0, GridSpec::make(2, 257, 1.5));
  const Sinogram s = radon_transform(f, DirectionSet::circle(12));
  double worst = 0.0;
  for (Eigen::Index i = 0; i < s.offsets.size(); i += 3)
    for (Eigen::Index j = 0; j < s.directions.size(); ++j) {
      const double shift = v.dot(Eigen::Vector2d(s.directions.direction(j)));
      worst = std::max(worst, std::abs(s.values(i, j) - line_oracle(s.offsets[i] - shift, R)));
    }
  CHECK(worst < 1e-5 * line_oracle(0.0, R));
}

TEST_CASE("radon in three dimensions matches plane integrals") {
  const double R = 0.5;
  const RealFunction f = make_bump(Eigen::Vector3d::Zero(), R, 1.0, GridSpec::make(3, 65, 1.0));
  const Sinogram s = radon_transform(f, DirectionSet::sphere(3));
  double worst = 0.0, peak = 0.0;
  for (Eigen::Index i = 0; i < s.offsets.size(); ++i) {
    const double ref = plane_oracle(s.offsets[i], R);
    peak = std::max(peak, ref);
    for (Eigen::Index j = 0; j < s.directions.size(); ++j)
      worst = std::max(worst, std::abs(s.values(i, j) - ref));
  }
  CHECK(worst < 1e-4 * peak);
}

TEST_CASE("sinograms are even and linear") {
  const GridSpec g = GridSpec::make(2, 129, 1.5);
  RealFunction a = make_bump(Eigen::Vector2d(0.3, 0.1), 0.4, 1.0, g);
  RealFunction b = make_bump(Eigen::Vector2d(-0.2, -0.3), 0.5, 2.0, g);
  a.support_radius = b.support_radius = 1.5;
  RealFunction sum(g, 2.0 * a.values - 3.0 * b.values, 1.5);
  const DirectionSet dirs = DirectionSet::circle(32);
  const Sinogram sa = radon_transform(a, dirs), sb = radon_transform(b, dirs);
  const Sinogram ss = radon_transform(sum, dirs);
  CHECK(evenness_defect(sa) < 1e-12);
  CHECK(evenness_defect(sb) < 1e-12);
  CHECK((ss.values - (2.0 * sa.values - 3.0 * sb.values)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("moments") {
  const GridSpec g = GridSpec::make(2, 257, 1.5);
  const Eigen::Vector2d v(0.25, -0.1);
  const RealFunction f = make_bump(v, 0.45, 1.0, g);
  const Sinogram s = radon_transform(f, DirectionSet::circle(32));
  const double mass = integrate(f);
  const Eigen::VectorXd m0 = moment(s, 0), m1 = moment(s, 1);
  for (Eigen::Index j = 0; j < s.directions.size(); ++j) {
    const Eigen::Vector2d w = s.directions.direction(j);
    double direct = 0.0;
    for (Eigen::Index i = 0; i < f.values.size(); ++i)
      direct += f.values[i] * w.dot(Eigen::Vector2d(f.node(i)));
    direct *= g.cell_volume();
    CHECK(m0[j] == doctest::Approx(mass).epsilon(1e-6));
    CHECK(std::abs(m1[j] - direct) < 1e-6);
    CHECK(std::abs(m1[j] - mass * v.dot(w)) < 1e-6);
  }
  CHECK_THROWS_AS(moment(s, -1), InvalidArgument);
}

TEST_CASE("zero function has zero sinogram") {
  const RealFunction f(GridSpec::make(2, 33, 1.0));
  const Sinogram s = radon_transform(f, DirectionSet::circle(8));
  CHECK(s.values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("inverse radon recovers the bump") {
  const GridSpec g = GridSpec::make(2, 65, 1.2);
  const RealFunction f = make_bump(Eigen::Vector2d(0.1, 0.05), 0.6, 1.0, g);
  const Sinogram s = radon_transform(f, DirectionSet::circle(64));
  const RealFunction back = inverse_radon(s);
  CHECK((back.values - f.values).cwiseAbs().maxCoeff() < 1e-2);

  Sinogram odd = s;
  for (Eigen::Index i = 0; i < odd.offsets.size(); ++i) odd.values.row(i) *= odd.offsets[i];
  CHECK_THROWS_AS(inverse_radon(odd), NotEven);
}

TEST_CASE("offsets and csv") {
  const GridSpec g = GridSpec::make(2, 33, 1.0);
  const Eigen::VectorXd p = default_offsets(g);
  CHECK(p.size() % 2 == 1);
  CHECK(p[p.size() / 2] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(p[p.size() - 1] >= std::sqrt(2.0) * g.half_width - 1e-12);

  const RealFunction f = make_bump(Eigen::Vector2d::Zero(), 0.5, 1.0, g);
  const Sinogram s = radon_transform(f, DirectionSet::circle(8));
  std::stringstream out, dirs;
  write_csv(out, s);
  std::string line;
  std::getline(out, line);
  CHECK(line == std::to_string(p.size()) + ",8,2");
  int rows = 0;
  while (std::getline(out, line)) ++rows;
  CHECK(rows == p.size() * 8);
  write_direction_csv(dirs, s.directions);
  std::getline(dirs, line);
  CHECK(line.rfind("0,1,0,", 0) == 0);

  Sinogram broken = s;
  broken.offsets[0] -= 0.01;
  CHECK_THROWS_AS(broken.check_offsets(), InvalidArgument);
}
