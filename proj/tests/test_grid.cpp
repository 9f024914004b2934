#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "pwkit/grid.hpp"
#include "pwkit/interpolation.hpp"
#include "pwkit/quadrature.hpp"

using namespace pwkit;

namespace {

// Composite Simpson on [0, 1] of 2 pi e r exp(-1 / (1 - r^2)), the integral
// of the unit bump exp(1 - 1 / (1 - |x|^2)) over the plane.
double unit_bump_integral() {
  const int n = 200000;
  const double h = 1.0 / n;
  auto g = [](double r) {
    return r >= 1.0 ? 0.0 : 2.0 * M_PI * std::exp(1.0) * r * std::exp(-1.0 / (1.0 - r * r));
  };
  double acc = g(0.0) + g(1.0);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * g(i * h);
  return acc * h / 3.0;
}

}  // namespace

TEST_CASE("grid spec") {
  const GridSpec g = GridSpec::make(2, 257, 1.5);
  CHECK(g.spacing() == doctest::Approx(3.0 / 256));
  CHECK(g.coord(128) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(g.size() == 257 * 257);
  CHECK_THROWS_AS(GridSpec::make(2, 256, 1.5), InvalidGrid);
  CHECK_THROWS_AS(GridSpec::make(4, 33, 1.5), UnsupportedDimension);
  CHECK_THROWS_AS(GridSpec::make(2, 33, -1.0), InvalidGrid);
}

TEST_CASE("bump integral matches radial quadrature") {
  const double oracle = unit_bump_integral();
  CHECK(oracle / std::exp(1.0) == doctest::Approx(0.46651239).epsilon(1e-6));
  for (double R : {0.5, 0.8}) {
    Eigen::Vector2d c(0.1, -0.2);
    const RealFunction f = make_bump(c, R, 1.0, GridSpec::make(2, 1025, 1.5));
    CHECK(integrate(f) == doctest::Approx(oracle * R * R).epsilon(1e-9));
    CHECK(*f.support_radius == doctest::Approx(R + c.norm()));
  }
}

TEST_CASE("bump is supported in its ball") {
  Eigen::Vector3d c(0.1, 0.0, -0.1);
  const RealFunction f = make_bump(c, 0.4, 2.0, GridSpec::make(3, 33, 1.0));
  CHECK_NOTHROW(validate(f));
  CHECK(sup_norm(f) <= 2.0);
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    if ((f.node(i) - Eigen::VectorXd(c)).norm() >= 0.4) CHECK(f.values[i] == 0.0);
}

TEST_CASE("validate rejects mass outside the declared support") {
  RealFunction f = make_bump(Eigen::Vector2d::Zero(), 0.5, 1.0, GridSpec::make(2, 65, 1.0));
  f.values[0] = 1e-3;
  CHECK_THROWS_AS(validate(f), InvalidArgument);
  f.values[0] = std::nan("");
  CHECK_THROWS_AS(validate(f), InvalidArgument);
  CHECK_THROWS_AS(make_bump(Eigen::Vector2d(0.9, 0.0), 0.5, 1.0, GridSpec::make(2, 65, 1.0)),
                  BallOutsideGrid);
}

TEST_CASE("function csv round trip") {
  const RealFunction f = make_bump(Eigen::Vector2d(0.1, 0.2), 0.3, 1.5, GridSpec::make(2, 33, 1.0));
  std::stringstream buf;
  write_csv(buf, f);
  std::string header;
  std::getline(buf, header);
  CHECK(header == "2,33,1");
  buf.seekg(0);
  const RealFunction g = read_csv(buf);
  CHECK(g.grid == f.grid);
  CHECK((g.values - f.values).cwiseAbs().maxCoeff() == 0.0);
  CHECK(*g.support_radius <= *f.support_radius);

  std::stringstream bad("2,33,1\n1\n2\n");
  CHECK_THROWS_AS(read_csv(bad), ParseError);
}

TEST_CASE("sphere area") {
  CHECK(sphere_area(2) == doctest::Approx(2.0 * M_PI));
  CHECK(sphere_area(3) == doctest::Approx(4.0 * M_PI));
}

TEST_CASE("circle directions") {
  const DirectionSet d = DirectionSet::circle(64);
  CHECK(d.size() == 64);
  CHECK(d.weights().sum() == doctest::Approx(1.0));
  CHECK(d.is_antipodal());
  for (Eigen::Index j = 0; j < d.size(); ++j) {
    CHECK(d.direction(j).norm() == doctest::Approx(1.0));
    CHECK((d.direction(d.antipode(j)) + d.direction(j)).norm() < 1e-14);
  }
  CHECK(d.exactness_defect() < 1e-13);
  CHECK_FALSE(DirectionSet::circle(63).is_antipodal());
  CHECK_THROWS_AS(DirectionSet::circle(63).antipode(0), DirectionsNotAntipodal);
}

TEST_CASE("sphere directions integrate polynomials exactly") {
  const DirectionSet d = DirectionSet::sphere(8);
  CHECK(d.weights().sum() == doctest::Approx(1.0));
  CHECK(d.is_antipodal());
  CHECK(d.exactness_defect() < 1e-13);
  // Mean of z^2 over S^2 is 1/3, of z^4 is 1/5.
  double m2 = 0.0, m4 = 0.0;
  for (Eigen::Index j = 0; j < d.size(); ++j) {
    const double z = d.directions()(2, j);
    m2 += d.weights()[j] * z * z;
    m4 += d.weights()[j] * std::pow(z, 4);
  }
  CHECK(m2 == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(m4 == doctest::Approx(0.2).epsilon(1e-13));
}

TEST_CASE("quadrature rules") {
  const GaussRule g = gauss_legendre(10, 0.0, 2.0);
  CHECK((g.weights.array() * g.nodes.array().pow(19)).sum() ==
        doctest::Approx(std::pow(2.0, 20) / 20).epsilon(1e-13));
  const Eigen::Index n = 101;
  const Eigen::VectorXd w = gregory_weights(n, 0.01);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) acc += w[i] * std::pow(0.01 * i, 7);
  CHECK(acc == doctest::Approx(1.0 / 8).epsilon(1e-13));
}

TEST_CASE("keys interpolation reproduces cubics") {
  const GridSpec g = GridSpec::make(2, 65, 1.0);
  RealFunction f(g);
  auto p = [](double x, double y) { return 1.0 + x - 2 * y + x * y * y + 0.5 * x * x * x; };
  for (Eigen::Index i = 0; i < f.values.size(); ++i) {
    const Eigen::VectorXd x = f.node(i);
    f.values[i] = p(x[0], x[1]);
  }
  for (auto [x, y] : {std::pair{0.013, -0.27}, std::pair{0.5, 0.4999}, std::pair{-0.71, 0.1}}) {
    const double pt[2] = {x, y};
    CHECK(interpolate(f, pt) == doctest::Approx(p(x, y)).epsilon(1e-12));
  }
  CHECK(keys_kernel(0.0) == 1.0);
  CHECK(keys_kernel(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(keys_kernel(3.5) == 0.0);
}
