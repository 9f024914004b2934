#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pwkit/pw.hpp"
#include "pwkit/slice.hpp"

using namespace pwkit;

namespace {

const GridSpec kGrid = GridSpec::make(2, 257, 1.5);

double bump(double r2, double R) {
  return r2 < R * R ? std::exp(1.0 - R * R / (R * R - r2)) : 0.0;
}

double simpson(double a, double b, int n, auto&& g) {
  const double h = (b - a) / n;
  double acc = g(a) + g(b);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * g(a + i * h);
  return acc * h / 3.0;
}

// int Rf(p) exp(2 pi y p) dp for the centered bump, Rf by nested Simpson.
double laplace_oracle(double y, double R) {
  return simpson(-R, R, 2000, [&](double p) {
    const double half = std::sqrt(std::max(R * R - p * p, 0.0));
    const double line = half == 0.0 ? 0.0 : simpson(-half, half, 1000, [&](double t) {
      return bump(p * p + t * t, R);
    });
    return line * std::exp(2.0 * M_PI * y * p);
  });
}

Sinogram harmonic_sinogram(int degree) {
  Sinogram s;
  s.offsets = default_offsets(kGrid);
  s.directions = DirectionSet::circle(64);
  s.values.resize(s.offsets.size(), 64);
  s.support_radius = 0.5;
  for (Eigen::Index i = 0; i < s.offsets.size(); ++i) {
    const double p = s.offsets[i];
    const double g = std::abs(p) < 0.5 ? std::pow(1.0 - 4.0 * p * p, 2) : 0.0;
    for (Eigen::Index j = 0; j < 64; ++j) s.values(i, j) = g * std::cos(degree * s.directions.angle(j));
  }
  return s;
}

}  // namespace

TEST_CASE("complex slice on the imaginary axis matches the Laplace integral") {
  const double R = 0.5;
  const Sinogram s = radon_transform(make_bump(Eigen::Vector2d::Zero(), R, 1.0, kGrid),
                                     DirectionSet::circle(8));
  for (double y : {0.5, 2.0, 5.0}) {
    const double ref = laplace_oracle(y, R);
    CHECK(std::abs(complex_slice_eval(s, {0.0, y}, 3) - ref) < 1e-4 * ref);
    CHECK(std::abs(log_abs_slice_eval(s, {0.0, y}, 3) - std::log(ref)) < 1e-4);
  }
}

TEST_CASE("complex slice agrees with the real slice and obeys the type bound") {
  const RealFunction f = make_bump(Eigen::Vector2d(0.2, 0.1), 0.4, 1.0, kGrid);
  const Sinogram s = radon_transform(f, DirectionSet::circle(16));
  Eigen::VectorXd radii(3);
  radii << 0.0, 1.3, 3.1;
  const VectorFT ft = radial_fourier(s, radii);
  for (Eigen::Index i = 0; i < 3; ++i)
    CHECK(std::abs(complex_slice_eval(s, radii[i], 5) - ft.values(i, 5)) < 1e-12);

  const double mass = integrate(f), r = *f.support_radius;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int t = 0; t < 50; ++t) {
    const std::complex<double> z(u(rng), u(rng));
    const double bound = mass * std::exp(2.0 * M_PI * r * std::abs(z.imag()));
    CHECK(std::abs(complex_slice_eval(s, z, t % 16)) <= bound * (1.0 + 1e-9));
  }
}

TEST_CASE("support radius estimate") {
  const DirectionSet dirs = DirectionSet::circle(64);
  for (double rs : {0.3, 0.6})
    for (bool shifted : {false, true}) {
      const Eigen::Vector2d c = shifted ? Eigen::Vector2d(0.25 * rs, -0.2 * rs) : Eigen::Vector2d::Zero();
      const Sinogram s = radon_transform(make_bump(c, rs - c.norm(), 1.0, kGrid), dirs);
      const SupportEstimate e = support_radius_estimate(s);
      CHECK(std::abs(e.radius / rs - 1.0) < 0.05);
      CHECK(e.per_direction.size() == 64);
    }
  Sinogram zero = harmonic_sinogram(0);
  zero.values.setZero();
  CHECK_THROWS_AS(support_radius_estimate(zero), ZeroInput);
}

TEST_CASE("growth dichotomy") {
  const Sinogram s = radon_transform(make_bump(Eigen::Vector2d(0.1, 0.1), 0.5, 1.0, kGrid),
                                     DirectionSet::circle(32));
  const double r = *s.support_radius;
  const ComplexGrid mesh = ComplexGrid::make(4.0 / r, 3.0 / r);
  const double at_support = pw_seminorm(s, 2, r, mesh.scaled_imag(2)) / pw_seminorm(s, 2, r, mesh);
  const double at_half = pw_seminorm(s, 2, r / 2, mesh.scaled_imag(2)) / pw_seminorm(s, 2, r / 2, mesh);
  CHECK(at_support < 2.0);
  CHECK(at_half > 2.0);
  CHECK(mesh.points().size() == 81);
  CHECK_THROWS_AS(ComplexGrid::make(0.0, 1.0), InvalidArgument);
}

TEST_CASE("taylor coefficients") {
  const RealFunction f = make_bump(Eigen::Vector2d::Zero(), 0.5, 1.0, kGrid);
  const Sinogram s = radon_transform(f, DirectionSet::circle(64));
  const auto t0 = taylor_coefficient(s, 0);
  CHECK(std::abs(t0.coefficients[0] - integrate(f)) < 1e-9);
  CHECK(t0.mass_where([](int l) { return l != 0; }) < 1e-8);
  const auto t2 = taylor_coefficient(s, 2);
  CHECK(t2.mass_where([](int l) { return l != 0; }) < 1e-8);
  CHECK_THROWS_AS(taylor_coefficient(s, 9), InvalidArgument);
}

TEST_CASE("homogeneity") {
  const Sinogram s = radon_transform(make_bump(Eigen::Vector2d(0.2, -0.2), 0.5, 1.0, kGrid),
                                     DirectionSet::circle(64));
  const HomogeneityReport rep = homogeneity(s, 6);
  CHECK(rep.per_k.size() == 7);
  CHECK(rep.defect < 1e-6);
  CHECK(homogeneity_defect(harmonic_sinogram(3), 6) == doctest::Approx(1.0).epsilon(1e-9));
  Sinogram zero = harmonic_sinogram(0);
  zero.values.setZero();
  CHECK(homogeneity_defect(zero, 6) == 0.0);
  CHECK_THROWS_AS(homogeneity(s, 9), InvalidArgument);
}

TEST_CASE("complexified sphere") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 20; ++t) {
    ComplexSpherePoint pt{2 + t % 2, {u(rng), u(rng)}, u(rng)};
    CHECK(pt.quadric_defect() < 1e-12 * std::pow(std::cosh(pt.zeta.imag()), 2));
  }
  const auto real = ComplexSpherePoint::from_real(Eigen::Vector3d(0.0, 0.6, 0.8));
  CHECK((real.components() - Eigen::Vector3cd(0.0, 0.6, 0.8)).norm() < 1e-14);

  const RealFunction f = make_bump(Eigen::Vector2d(0.1, 0.2), 0.4, 1.0, kGrid);
  const Eigen::Vector2d w(0.6, 0.8);
  const auto pt = ComplexSpherePoint::from_real(w);
  CHECK(std::abs(complexified_sphere_eval(f, 1.7, pt) - direct_fourier(f, Eigen::VectorXd(1.7 * w))) < 1e-12);
}

TEST_CASE("extension consistency") {
  const RealFunction f = make_bump(Eigen::Vector2d(-0.1, 0.15), 0.5, 1.0, kGrid);
  const ExtensionConsistency e = extension_consistency(f);
  CHECK(e.defect < 1e-5);
  CHECK(e.directions == 16);
  CHECK(e.mesh.real_count == 9);
}

TEST_CASE("decay seminorm") {
  const RealFunction f = make_bump(Eigen::Vector2d::Zero(), 0.5, 1.0, kGrid);
  const Sinogram s = radon_transform(f, DirectionSet::circle(16));
  const Eigen::VectorXd radii = uniform_radii(0.05, 10.0);
  CHECK(decay_seminorm(s, 0, 0, radii) == doctest::Approx(integrate(f)).epsilon(1e-6));
  CHECK(std::isfinite(decay_seminorm(s, 4, 2, radii)));
  CHECK_THROWS_AS(decay_seminorm(s, -1, 0, radii), InvalidArgument);
}
