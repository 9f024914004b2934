#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pwkit/slice.hpp"

using namespace pwkit;

namespace {

double profile(double r, double R) {
  return r < R ? std::exp(1.0 - R * R / (R * R - r * r)) : 0.0;
}

double simpson(double a, double b, int n, auto&& g) {
  const double h = (b - a) / n;
  double acc = g(a) + g(b);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * g(a + i * h);
  return acc * h / 3.0;
}

// Hankel transform of order 0: the 2-D Fourier transform of a radial bump.
double hankel_oracle(double rho, double R) {
  return 2.0 * M_PI * simpson(0.0, R, 4000, [&](double r) {
           return profile(r, R) * std::cyl_bessel_j(0.0, 2.0 * M_PI * rho * r) * r;
         });
}

double norm_sq_oracle(double R) {
  return 2.0 * M_PI * simpson(0.0, R, 4000, [&](double r) { return std::pow(profile(r, R), 2) * r; });
}

const GridSpec kGrid = GridSpec::make(2, 257, 1.5);

}  // namespace

TEST_CASE("both sides of the slice identity match the Hankel transform") {
  const double R = 0.5;
  const RealFunction f = make_bump(Eigen::Vector2d::Zero(), R, 1.0, kGrid);
  const Sinogram s = radon_transform(f, DirectionSet::circle(16));
  Eigen::VectorXd radii(4);
  radii << 0.0, 0.7, 1.9, 4.2;
  const VectorFT ft = radial_fourier(s, radii);
  for (Eigen::Index i = 0; i < radii.size(); ++i) {
    const double ref = hankel_oracle(radii[i], R);
    for (Eigen::Index j = 0; j < 16; j += 5) {
      CHECK(std::abs(ft.values(i, j) - ref) < 1e-7);
      const Eigen::VectorXd xi = radii[i] * s.directions.direction(j);
      CHECK(std::abs(direct_fourier(f, xi) - ref) < 1e-7);
    }
  }
}

TEST_CASE("fourier slice defect") {
  const RealFunction f = make_bump(Eigen::Vector2d(0.2, -0.1), 0.45, 1.0, kGrid);
  CHECK(fourier_slice_defect(f) < 1e-5);
}

TEST_CASE("plancherel") {
  const double R = 0.55;
  const RealFunction f = make_bump(Eigen::Vector2d(-0.15, 0.1), R, 1.0, kGrid);
  const PlancherelReport rep = plancherel(f);
  CHECK(rep.norm_sq == doctest::Approx(norm_sq_oracle(R)).epsilon(1e-9));
  CHECK(rep.defect < 1e-4);
  CHECK(rep.cutoff.tail_fraction < 1e-6);
  CHECK(rep.cutoff.r_max > 0.0);
  CHECK_THROWS_AS(plancherel(RealFunction(kGrid)), ZeroFunction);
}

TEST_CASE("pointwise inversion") {
  const RealFunction f = make_bump(Eigen::Vector2d(0.1, 0.0), 0.5, 1.0, kGrid);
  SliceConfig cfg;
  cfg.tail_tolerance = 1e-8;
  for (auto [x, y] : {std::pair{0.1, 0.0}, std::pair{0.3, 0.2}, std::pair{-0.7, 0.7}}) {
    const double expected = profile(std::hypot(x - 0.1, y), 0.5);
    const auto value = pointwise_inversion(f, Eigen::Vector2d(x, y), cfg);
    CHECK(std::abs(value - expected) < 1e-3);
  }
}

TEST_CASE("radial grids and weights") {
  const Eigen::VectorXd r = uniform_radii(0.25, 2.0);
  CHECK(r.size() == 9);
  CHECK(r[8] == doctest::Approx(2.0));
  // int_0^2 2 pi r dr and int_0^2 4 pi r^2 dr.
  const Eigen::VectorXd fine = uniform_radii(0.01, 2.0);
  CHECK(plancherel_radial_weights(fine, 2).sum() == doctest::Approx(4.0 * M_PI).epsilon(1e-12));
  CHECK(plancherel_radial_weights(fine, 3).sum() ==
        doctest::Approx(32.0 * M_PI / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(uniform_radii(0.0, 1.0), InvalidArgument);
}

TEST_CASE("cutoff discards at most the requested tail") {
  const RealFunction f = make_bump(Eigen::Vector2d::Zero(), 0.4, 1.0, kGrid);
  SliceConfig cfg;
  const MotionGroupTransform loose(f, cfg);
  cfg.tail_tolerance = 1e-10;
  const MotionGroupTransform tight(f, cfg);
  CHECK(tight.cutoff().r_max > loose.cutoff().r_max);
  CHECK(tight.cutoff().tail_fraction <= 1e-10);
  CHECK(tight.spectral_norm_sq() >= loose.spectral_norm_sq());
}

TEST_CASE("marginal projection") {
  const RealFunction f = make_bump(Eigen::Vector3d(0.1, 0.0, -0.1), 0.5, 1.0, GridSpec::make(3, 65, 1.0));
  const RealFunction c = marginal_projection(f);
  CHECK(c.grid.dim == 2);
  CHECK(integrate(c) == doctest::Approx(integrate(f)).epsilon(1e-12));
  CHECK_THROWS_AS(marginal_projection(make_bump(Eigen::Vector2d::Zero(), 0.5, 1.0, kGrid)),
                  UnsupportedPair);
  CHECK_THROWS_AS(projection_compatibility_defect(RealFunction(kGrid)), UnsupportedPair);
}

TEST_CASE("projection compatibility converges with the grid") {
  const Eigen::Vector3d c(0.1, -0.05, 0.08);
  const double coarse =
      projection_compatibility_defect(make_bump(c, 0.5, 1.0, GridSpec::make(3, 65, 1.0)));
  const double fine =
      projection_compatibility_defect(make_bump(c, 0.5, 1.0, GridSpec::make(3, 97, 1.0)));
  CHECK(coarse < 2e-5);
  CHECK(fine < 1e-5);
  CHECK(fine < 0.5 * coarse);
}
