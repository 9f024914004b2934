#pragma once

#include <Eigen/Core>

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "pwkit/errors.hpp"

namespace pwkit {

/// Zonal function on S^n as its profile F(t) = f(cos t e_1 + sin t e_2),
/// sampled at t_i = i pi / (T - 1).
struct ZonalProfile {
  int n = 3;
  Eigen::VectorXd samples;
  std::optional<double> support_angle;

  static ZonalProfile make(int n, Eigen::VectorXd samples,
                           std::optional<double> support_angle = {});
  static ZonalProfile from_function(int n, Eigen::Index count,
                                    const std::function<double(double)>& F,
                                    std::optional<double> support_angle = {});

  /// exp(1 - t_s^2 / (t_s^2 - t^2)) on [0, t_s), zero beyond.
  static ZonalProfile cap_bump(int n, double t_supp, Eigen::Index count = 2049);
  /// ((cos t - cos t_s) / (1 - cos t_s))^power on [0, t_s), zero beyond.
  static ZonalProfile cap_power(int n, double t_supp, int power = 2, Eigen::Index count = 2049);

  double rho() const { return 0.5 * (n - 1); }
  Eigen::Index size() const { return samples.size(); }
  double step() const;
  double angle(Eigen::Index i) const { return i * step(); }
  /// First sample angle past which F vanishes identically; pi if none.
  double vanishing_angle() const;
};

/// psi_m(t) = C_m^{(n-1)/2}(cos t) / C_m^{(n-1)/2}(1).
double spherical_function(int m, double t, int n);

struct SphericalCoefficients {
  Eigen::VectorXd values;
  std::string normalization;
};

/// f^(m) = int_0^pi F psi_m sin^{n-1} t dt for m = 0..m_max.
SphericalCoefficients spherical_transform(const ZonalProfile& F, int m_max);

/// (2^rho rho / pi) int_s^pi F(t) sin t (cos s - cos t)^{rho - 1} dt.
double sphere_radon(const ZonalProfile& F, double s);
/// sphere_radon at every sample angle.
Eigen::VectorXd sphere_radon_samples(const ZonalProfile& F);

struct SphereSliceReport {
  double defect = 0.0;
  double constant = 0.0;
  /// max relative deviation of f^(m) / rhs(m) from the calibrated constant,
  /// over m with |f^(m)| >= 1e-3 max |f^|.
  double constant_spread = 0.0;
  Eigen::VectorXd lhs;
  Eigen::VectorXd rhs;
};

/// Compares f^(m) with c int_0^pi cos((m + rho) t) R(f)(t) dt, with c fixed
/// at m = 0. Throws DegenerateCalibration when f^(0) = 0.
SphereSliceReport sphere_slice(const ZonalProfile& F, int m_max = 12);
double sphere_slice_defect(const ZonalProfile& F, int m_max = 12);

/// Detected support angles of F and of R(f): the first sample past the last
/// one above 1e-9 times the maximum. (0, 0) for F = 0. Requires n = 3.
std::pair<double, double> sphere_support_check(const ZonalProfile& F);

void write_csv(std::ostream& os, const ZonalProfile& F);
/// Reads `t,value` rows; the angles must be equispaced from 0 to pi.
ZonalProfile read_zonal_csv(std::istream& is, int n);

}  // namespace pwkit
