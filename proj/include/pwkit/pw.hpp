#pragma once

#include <Eigen/Core>

#include <complex>
#include <vector>

#include "pwkit/grid.hpp"
#include "pwkit/harmonics.hpp"
#include "pwkit/radon.hpp"

namespace pwkit {

/// Regular mesh on the rectangle [-a, a] x i[-b, b].
struct ComplexGrid {
  double a = 1.0;
  double b = 1.0;
  int real_count = 9;
  int imag_count = 9;

  static ComplexGrid make(double a, double b, int real_count = 9, int imag_count = 9);

  std::vector<std::complex<double>> points() const;
  /// Same counts, imaginary extent scaled by `factor`.
  ComplexGrid scaled_imag(double factor) const;
};

/// Point of the complexified sphere z_1^2 + ... + z_n^2 = 1.
/// n = 2: (cos zeta, sin zeta). n = 3: (cos zeta, sin zeta cos phi,
/// sin zeta sin phi) with phi real.
struct ComplexSpherePoint {
  int dim = 2;
  std::complex<double> zeta;
  double azimuth = 0.0;

  static ComplexSpherePoint from_real(const Eigen::VectorXd& omega);

  Eigen::VectorXcd components() const;
  /// |omega_1^2 + ... + omega_n^2 - 1|.
  double quadric_defect() const;
};

/// int s(p, omega_j) exp(-2 pi i p z) dp by trapezoid in p.
std::complex<double> complex_slice_eval(const Sinogram& s, std::complex<double> z,
                                        Eigen::Index j);

/// log |complex_slice_eval(s, z, j)|, evaluated with the exponential
/// scale factored out so that large |Im z| does not overflow.
double log_abs_slice_eval(const Sinogram& s, std::complex<double> z, Eigen::Index j);

/// max over mesh points z and directions of
/// (1 + |z|^2)^N exp(-2 pi r |Im z|) |complex_slice_eval(s, z, omega)|.
double pw_seminorm(const Sinogram& s, int N, double r, const ComplexGrid& grid);

struct SupportEstimate {
  double radius = 0.0;
  Eigen::Index direction = 0;  // direction attaining the maximum
  double b = 0.0;              // top of the fitted window y in [b/2, b]
  Eigen::VectorXd per_direction;
};

/// Exponential type of y -> H(iy) per direction: least squares of
/// log |H(iy)| on {1, 2 pi y, sqrt(2 pi y), log(2 pi y)} for y in [b/2, b];
/// the coefficient of 2 pi y is the support radius in that direction.
/// b defaults to min(6 / r, 1 / (2 pi h)) with r the declared (or detected)
/// support radius and h the offset step.
/// Throws ZeroInput for a zero sinogram.
SupportEstimate support_radius_estimate(const Sinogram& s, double b = 0.0, int samples = 32);

/// Expansion of omega -> (-2 pi i)^k moment(s, k)(omega). Requires k <= 8.
HarmonicExpansion<std::complex<double>> taylor_coefficient(const Sinogram& s, int k);

struct HomogeneityReport {
  double defect = 0.0;
  int worst_k = 0;
  std::vector<double> per_k;
};

/// For each k <= k_max: mass of taylor_coefficient(s, k) in degrees outside
/// {k, k-2, ...} over its total mass. The denominator is floored at 1e-8
/// times the size of int |s| |2 pi p|^k, so moments that vanish identically
/// give 0 instead of 0 / 0.
HomogeneityReport homogeneity(const Sinogram& s, int k_max);
double homogeneity_defect(const Sinogram& s, int k_max);

/// Holomorphic extension of the Fourier transform of f at z * omega(pt),
/// by direct quadrature with the bilinear pairing.
std::complex<double> complexified_sphere_eval(const RealFunction& f, std::complex<double> z,
                                              const ComplexSpherePoint& pt);

struct ExtensionConsistency {
  double defect = 0.0;
  ComplexGrid mesh;
  int directions = 0;
};

/// max over mesh points z and real directions of the gap between the
/// extension through the Radon transform and the direct extension. The
/// default mesh has b = 1 / (2 pi r_supp) and a = 4 / r_supp.
ExtensionConsistency extension_consistency(const RealFunction& f, int directions = 16,
                                           int mesh_count = 9);
double extension_consistency_defect(const RealFunction& f);

/// max over r in the radial grid and directions of
/// (1 + r^2)^k |d^l/dr^l int s(p, omega) exp(-2 pi i p r) dp|.
double decay_seminorm(const Sinogram& s, int k, int l, const Eigen::VectorXd& radii);

}  // namespace pwkit
