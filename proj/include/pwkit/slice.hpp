#pragma once

#include <Eigen/Core>

#include <complex>
#include <iosfwd>
#include <string>

#include "pwkit/grid.hpp"
#include "pwkit/radon.hpp"

namespace pwkit {

/// Values of the Fourier transform on a polar grid: entry (i, j) is
/// F f(r_i omega_j). Radii are equispaced from 0.
struct VectorFT {
  Eigen::VectorXd radii;
  DirectionSet directions;
  Eigen::MatrixXcd values;  // R x Q

  double radial_step() const { return radii.size() > 1 ? radii[1] - radii[0] : 0.0; }
};

/// int s(p, omega_j) exp(-2 pi i p r_i) dp by trapezoid in p. Throws NotEven
/// when the sinogram evenness defect exceeds 1e-6.
VectorFT radial_fourier(const Sinogram& s, const Eigen::VectorXd& radii);

/// Equispaced radii 0, dr, 2 dr, ... up to and including r_max.
Eigen::VectorXd uniform_radii(double step, double r_max);

/// Radial spacing 1 / (8 P) with P the largest offset magnitude, and the
/// Nyquist radius 1 / (2 h) of the sinogram.
double default_radial_step(const Sinogram& s);
double nyquist_radius(const Sinogram& s);

/// Direct oscillatory quadrature of int f(x) exp(-2 pi i (xi, x)) dx with the
/// bilinear pairing, so complex frequencies give the holomorphic extension.
std::complex<double> direct_fourier(const RealFunction& f, const Eigen::VectorXcd& xi);
std::complex<double> direct_fourier(const RealFunction& f, const Eigen::VectorXd& xi);

/// Upsampling factor in omega needed to resolve exp(2 pi i r x.omega) for
/// r <= r_max and |x| <= radius; 1 unless the directions are equispaced on
/// the circle.
int angular_factor(const VectorFT& ft, double r_max, double radius);

/// First `count` radii of ft on `factor` times as many equispaced directions,
/// by trigonometric interpolation in omega. Other direction sets are passed
/// through unchanged.
VectorFT upsample_directions(const VectorFT& ft, Eigen::Index count, int factor);

/// sum_j w_j sum_i c_i F(r_i, omega_j) exp(2 pi i r_i x.omega_j) with radial
/// weights c_i.
std::complex<double> polar_synthesis(const VectorFT& ft, const Eigen::VectorXd& radial_weights,
                                     const Eigen::VectorXd& x);

/// Truncation radius of the Plancherel integral.
struct SpectralCutoff {
  double r_max = 0.0;
  Eigen::Index count = 0;        // radii kept: r_0..r_{count-1}
  double tail_fraction = 0.0;    // discarded share of the computed integral
};

/// Plancherel integrand weights: w_r(i) * sigma_n r_i^{n-1} for the radial
/// Gregory rule.
Eigen::VectorXd plancherel_radial_weights(const Eigen::VectorXd& radii, int dim);

/// Smallest r_max such that the spectral tail beyond it is below
/// `tail_tolerance` of the total.
SpectralCutoff select_cutoff(const VectorFT& ft, double tail_tolerance = 1e-6);

/// Settings shared by the motion-group checks.
struct SliceConfig {
  DirectionSet directions = DirectionSet::circle(64);
  double radial_step = 0.0;        // 0: default_radial_step
  double tail_tolerance = 1e-6;
  int test_radii = 25;             // radial test points for the slice defect
};

/// The motion-group Fourier transform of f: the Radon transform, its radial
/// Fourier transform on the polar grid and the spectral cutoff.
class MotionGroupTransform {
 public:
  MotionGroupTransform(const RealFunction& f, const SliceConfig& config);

  const Sinogram& sinogram() const { return sinogram_; }
  const VectorFT& spectrum() const { return spectrum_; }
  const SpectralCutoff& cutoff() const { return cutoff_; }

  /// int_0^{r_max} sum_j w_j |F(r, omega_j)|^2 sigma_n r^{n-1} dr.
  double spectral_norm_sq() const;

  /// int_0^{r_max} sum_j w_j F(r, omega_j) e^{2 pi i r x.omega_j}
  /// sigma_n r^{n-1} dr.
  /// For equispaced circle directions the spectrum is first resampled in
  /// omega by trigonometric interpolation, so that the angular sum resolves
  /// the phase factor at |x|.
  std::complex<double> invert_at(const Eigen::VectorXd& x) const;

 private:
  Sinogram sinogram_;
  VectorFT spectrum_;
  SpectralCutoff cutoff_;
  Eigen::VectorXd radial_weights_;
};

/// max over a polar test grid of |F f(r omega) - radial_fourier(R f)(r, omega)|,
/// the left side by direct n-dimensional quadrature.
double fourier_slice_defect(const RealFunction& f, const SliceConfig& config = {});

struct PlancherelReport {
  double defect = 0.0;
  double norm_sq = 0.0;
  double spectral_norm_sq = 0.0;
  SpectralCutoff cutoff;
};

/// Relative gap between ||f||_2^2 and the truncated Plancherel integral.
/// Throws ZeroFunction when ||f||_2 = 0.
PlancherelReport plancherel(const RealFunction& f, const SliceConfig& config = {});
double plancherel_defect(const RealFunction& f, const SliceConfig& config = {});

/// Motion-group inversion formula evaluated at a point.
std::complex<double> pointwise_inversion(const RealFunction& f, const Eigen::VectorXd& x,
                                         const SliceConfig& config = {});

/// Fiber integral over the last coordinate: R^3 -> R^2. Throws
/// UnsupportedPair for anything but (k, n) = (3, 2).
RealFunction marginal_projection(const RealFunction& f, int target_dim = 2);

/// max over (p, omega in S^1) of |R_2(C f)(p, omega) - R_3 f(p, (omega, 0))|.
double projection_compatibility_defect(const RealFunction& f, int directions = 64);

/// VectorFT CSV rows `r,omega_index,re,im`.
void write_csv(std::ostream& out, const VectorFT& ft);

}  // namespace pwkit
