#pragma once

#include <Eigen/Core>

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>

#include "pwkit/errors.hpp"

namespace pwkit {

/// Regular grid over the box [-L, L]^n with M points per axis (M odd, so the
/// origin is a node).
struct GridSpec {
  int dim = 2;
  int points = 257;
  double half_width = 1.5;

  static GridSpec make(int dim, int points, double half_width);

  double spacing() const { return 2.0 * half_width / (points - 1); }
  double coord(int i) const { return -half_width + i * spacing(); }
  Eigen::Index size() const;
  /// Cell volume h^n.
  double cell_volume() const;

  bool operator==(const GridSpec&) const = default;
};

/// Samples of a function on a GridSpec, stored row-major (first axis slowest).
template <typename Scalar>
struct SampledFunction {
  using Values = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  GridSpec grid;
  Values values;
  std::optional<double> support_radius;

  SampledFunction() = default;
  explicit SampledFunction(const GridSpec& g)
      : grid(g), values(Values::Zero(g.size())) {}
  SampledFunction(const GridSpec& g, Values v, std::optional<double> r = {})
      : grid(g), values(std::move(v)), support_radius(r) {}

  Eigen::Index index(int i, int j) const {
    return static_cast<Eigen::Index>(i) * grid.points + j;
  }
  Eigen::Index index(int i, int j, int k) const {
    return (static_cast<Eigen::Index>(i) * grid.points + j) * grid.points + k;
  }
  Scalar operator()(int i, int j) const { return values[index(i, j)]; }
  Scalar operator()(int i, int j, int k) const { return values[index(i, j, k)]; }
  Scalar& operator()(int i, int j) { return values[index(i, j)]; }
  Scalar& operator()(int i, int j, int k) { return values[index(i, j, k)]; }

  /// Cartesian coordinates of the node with flat index `flat`.
  Eigen::VectorXd node(Eigen::Index flat) const {
    Eigen::VectorXd x(grid.dim);
    for (int a = grid.dim - 1; a >= 0; --a) {
      x[a] = grid.coord(static_cast<int>(flat % grid.points));
      flat /= grid.points;
    }
    return x;
  }
};

using RealFunction = SampledFunction<double>;
using ComplexFunction = SampledFunction<std::complex<double>>;

/// Smooth bump amplitude * exp(1 - R^2 / (R^2 - |x - c|^2)) inside the ball,
/// zero outside. The declared support radius is |c| + R.
RealFunction make_bump(const Eigen::VectorXd& center, double radius,
                       double amplitude, const GridSpec& grid);

/// Trapezoid quadrature, values times h^n. Samples at the box faces carry
/// the usual half weights.
template <typename Scalar>
Scalar integrate(const SampledFunction<Scalar>& f);

template <typename Scalar>
double l2_norm_sq(const SampledFunction<Scalar>& f);

/// Largest absolute sample.
double sup_norm(const RealFunction& f);

/// Throws InvalidArgument if any sample is non-finite or if a sample outside
/// the declared support radius is nonzero.
void validate(const RealFunction& f);

/// CSV layout: header line `n,M,L`, then one value per line, row-major.
void write_csv(std::ostream& out, const RealFunction& f);
RealFunction read_csv(std::istream& in);
void write_csv(const std::string& path, const RealFunction& f);
RealFunction read_csv(const std::string& path);

/// Directions on S^{n-1} with positive weights summing to one (the
/// normalized surface measure).
///
/// For n = 2 the directions are Q equispaced angles theta_j = 2 pi j / Q.
/// For n = 3 the rule is Gauss-Legendre in cos(polar angle) times 2B + 2
/// equispaced azimuths, exact for polynomials of degree <= 2B + 1. Exactness
/// on harmonics up to the band limit is checked when the set is built.
class DirectionSet {
 public:
  DirectionSet() = default;

  static DirectionSet circle(int count);
  static DirectionSet sphere(int band_limit);
  /// Arbitrary directions with explicit weights; no exactness claim.
  static DirectionSet custom(Eigen::MatrixXd directions, Eigen::VectorXd weights,
                             int band_limit);

  int dim() const { return static_cast<int>(directions_.rows()); }
  Eigen::Index size() const { return directions_.cols(); }
  int band_limit() const { return band_limit_; }
  const Eigen::MatrixXd& directions() const { return directions_; }
  Eigen::VectorXd direction(Eigen::Index j) const { return directions_.col(j); }
  const Eigen::VectorXd& weights() const { return weights_; }
  /// Polar angle for n = 2 sets.
  double angle(Eigen::Index j) const;

  bool is_antipodal() const { return antipodal_; }
  /// Index of -omega_j. Throws DirectionsNotAntipodal if the set is not
  /// closed under omega -> -omega.
  Eigen::Index antipode(Eigen::Index j) const;

  /// max over harmonics Y of degree 1..band_limit of |sum_j w_j Y(omega_j)|.
  double exactness_defect() const;

 private:
  void finish();

  Eigen::MatrixXd directions_;
  Eigen::VectorXd weights_;
  std::vector<Eigen::Index> antipodes_;
  bool antipodal_ = false;
  int band_limit_ = 0;
};

/// sigma_n = 2 pi^{n/2} / Gamma(n/2), the surface area of S^{n-1}.
double sphere_area(int n);

}  // namespace pwkit
