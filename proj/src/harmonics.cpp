#include "pwkit/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace pwkit {

std::vector<int> harmonic_degrees(int dim, int band_limit) {
  std::vector<int> deg;
  if (dim == 2) {
    deg.push_back(0);
    for (int l = 1; l <= band_limit; ++l) {
      deg.push_back(l);
      deg.push_back(l);
    }
  } else if (dim == 3) {
    for (int l = 0; l <= band_limit; ++l)
      for (int c = 0; c < 2 * l + 1; ++c) deg.push_back(l);
  } else {
    throw UnsupportedDimension("harmonics are implemented for S^1 and S^2");
  }
  return deg;
}

namespace {

// Fully normalized associated Legendre values Q_l^m(x) with
// Q_l^m = sqrt((2l+1)(l-m)!/(l+m)!) P_l^m, no Condon-Shortley phase.
// Output indexed [l][m].
std::vector<std::vector<double>> normalized_legendre(int band_limit, double x) {
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  std::vector<std::vector<double>> q(band_limit + 1);
  for (int l = 0; l <= band_limit; ++l) q[l].assign(l + 1, 0.0);
  q[0][0] = 1.0;
  for (int m = 1; m <= band_limit; ++m)
    q[m][m] = std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * q[m - 1][m - 1];
  for (int m = 0; m < band_limit; ++m) {
    q[m + 1][m] = std::sqrt(2.0 * m + 3.0) * x * q[m][m];
    for (int l = m + 2; l <= band_limit; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
      const double b = std::sqrt(((l - 1.0) * (l - 1.0) - double(m) * m) /
                                 (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
      q[l][m] = a * (x * q[l - 1][m] - b * q[l - 2][m]);
    }
  }
  return q;
}

}  // namespace

Eigen::MatrixXd harmonic_basis(const Eigen::MatrixXd& directions, int band_limit) {
  const int dim = static_cast<int>(directions.rows());
  const auto deg = harmonic_degrees(dim, band_limit);
  Eigen::MatrixXd basis(directions.cols(), static_cast<Eigen::Index>(deg.size()));
  const double root2 = std::sqrt(2.0);
  for (Eigen::Index j = 0; j < directions.cols(); ++j) {
    if (dim == 2) {
      const double t = std::atan2(directions(1, j), directions(0, j));
      basis(j, 0) = 1.0;
      for (int l = 1; l <= band_limit; ++l) {
        basis(j, 2 * l - 1) = root2 * std::cos(l * t);
        basis(j, 2 * l) = root2 * std::sin(l * t);
      }
    } else {
      const double z = std::clamp(directions(2, j), -1.0, 1.0);
      const double phi = std::atan2(directions(1, j), directions(0, j));
      const auto q = normalized_legendre(band_limit, z);
      Eigen::Index c = 0;
      for (int l = 0; l <= band_limit; ++l) {
        basis(j, c++) = q[l][0];
        for (int m = 1; m <= l; ++m) {
          basis(j, c++) = root2 * q[l][m] * std::cos(m * phi);
          basis(j, c++) = root2 * q[l][m] * std::sin(m * phi);
        }
      }
    }
  }
  return basis;
}

template <typename Scalar>
HarmonicExpansion<Scalar> expand(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& values,
                                 const DirectionSet& dirs) {
  if (values.size() != dirs.size())
    throw InvalidArgument("value count does not match direction count");
  const Eigen::MatrixXd basis = harmonic_basis(dirs);
  HarmonicExpansion<Scalar> e;
  e.dim = dirs.dim();
  e.band_limit = dirs.band_limit();
  e.degrees = harmonic_degrees(e.dim, e.band_limit);
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weighted =
      values.cwiseProduct(dirs.weights().template cast<Scalar>());
  e.coefficients = basis.transpose().template cast<Scalar>() * weighted;
  return e;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> synthesize(const HarmonicExpansion<Scalar>& e,
                                                    const DirectionSet& dirs) {
  const Eigen::MatrixXd basis = harmonic_basis(dirs.directions(), e.band_limit);
  return basis.template cast<Scalar>() * e.coefficients;
}

template HarmonicExpansion<double> expand(const Eigen::VectorXd&, const DirectionSet&);
template HarmonicExpansion<std::complex<double>> expand(const Eigen::VectorXcd&,
                                                        const DirectionSet&);
template Eigen::VectorXd synthesize(const HarmonicExpansion<double>&, const DirectionSet&);
template Eigen::VectorXcd synthesize(const HarmonicExpansion<std::complex<double>>&,
                                     const DirectionSet&);

}  // namespace pwkit
