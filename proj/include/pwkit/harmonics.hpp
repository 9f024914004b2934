#pragma once

#include <Eigen/Core>

#include <vector>

#include "pwkit/grid.hpp"

namespace pwkit {

/// Harmonic degree of each basis column, in basis order. For n = 2 the order
/// is 1, cos(theta), sin(theta), cos(2 theta), ...; for n = 3 it is
/// Y_{l,0}, Y_{l,1}^c, Y_{l,1}^s, ..., Y_{l,l}^s for l = 0..B.
std::vector<int> harmonic_degrees(int dim, int band_limit);

/// Real harmonics orthonormal for the normalized measure mu_n, evaluated at
/// the given directions: rows are directions, columns basis functions.
Eigen::MatrixXd harmonic_basis(const Eigen::MatrixXd& directions, int band_limit);
inline Eigen::MatrixXd harmonic_basis(const DirectionSet& dirs) {
  return harmonic_basis(dirs.directions(), dirs.band_limit());
}

/// Coefficients of a function on S^{n-1} in the real orthonormal harmonic
/// basis up to the band limit.
template <typename Scalar>
struct HarmonicExpansion {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  int dim = 2;
  int band_limit = 0;
  Vector coefficients;
  std::vector<int> degrees;

  /// Euclidean norm of the coefficient vector.
  double mass() const { return coefficients.norm(); }

  /// Norm of the coefficients whose degree satisfies pred.
  template <typename Pred>
  double mass_where(Pred&& pred) const {
    double acc = 0.0;
    for (Eigen::Index c = 0; c < coefficients.size(); ++c)
      if (pred(degrees[c])) acc += std::norm(coefficients[c]);
    return std::sqrt(acc);
  }

  /// Mass in degrees outside {k, k-2, ..., k mod 2}: the part that cannot
  /// come from a homogeneous degree-k polynomial restricted to the sphere.
  double off_parity_mass(int k) const {
    return mass_where([k](int l) { return l > k || (k - l) % 2 != 0; });
  }
};

/// Projection onto the harmonic basis using the direction weights. Exact for
/// functions band-limited to the direction set's band limit.
template <typename Scalar>
HarmonicExpansion<Scalar> expand(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& values,
                                 const DirectionSet& dirs);

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> synthesize(const HarmonicExpansion<Scalar>& e,
                                                    const DirectionSet& dirs);

}  // namespace pwkit
