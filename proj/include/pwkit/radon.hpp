#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <optional>
#include <string>

#include "pwkit/grid.hpp"

namespace pwkit {

/// Samples of a function on R x S^{n-1} at (offset p_i, direction omega_j).
/// Offsets are equispaced, odd in count and symmetric about 0.
struct Sinogram {
  Eigen::VectorXd offsets;
  DirectionSet directions;
  Eigen::MatrixXd values;  // P x Q
  std::optional<double> support_radius;
  std::optional<GridSpec> source_grid;

  int dim() const { return directions.dim(); }
  double offset_step() const;
  /// Throws InvalidArgument if offsets are not odd, equispaced and centered.
  void check_offsets() const;
};

/// Equispaced offsets with spacing h covering [-L sqrt(n), L sqrt(n)].
Eigen::VectorXd default_offsets(const GridSpec& grid);

/// Hyperplane integrals of f: entry (i, j) is the integral of f over
/// {x : x . omega_j = p_i}. The hyperplane is sampled on a lattice of
/// spacing h and f is evaluated by six-point Keys interpolation.
Sinogram radon_transform(const RealFunction& f, const Eigen::VectorXd& offsets,
                         const DirectionSet& directions);
Sinogram radon_transform(const RealFunction& f, const DirectionSet& directions);

/// max |s(p, omega) - s(-p, -omega)| over the grid.
double evenness_defect(const Sinogram& s);

/// omega_j -> int s(p, omega_j) p^k dp.
Eigen::VectorXd moment(const Sinogram& s, int k);

/// Rebuilds f from an even sinogram through the Fourier-slice route: 1-D
/// Fourier transform in p, then the polar inverse Fourier integral evaluated
/// directly at every grid node. Throws NotEven when the evenness defect
/// exceeds `even_tolerance`.
RealFunction inverse_radon(const Sinogram& s, const GridSpec& grid,
                           double even_tolerance = 1e-6);
/// Same, on the grid the sinogram was computed from.
RealFunction inverse_radon(const Sinogram& s, double even_tolerance = 1e-6);

/// Sinogram CSV: header `P,Q,n`, then rows `p,omega_index,value`.
void write_csv(std::ostream& out, const Sinogram& s);
/// Direction table: rows `omega_index,components...,weight`.
void write_direction_csv(std::ostream& out, const DirectionSet& dirs);
void write_csv(const std::string& path, const Sinogram& s);

}  // namespace pwkit
