#pragma once

#include "pwkit/grid.hpp"

namespace pwkit {

/// Keys six-point cubic convolution kernel. Support [-3, 3], interpolating,
/// reproduces cubics (fourth-order accurate).
inline double keys_kernel(double t) {
  t = t < 0 ? -t : t;
  if (t < 1.0) return (4.0 / 3.0 * t - 7.0 / 3.0) * t * t + 1.0;
  if (t < 2.0) return ((-7.0 / 12.0 * t + 3.0) * t - 59.0 / 12.0) * t + 2.5;
  if (t < 3.0) return ((1.0 / 12.0 * t - 2.0 / 3.0) * t + 1.75) * t - 1.5;
  return 0.0;
}

/// Tensor-product Keys interpolation of the samples at an arbitrary point.
/// Nodes outside the box count as zero, and so does any point beyond the
/// declared support radius
/// plus one cell.
double interpolate(const RealFunction& f, const double* point);

}  // namespace pwkit
