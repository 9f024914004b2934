#include "pwkit/interpolation.hpp"

#include <cmath>

namespace pwkit {

namespace {

constexpr int kTaps = 6;

struct AxisTaps {
  int first = 0;
  double w[kTaps] = {};
};

inline AxisTaps taps(double x, const GridSpec& g) {
  const double u = (x + g.half_width) / g.spacing();
  const double fl = std::floor(u);
  AxisTaps t;
  t.first = static_cast<int>(fl) - kTaps / 2 + 1;
  const double frac = u - fl;
  for (int a = 0; a < kTaps; ++a) t.w[a] = keys_kernel(frac + kTaps / 2 - 1 - a);
  return t;
}

}  // namespace

double interpolate(const RealFunction& f, const double* point) {
  const GridSpec& g = f.grid;
  const int m = g.points;
  if (f.support_radius) {
    double r2 = 0.0;
    for (int a = 0; a < g.dim; ++a) r2 += point[a] * point[a];
    const double cut = *f.support_radius + g.spacing();
    if (r2 > cut * cut) return 0.0;
  }
  if (g.dim == 2) {
    const AxisTaps tx = taps(point[0], g), ty = taps(point[1], g);
    double acc = 0.0;
    for (int a = 0; a < kTaps; ++a) {
      const int i = tx.first + a;
      if (i < 0 || i >= m || tx.w[a] == 0.0) continue;
      const double* row = f.values.data() + static_cast<Eigen::Index>(i) * m;
      double r = 0.0;
      for (int b = 0; b < kTaps; ++b) {
        const int j = ty.first + b;
        if (j >= 0 && j < m) r += ty.w[b] * row[j];
      }
      acc += tx.w[a] * r;
    }
    return acc;
  }
  const AxisTaps tx = taps(point[0], g), ty = taps(point[1], g), tz = taps(point[2], g);
  double acc = 0.0;
  for (int a = 0; a < kTaps; ++a) {
    const int i = tx.first + a;
    if (i < 0 || i >= m || tx.w[a] == 0.0) continue;
    double plane = 0.0;
    for (int b = 0; b < kTaps; ++b) {
      const int j = ty.first + b;
      if (j < 0 || j >= m || ty.w[b] == 0.0) continue;
      const double* row = f.values.data() + (static_cast<Eigen::Index>(i) * m + j) * m;
      double r = 0.0;
      for (int c = 0; c < kTaps; ++c) {
        const int k = tz.first + c;
        if (k >= 0 && k < m) r += tz.w[c] * row[k];
      }
      plane += ty.w[b] * r;
    }
    acc += tx.w[a] * plane;
  }
  return acc;
}

}  // namespace pwkit
