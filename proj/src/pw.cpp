#include "pwkit/pw.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "pwkit/parallel.hpp"
#include "pwkit/slice.hpp"

namespace pwkit {

ComplexGrid ComplexGrid::make(double a, double b, int real_count, int imag_count) {
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidArgument("complex grid extents must be positive");
  if (real_count < 2 || imag_count < 2) throw InvalidArgument("complex grid needs >= 2 points");
  return ComplexGrid{a, b, real_count, imag_count};
}

std::vector<std::complex<double>> ComplexGrid::points() const {
  std::vector<std::complex<double>> z;
  z.reserve(static_cast<size_t>(real_count) * imag_count);
  for (int i = 0; i < real_count; ++i)
    for (int k = 0; k < imag_count; ++k)
      z.emplace_back(-a + 2.0 * a * i / (real_count - 1), -b + 2.0 * b * k / (imag_count - 1));
  return z;
}

ComplexGrid ComplexGrid::scaled_imag(double factor) const {
  return ComplexGrid{a, b * factor, real_count, imag_count};
}

ComplexSpherePoint ComplexSpherePoint::from_real(const Eigen::VectorXd& omega) {
  ComplexSpherePoint pt;
  pt.dim = static_cast<int>(omega.size());
  if (pt.dim == 2) {
    pt.zeta = std::atan2(omega[1], omega[0]);
  } else if (pt.dim == 3) {
    pt.zeta = std::acos(std::clamp(omega[0], -1.0, 1.0));
    pt.azimuth = std::atan2(omega[2], omega[1]);
  } else {
    throw UnsupportedDimension("complex sphere points need n in {2, 3}");
  }
  return pt;
}

Eigen::VectorXcd ComplexSpherePoint::components() const {
  Eigen::VectorXcd w(dim);
  w[0] = std::cos(zeta);
  if (dim == 2) {
    w[1] = std::sin(zeta);
  } else {
    w[1] = std::sin(zeta) * std::cos(azimuth);
    w[2] = std::sin(zeta) * std::sin(azimuth);
  }
  return w;
}

double ComplexSpherePoint::quadric_defect() const {
  const Eigen::VectorXcd w = components();
  std::complex<double> sum(0.0, 0.0);
  for (int a = 0; a < dim; ++a) sum += w[a] * w[a];
  return std::abs(sum - 1.0);
}

namespace {

double offset_weight(const Sinogram& s, Eigen::Index i) {
  const Eigen::Index p = s.offsets.size();
  return (i == 0 || i == p - 1) ? 0.5 * s.offset_step() : s.offset_step();
}

}  // namespace

std::complex<double> complex_slice_eval(const Sinogram& s, std::complex<double> z,
                                        Eigen::Index j) {
  std::complex<double> acc(0.0, 0.0);
  for (Eigen::Index i = 0; i < s.offsets.size(); ++i) {
    const double v = s.values(i, j);
    if (v == 0.0) continue;
    acc += offset_weight(s, i) * v *
           std::exp(std::complex<double>(0.0, -2.0 * M_PI * s.offsets[i]) * z);
  }
  return acc;
}

double log_abs_slice_eval(const Sinogram& s, std::complex<double> z, Eigen::Index j) {
  double scale = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < s.offsets.size(); ++i)
    if (s.values(i, j) != 0.0) scale = std::max(scale, 2.0 * M_PI * s.offsets[i] * z.imag());
  if (!std::isfinite(scale)) return -std::numeric_limits<double>::infinity();
  std::complex<double> acc(0.0, 0.0);
  for (Eigen::Index i = 0; i < s.offsets.size(); ++i) {
    const double v = s.values(i, j);
    if (v == 0.0) continue;
    const double p = s.offsets[i];
    acc += offset_weight(s, i) * v *
           std::polar(std::exp(2.0 * M_PI * p * z.imag() - scale), -2.0 * M_PI * p * z.real());
  }
  return std::log(std::abs(acc)) + scale;
}

double pw_seminorm(const Sinogram& s, int N, double r, const ComplexGrid& grid) {
  const auto pts = grid.points();
  const Eigen::Index q = s.directions.size();
  Eigen::VectorXd worst = Eigen::VectorXd::Zero(q);
  parallel_for(0, q, [&](long j) {
    for (const auto& z : pts) {
      const double weight = std::pow(1.0 + std::norm(z), N);
      const double log_h = log_abs_slice_eval(s, z, j);
      if (!std::isfinite(log_h)) continue;
      const double v = weight * std::exp(log_h - 2.0 * M_PI * r * std::abs(z.imag()));
      worst[j] = std::max(worst[j], v);
    }
  });
  return worst.maxCoeff();
}

namespace {

double detected_radius(const Sinogram& s) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < s.offsets.size(); ++i)
    if (s.values.row(i).cwiseAbs().maxCoeff() > 0.0) r = std::max(r, std::abs(s.offsets[i]));
  return r;
}

}  // namespace

SupportEstimate support_radius_estimate(const Sinogram& s, double b, int samples) {
  if (s.values.size() == 0 || s.values.cwiseAbs().maxCoeff() == 0.0)
    throw ZeroInput("support radius of a zero sinogram is undefined");
  if (samples < 8) throw InvalidArgument("need at least 8 fit samples");
  if (!(b > 0.0)) {
    const double r = s.support_radius ? *s.support_radius : detected_radius(s);
    b = std::min(6.0 / std::max(r, s.offset_step()), 1.0 / (2.0 * M_PI * s.offset_step()));
  }
  Eigen::MatrixXd design(samples, 4);
  for (int k = 0; k < samples; ++k) {
    const double u = 2.0 * M_PI * (0.5 * b + 0.5 * b * k / (samples - 1));
    design.row(k) << 1.0, u, std::sqrt(u), std::log(u);
  }
  const auto qr = design.colPivHouseholderQr();
  const Eigen::Index q = s.directions.size();
  SupportEstimate est;
  est.b = b;
  est.per_direction = Eigen::VectorXd::Constant(q, -std::numeric_limits<double>::infinity());
  parallel_for(0, q, [&](long j) {
    Eigen::VectorXd rhs(samples);
    for (int k = 0; k < samples; ++k) {
      const double y = 0.5 * b + 0.5 * b * k / (samples - 1);
      rhs[k] = log_abs_slice_eval(s, std::complex<double>(0.0, y), j);
      if (!std::isfinite(rhs[k])) return;
    }
    est.per_direction[j] = qr.solve(rhs)[1];
  });
  est.radius = est.per_direction.maxCoeff(&est.direction);
  if (!std::isfinite(est.radius)) throw ZeroInput("no direction carries a nonzero slice");
  return est;
}

HarmonicExpansion<std::complex<double>> taylor_coefficient(const Sinogram& s, int k) {
  if (k < 0 || k > 8) throw InvalidArgument("Taylor coefficients are limited to 0 <= k <= 8");
  const std::complex<double> factor = std::pow(std::complex<double>(0.0, -2.0 * M_PI), k);
  const Eigen::VectorXcd values = moment(s, k).cast<std::complex<double>>() * factor;
  return expand(values, s.directions);
}

HomogeneityReport homogeneity(const Sinogram& s, int k_max) {
  if (k_max < 0 || k_max > 8) throw InvalidArgument("k_max must lie in [0, 8]");
  HomogeneityReport rep;
  for (int k = 0; k <= k_max; ++k) {
    const auto e = taylor_coefficient(s, k);
    Eigen::VectorXd abs_moment(s.directions.size());
    for (Eigen::Index j = 0; j < s.directions.size(); ++j) {
      double acc = 0.0;
      for (Eigen::Index i = 0; i < s.offsets.size(); ++i)
        acc += offset_weight(s, i) * std::abs(s.values(i, j)) * std::pow(std::abs(s.offsets[i]), k);
      abs_moment[j] = acc;
    }
    const double natural = std::pow(2.0 * M_PI, k) *
                           std::sqrt(s.directions.weights().dot(abs_moment.cwiseAbs2()));
    const double denom = std::max(e.mass(), 1e-8 * natural);
    const double ratio = denom > 0.0 ? e.off_parity_mass(k) / denom : 0.0;
    rep.per_k.push_back(ratio);
    if (ratio > rep.defect) {
      rep.defect = ratio;
      rep.worst_k = k;
    }
  }
  return rep;
}

double homogeneity_defect(const Sinogram& s, int k_max) { return homogeneity(s, k_max).defect; }

std::complex<double> complexified_sphere_eval(const RealFunction& f, std::complex<double> z,
                                              const ComplexSpherePoint& pt) {
  if (pt.dim != f.grid.dim) throw UnsupportedDimension("sphere point and grid dimensions differ");
  const Eigen::VectorXcd xi = z * pt.components();
  return direct_fourier(f, xi);
}

ExtensionConsistency extension_consistency(const RealFunction& f, int directions,
                                           int mesh_count) {
  const double r = f.support_radius.value_or(f.grid.half_width);
  ExtensionConsistency out;
  out.mesh = ComplexGrid::make(4.0 / r, 1.0 / (2.0 * M_PI * r), mesh_count, mesh_count);
  out.directions = directions;
  DirectionSet dirs;
  if (f.grid.dim == 2) {
    dirs = DirectionSet::circle(directions);
  } else {
    int band = 1;
    while (DirectionSet::sphere(band).size() < directions) ++band;
    const DirectionSet full = DirectionSet::sphere(band);
    dirs = DirectionSet::custom(full.directions().leftCols(directions),
                                Eigen::VectorXd::Constant(directions, 1.0 / directions), 0);
  }
  const Sinogram s = radon_transform(f, dirs);
  const auto pts = out.mesh.points();
  Eigen::VectorXd worst = Eigen::VectorXd::Zero(dirs.size());
  parallel_for(0, dirs.size(), [&](long j) {
    const ComplexSpherePoint pt = ComplexSpherePoint::from_real(dirs.direction(j));
    for (const auto& z : pts) {
      const std::complex<double> lhs = complex_slice_eval(s, z, j);
      const std::complex<double> rhs = complexified_sphere_eval(f, z, pt);
      worst[j] = std::max(worst[j], std::abs(lhs - rhs));
    }
  });
  out.defect = worst.maxCoeff();
  return out;
}

double extension_consistency_defect(const RealFunction& f) {
  return extension_consistency(f).defect;
}

double decay_seminorm(const Sinogram& s, int k, int l, const Eigen::VectorXd& radii) {
  if (k < 0 || l < 0) throw InvalidArgument("seminorm orders must be nonnegative");
  double worst = 0.0;
  for (Eigen::Index i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    for (Eigen::Index j = 0; j < s.directions.size(); ++j) {
      std::complex<double> acc(0.0, 0.0);
      for (Eigen::Index m = 0; m < s.offsets.size(); ++m) {
        const double v = s.values(m, j);
        if (v == 0.0) continue;
        const double p = s.offsets[m];
        acc += offset_weight(s, m) * v * std::pow(std::complex<double>(0.0, -2.0 * M_PI * p), l) *
               std::polar(1.0, -2.0 * M_PI * p * r);
      }
      worst = std::max(worst, std::pow(1.0 + r * r, k) * std::abs(acc));
    }
  }
  return worst;
}

}  // namespace pwkit
