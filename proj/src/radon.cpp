#include "pwkit/radon.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <vector>

#include "pwkit/interpolation.hpp"
#include "pwkit/parallel.hpp"
#include "pwkit/slice.hpp"

namespace pwkit {

double Sinogram::offset_step() const {
  return offsets.size() > 1 ? offsets[1] - offsets[0] : 0.0;
}

void Sinogram::check_offsets() const {
  const Eigen::Index p = offsets.size();
  if (p < 3 || p % 2 == 0) throw InvalidArgument("offset count must be odd and >= 3");
  const double h = offset_step();
  if (!(h > 0.0)) throw InvalidArgument("offsets must increase");
  for (Eigen::Index i = 0; i < p; ++i) {
    const double expected = (i - (p - 1) / 2) * h;
    if (std::abs(offsets[i] - expected) > 1e-9 * h * p)
      throw InvalidArgument("offsets must be equispaced and centered at 0");
  }
  if (values.rows() != p || values.cols() != directions.size())
    throw InvalidArgument("sinogram values do not match offsets x directions");
}

Eigen::VectorXd default_offsets(const GridSpec& grid) {
  const double h = grid.spacing();
  const double extent = grid.half_width * std::sqrt(double(grid.dim));
  const int half = static_cast<int>(std::ceil(extent / h - 1e-9));
  Eigen::VectorXd p(2 * half + 1);
  for (int i = 0; i < p.size(); ++i) p[i] = (i - half) * h;
  return p;
}

namespace {

// Orthonormal basis of omega^perp. Antipodal directions get the same plane
// lattice: the basis for -omega is the one for omega with v negated.
void plane_basis(const Eigen::Vector3d& omega, Eigen::Vector3d& u, Eigen::Vector3d& v) {
  bool flip = false;
  for (int a = 0; a < 3; ++a) {
    if (std::abs(omega[a]) > 1e-14) {
      flip = omega[a] < 0;
      break;
    }
  }
  const Eigen::Vector3d w = flip ? Eigen::Vector3d(-omega) : omega;
  int axis = 0;
  for (int a = 1; a < 3; ++a)
    if (std::abs(w[a]) < std::abs(w[axis])) axis = a;
  Eigen::Vector3d e = Eigen::Vector3d::Zero();
  e[axis] = 1.0;
  Eigen::Vector3d u0 = (e - e.dot(w) * w).normalized();
  Eigen::Vector3d v0 = w.cross(u0);
  // Rotate the lattice off the coordinate axes so that plane sums never
  // coincide with sums along grid lines.
  const double c = std::cos(0.5), s = std::sin(0.5);
  u = c * u0 + s * v0;
  v = -s * u0 + c * v0;
  if (flip) v = -v;
}

}  // namespace

Sinogram radon_transform(const RealFunction& f, const Eigen::VectorXd& offsets,
                         const DirectionSet& directions) {
  const GridSpec& g = f.grid;
  if (g.dim != 2 && g.dim != 3)
    throw UnsupportedDimension("Radon transform needs n in {2, 3}");
  if (directions.dim() != g.dim)
    throw UnsupportedDimension("direction set dimension does not match grid");
  if (f.support_radius && *f.support_radius > g.half_width)
    throw InvalidArgument("declared support radius exceeds the grid half width");

  Sinogram s;
  s.offsets = offsets;
  s.directions = directions;
  s.values = Eigen::MatrixXd::Zero(offsets.size(), directions.size());
  s.support_radius = f.support_radius;
  s.source_grid = g;
  s.check_offsets();

  const double h = g.spacing();
  // The interpolant vanishes one cell beyond the declared support, or three
  // cells past the box.
  const double reach = f.support_radius
                           ? *f.support_radius + h
                           : (g.half_width + 3.0 * h) * std::sqrt(double(g.dim));
  const Eigen::Index q = directions.size();

  if (g.dim == 2) {
    parallel_for(0, q, [&](long j) {
      const double c = directions.directions()(0, j), sn = directions.directions()(1, j);
      for (Eigen::Index i = 0; i < offsets.size(); ++i) {
        const double p = offsets[i];
        if (std::abs(p) >= reach) continue;
        const int kmax = static_cast<int>(std::sqrt(reach * reach - p * p) / h) + 1;
        double acc = 0.0;
        for (int k = -kmax; k <= kmax; ++k) {
          const double t = k * h;
          const double pt[2] = {p * c - t * sn, p * sn + t * c};
          acc += interpolate(f, pt);
        }
        s.values(i, j) = acc * h;
      }
    });
  } else {
    parallel_for(0, q, [&](long j) {
      const Eigen::Vector3d omega = directions.directions().col(j);
      Eigen::Vector3d u, v;
      plane_basis(omega, u, v);
      for (Eigen::Index i = 0; i < offsets.size(); ++i) {
        const double p = offsets[i];
        if (std::abs(p) >= reach) continue;
        const double rad2 = reach * reach - p * p;
        const int kmax = static_cast<int>(std::sqrt(rad2) / h) + 1;
        double acc = 0.0;
        for (int a = -kmax; a <= kmax; ++a) {
          const double ta = a * h;
          const int bmax = static_cast<int>(std::sqrt(std::max(0.0, rad2 - ta * ta)) / h) + 1;
          for (int b = -bmax; b <= bmax; ++b) {
            const double tb = b * h;
            const Eigen::Vector3d x = p * omega + ta * u + tb * v;
            acc += interpolate(f, x.data());
          }
        }
        s.values(i, j) = acc * h * h;
      }
    });
  }
  return s;
}

Sinogram radon_transform(const RealFunction& f, const DirectionSet& directions) {
  return radon_transform(f, default_offsets(f.grid), directions);
}

double evenness_defect(const Sinogram& s) {
  s.check_offsets();
  const Eigen::Index p = s.offsets.size();
  double worst = 0.0;
  for (Eigen::Index j = 0; j < s.directions.size(); ++j) {
    const Eigen::Index jm = s.directions.antipode(j);
    for (Eigen::Index i = 0; i < p; ++i)
      worst = std::max(worst, std::abs(s.values(i, j) - s.values(p - 1 - i, jm)));
  }
  return worst;
}

Eigen::VectorXd moment(const Sinogram& s, int k) {
  if (k < 0) throw InvalidArgument("moment order must be nonnegative");
  s.check_offsets();
  const Eigen::Index p = s.offsets.size();
  Eigen::VectorXd weights(p);
  for (Eigen::Index i = 0; i < p; ++i) {
    const double end = (i == 0 || i == p - 1) ? 0.5 : 1.0;
    weights[i] = end * s.offset_step() * std::pow(s.offsets[i], k);
  }
  return s.values.transpose() * weights;
}

RealFunction inverse_radon(const Sinogram& s, const GridSpec& grid, double even_tolerance) {
  const double defect = evenness_defect(s);
  if (defect > even_tolerance)
    throw NotEven("sinogram evenness defect " + std::to_string(defect) +
                  " exceeds tolerance");
  if (grid.dim != s.dim()) throw UnsupportedDimension("grid and sinogram dimensions differ");

  const VectorFT full =
      radial_fourier(s, uniform_radii(default_radial_step(s), nyquist_radius(s)));
  const SpectralCutoff cut = select_cutoff(full);
  const Eigen::VectorXd rw = plancherel_radial_weights(full.radii, grid.dim);

  RealFunction out(grid);
  out.support_radius = s.support_radius;
  // Nodes are grouped by the angular upsampling their radius needs.
  std::map<int, std::vector<Eigen::Index>> groups;
  for (Eigen::Index flat = 0; flat < grid.size(); ++flat)
    groups[angular_factor(full, cut.r_max, out.node(flat).norm())].push_back(flat);
  for (const auto& [factor, nodes] : groups) {
    const VectorFT ft = upsample_directions(full, cut.count, factor);
    const Eigen::Index q = ft.directions.size();
    // For real data F(r, -omega) = conj F(r, omega), so each antipodal pair
    // contributes twice the real part of one member.
    std::vector<Eigen::Index> half;
    for (Eigen::Index j = 0; j < q; ++j)
      if (j < ft.directions.antipode(j)) half.push_back(j);
    const double dr = ft.radial_step();
    parallel_for(0, static_cast<long>(nodes.size()), [&](long k) {
      const Eigen::VectorXd x = out.node(nodes[k]);
      double acc = 0.0;
      for (Eigen::Index j : half) {
        const double t = x.dot(ft.directions.directions().col(j));
        const std::complex<double> step = std::polar(1.0, 2.0 * M_PI * dr * t);
        std::complex<double> phase(1.0, 0.0), sum(0.0, 0.0);
        for (Eigen::Index i = 0; i < cut.count; ++i) {
          sum += rw[i] * ft.values(i, j) * phase;
          phase *= step;
        }
        acc += 2.0 * ft.directions.weights()[j] * sum.real();
      }
      out.values[nodes[k]] = acc;
    });
  }
  return out;
}

RealFunction inverse_radon(const Sinogram& s, double even_tolerance) {
  if (!s.source_grid) throw InvalidArgument("sinogram carries no source grid");
  return inverse_radon(s, *s.source_grid, even_tolerance);
}

void write_csv(std::ostream& out, const Sinogram& s) {
  out << s.offsets.size() << ',' << s.directions.size() << ',' << s.dim() << '\n';
  out << std::setprecision(17);
  for (Eigen::Index j = 0; j < s.directions.size(); ++j)
    for (Eigen::Index i = 0; i < s.offsets.size(); ++i)
      out << s.offsets[i] << ',' << j << ',' << s.values(i, j) << '\n';
}

void write_direction_csv(std::ostream& out, const DirectionSet& dirs) {
  out << std::setprecision(17);
  for (Eigen::Index j = 0; j < dirs.size(); ++j) {
    out << j;
    for (int a = 0; a < dirs.dim(); ++a) out << ',' << dirs.directions()(a, j);
    out << ',' << dirs.weights()[j] << '\n';
  }
}

void write_csv(const std::string& path, const Sinogram& s) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open " + path);
  write_csv(out, s);
}

}  // namespace pwkit
