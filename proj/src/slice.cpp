#include "pwkit/slice.hpp"

#include <cmath>
#include <iomanip>

#include "pwkit/parallel.hpp"
#include "pwkit/quadrature.hpp"

namespace pwkit {

namespace {

constexpr double kEvenTolerance = 1e-6;

Eigen::VectorXd trapezoid_offset_weights(const Sinogram& s) {
  const Eigen::Index p = s.offsets.size();
  Eigen::VectorXd w = Eigen::VectorXd::Constant(p, s.offset_step());
  w[0] *= 0.5;
  w[p - 1] *= 0.5;
  return w;
}

}  // namespace

VectorFT radial_fourier(const Sinogram& s, const Eigen::VectorXd& radii) {
  const double defect = evenness_defect(s);
  if (defect > kEvenTolerance)
    throw NotEven("sinogram evenness defect " + std::to_string(defect));
  VectorFT ft;
  ft.radii = radii;
  ft.directions = s.directions;
  ft.values = Eigen::MatrixXcd::Zero(radii.size(), s.directions.size());
  const Eigen::VectorXd w = trapezoid_offset_weights(s);
  const Eigen::Index p = s.offsets.size();
  const Eigen::Index q = s.directions.size();
  parallel_for(0, radii.size(), [&](long i) {
    const double r = radii[i];
    Eigen::VectorXcd kernel(p);
    for (Eigen::Index k = 0; k < p; ++k)
      kernel[k] = w[k] * std::polar(1.0, -2.0 * M_PI * s.offsets[k] * r);
    for (Eigen::Index j = 0; j < q; ++j) {
      std::complex<double> acc(0.0, 0.0);
      for (Eigen::Index k = 0; k < p; ++k) acc += kernel[k] * s.values(k, j);
      ft.values(i, j) = acc;
    }
  });
  return ft;
}

Eigen::VectorXd uniform_radii(double step, double r_max) {
  if (!(step > 0.0) || r_max < 0.0) throw InvalidArgument("bad radial grid");
  const Eigen::Index count = static_cast<Eigen::Index>(std::floor(r_max / step + 1e-9)) + 1;
  Eigen::VectorXd r(count);
  for (Eigen::Index i = 0; i < count; ++i) r[i] = i * step;
  return r;
}

double default_radial_step(const Sinogram& s) {
  return 1.0 / (8.0 * s.offsets.cwiseAbs().maxCoeff());
}

double nyquist_radius(const Sinogram& s) { return 0.5 / s.offset_step(); }

std::complex<double> direct_fourier(const RealFunction& f, const Eigen::VectorXcd& xi) {
  const GridSpec& g = f.grid;
  if (xi.size() != g.dim) throw InvalidArgument("frequency dimension does not match grid");
  const int m = g.points;
  const double h = g.spacing();
  // exp(-2 pi i xi_a x) per axis, with trapezoid end weights folded in.
  std::vector<Eigen::VectorXcd> axis(g.dim, Eigen::VectorXcd(m));
  for (int a = 0; a < g.dim; ++a) {
    for (int i = 0; i < m; ++i) {
      const std::complex<double> arg(0.0, -2.0 * M_PI * g.coord(i));
      axis[a][i] = std::exp(arg * xi[a]) * ((i == 0 || i == m - 1) ? 0.5 : 1.0);
    }
  }
  std::complex<double> acc(0.0, 0.0);
  if (g.dim == 2) {
    for (int i = 0; i < m; ++i) {
      const double* row = f.values.data() + static_cast<Eigen::Index>(i) * m;
      std::complex<double> r(0.0, 0.0);
      for (int j = 0; j < m; ++j)
        if (row[j] != 0.0) r += row[j] * axis[1][j];
      acc += axis[0][i] * r;
    }
  } else {
    for (int i = 0; i < m; ++i) {
      std::complex<double> plane(0.0, 0.0);
      for (int j = 0; j < m; ++j) {
        const double* row = f.values.data() + (static_cast<Eigen::Index>(i) * m + j) * m;
        std::complex<double> r(0.0, 0.0);
        for (int k = 0; k < m; ++k)
          if (row[k] != 0.0) r += row[k] * axis[2][k];
        plane += axis[1][j] * r;
      }
      acc += axis[0][i] * plane;
    }
  }
  return acc * std::pow(h, g.dim);
}

std::complex<double> direct_fourier(const RealFunction& f, const Eigen::VectorXd& xi) {
  return direct_fourier(f, Eigen::VectorXcd(xi.cast<std::complex<double>>()));
}

Eigen::VectorXd plancherel_radial_weights(const Eigen::VectorXd& radii, int dim) {
  const double step = radii.size() > 1 ? radii[1] - radii[0] : 1.0;
  Eigen::VectorXd w = gregory_weights(radii.size(), step, 8);
  const double sigma = sphere_area(dim);
  for (Eigen::Index i = 0; i < radii.size(); ++i) w[i] *= sigma * std::pow(radii[i], dim - 1);
  return w;
}

SpectralCutoff select_cutoff(const VectorFT& ft, double tail_tolerance) {
  const int dim = ft.directions.dim();
  const Eigen::VectorXd rw = plancherel_radial_weights(ft.radii, dim);
  const Eigen::VectorXd power = ft.values.cwiseAbs2() * ft.directions.weights();
  Eigen::VectorXd terms = (rw.array() * power.array()).abs().matrix();
  const double total = terms.sum();
  SpectralCutoff cut;
  if (total == 0.0) {
    cut.count = std::min<Eigen::Index>(ft.radii.size(), 1);
    cut.r_max = 0.0;
    return cut;
  }
  double tail = 0.0;
  Eigen::Index count = ft.radii.size();
  // Walk inward while the discarded tail stays below tolerance.
  while (count > 1 && tail + terms[count - 1] < tail_tolerance * total) {
    tail += terms[count - 1];
    --count;
  }
  cut.count = count;
  cut.r_max = ft.radii[count - 1];
  cut.tail_fraction = tail / total;
  return cut;
}

MotionGroupTransform::MotionGroupTransform(const RealFunction& f, const SliceConfig& config)
    : sinogram_(radon_transform(f, config.directions)) {
  const double step =
      config.radial_step > 0.0 ? config.radial_step : default_radial_step(sinogram_);
  spectrum_ = radial_fourier(sinogram_, uniform_radii(step, nyquist_radius(sinogram_)));
  cutoff_ = select_cutoff(spectrum_, config.tail_tolerance);
  radial_weights_ = plancherel_radial_weights(spectrum_.radii, f.grid.dim);
}

double MotionGroupTransform::spectral_norm_sq() const {
  const Eigen::VectorXd power = spectrum_.values.cwiseAbs2() * spectrum_.directions.weights();
  return radial_weights_.head(cutoff_.count).dot(power.head(cutoff_.count));
}

namespace {

bool is_uniform_circle(const DirectionSet& dirs) {
  if (dirs.dim() != 2) return false;
  const Eigen::Index q = dirs.size();
  for (Eigen::Index j = 0; j < q; ++j) {
    const double t = 2.0 * M_PI * j / q;
    if (std::abs(dirs.directions()(0, j) - std::cos(t)) > 1e-12 ||
        std::abs(dirs.directions()(1, j) - std::sin(t)) > 1e-12)
      return false;
  }
  return true;
}

Eigen::MatrixXcd upsample_values(const Eigen::MatrixXcd& values, Eigen::Index count,
                                 int factor) {
  const Eigen::Index q = values.cols();
  const Eigen::Index qq = q * factor;
  const int band = static_cast<int>((q - 1) / 2);
  Eigen::MatrixXcd modes(count, 2 * band + 1);
  for (int l = -band; l <= band; ++l)
    for (Eigen::Index i = 0; i < count; ++i) {
      std::complex<double> acc(0.0, 0.0);
      for (Eigen::Index j = 0; j < q; ++j)
        acc += values(i, j) * std::polar(1.0, -2.0 * M_PI * l * j / q);
      modes(i, l + band) = acc / double(q);
    }
  Eigen::MatrixXcd synth(2 * band + 1, qq);
  for (int l = -band; l <= band; ++l)
    for (Eigen::Index j = 0; j < qq; ++j)
      synth(l + band, j) = std::polar(1.0, 2.0 * M_PI * l * j / qq);
  Eigen::MatrixXcd out = modes * synth;
  if (q % 2 == 0) {
    // Split the Nyquist mode evenly between +q/2 and -q/2.
    for (Eigen::Index i = 0; i < count; ++i) {
      std::complex<double> acc(0.0, 0.0);
      for (Eigen::Index j = 0; j < q; ++j) acc += values(i, j) * (j % 2 ? -1.0 : 1.0);
      acc /= double(q);
      for (Eigen::Index j = 0; j < qq; ++j)
        out(i, j) += acc * std::cos(2.0 * M_PI * (q / 2) * double(j) / qq);
    }
  }
  return out;
}

}  // namespace

int angular_factor(const VectorFT& ft, double r_max, double radius) {
  if (!is_uniform_circle(ft.directions)) return 1;
  const double q = double(ft.directions.size());
  const double needed = 2.0 * (2.0 * M_PI * r_max * radius) + q;
  return std::max(1, static_cast<int>(std::ceil(needed / q)));
}

VectorFT upsample_directions(const VectorFT& ft, Eigen::Index count, int factor) {
  if (factor <= 1 || !is_uniform_circle(ft.directions)) {
    VectorFT out{ft.radii.head(count), ft.directions, ft.values.topRows(count)};
    return out;
  }
  VectorFT out;
  out.radii = ft.radii.head(count);
  out.values = upsample_values(ft.values, count, factor);
  out.directions = DirectionSet::circle(static_cast<int>(out.values.cols()));
  return out;
}

std::complex<double> polar_synthesis(const VectorFT& ft, const Eigen::VectorXd& radial_weights,
                                     const Eigen::VectorXd& x) {
  const Eigen::Index nr = ft.radii.size();
  const double dr = ft.radial_step();
  std::complex<double> acc(0.0, 0.0);
  for (Eigen::Index j = 0; j < ft.directions.size(); ++j) {
    const double t = x.dot(ft.directions.directions().col(j));
    const std::complex<double> step = std::polar(1.0, 2.0 * M_PI * dr * t);
    std::complex<double> phase(1.0, 0.0), sum(0.0, 0.0);
    for (Eigen::Index i = 0; i < nr; ++i) {
      sum += radial_weights[i] * ft.values(i, j) * phase;
      phase *= step;
    }
    acc += ft.directions.weights()[j] * sum;
  }
  return acc;
}

std::complex<double> MotionGroupTransform::invert_at(const Eigen::VectorXd& x) const {
  const int factor = angular_factor(spectrum_, cutoff_.r_max, x.norm());
  return polar_synthesis(upsample_directions(spectrum_, cutoff_.count, factor), radial_weights_,
                         x);
}

double fourier_slice_defect(const RealFunction& f, const SliceConfig& config) {
  const MotionGroupTransform mg(f, config);
  const double r_test = mg.cutoff().r_max;
  const int count = std::max(config.test_radii, 2);
  Eigen::VectorXd radii(count);
  for (int i = 0; i < count; ++i) radii[i] = r_test * i / (count - 1);
  const VectorFT slice = radial_fourier(mg.sinogram(), radii);
  const DirectionSet& dirs = config.directions;
  const Eigen::Index q = dirs.size();
  Eigen::VectorXd worst = Eigen::VectorXd::Zero(count);
  parallel_for(0, count, [&](long i) {
    for (Eigen::Index j = 0; j < q; ++j) {
      const Eigen::VectorXd xi = radii[i] * dirs.direction(j);
      worst[i] = std::max(worst[i], std::abs(direct_fourier(f, xi) - slice.values(i, j)));
    }
  });
  return worst.maxCoeff();
}

PlancherelReport plancherel(const RealFunction& f, const SliceConfig& config) {
  PlancherelReport rep;
  rep.norm_sq = l2_norm_sq(f);
  if (rep.norm_sq == 0.0) throw ZeroFunction("Plancherel defect undefined for f = 0");
  const MotionGroupTransform mg(f, config);
  rep.spectral_norm_sq = mg.spectral_norm_sq();
  rep.cutoff = mg.cutoff();
  rep.defect = std::abs(rep.norm_sq - rep.spectral_norm_sq) / rep.norm_sq;
  return rep;
}

double plancherel_defect(const RealFunction& f, const SliceConfig& config) {
  return plancherel(f, config).defect;
}

std::complex<double> pointwise_inversion(const RealFunction& f, const Eigen::VectorXd& x,
                                         const SliceConfig& config) {
  return MotionGroupTransform(f, config).invert_at(x);
}

RealFunction marginal_projection(const RealFunction& f, int target_dim) {
  if (f.grid.dim != 3 || target_dim != 2)
    throw UnsupportedPair("marginal projection supports R^3 -> R^2 only");
  const GridSpec g2 = GridSpec::make(2, f.grid.points, f.grid.half_width);
  RealFunction out(g2);
  out.support_radius = f.support_radius;
  const int m = f.grid.points;
  const double h = f.grid.spacing();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double* fiber = f.values.data() + f.index(i, j, 0);
      double acc = 0.5 * (fiber[0] + fiber[m - 1]);
      for (int k = 1; k < m - 1; ++k) acc += fiber[k];
      out(i, j) = acc * h;
    }
  return out;
}

double projection_compatibility_defect(const RealFunction& f, int directions) {
  if (f.grid.dim != 3) throw UnsupportedPair("projection compatibility needs f on R^3");
  const DirectionSet circle = DirectionSet::circle(directions);
  Eigen::MatrixXd embedded = Eigen::MatrixXd::Zero(3, directions);
  embedded.topRows(2) = circle.directions();
  const DirectionSet lifted = DirectionSet::custom(embedded, circle.weights(), 0);
  const Eigen::VectorXd offsets = default_offsets(f.grid);
  const Sinogram low = radon_transform(marginal_projection(f), offsets, circle);
  const Sinogram high = radon_transform(f, offsets, lifted);
  return (low.values - high.values).cwiseAbs().maxCoeff();
}

void write_csv(std::ostream& out, const VectorFT& ft) {
  out << "r,omega_index,re,im\n" << std::setprecision(17);
  for (Eigen::Index j = 0; j < ft.directions.size(); ++j)
    for (Eigen::Index i = 0; i < ft.radii.size(); ++i)
      out << ft.radii[i] << ',' << j << ',' << ft.values(i, j).real() << ','
          << ft.values(i, j).imag() << '\n';
}

}  // namespace pwkit
