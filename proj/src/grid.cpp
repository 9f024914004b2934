#include "pwkit/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pwkit/harmonics.hpp"
#include "pwkit/quadrature.hpp"

namespace pwkit {

GridSpec GridSpec::make(int dim, int points, double half_width) {
  if (dim != 2 && dim != 3)
    throw UnsupportedDimension("grid dimension must be 2 or 3, got " +
                               std::to_string(dim));
  if (points < 33 || points % 2 == 0)
    throw InvalidGrid("points per axis must be odd and >= 33, got " +
                      std::to_string(points));
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw InvalidGrid("half width must be positive");
  return GridSpec{dim, points, half_width};
}

Eigen::Index GridSpec::size() const {
  Eigen::Index n = 1;
  for (int a = 0; a < dim; ++a) n *= points;
  return n;
}

double GridSpec::cell_volume() const { return std::pow(spacing(), dim); }

RealFunction make_bump(const Eigen::VectorXd& center, double radius,
                       double amplitude, const GridSpec& grid) {
  if (center.size() != grid.dim)
    throw InvalidArgument("bump center dimension does not match grid");
  if (!(radius > 0.0)) throw InvalidArgument("bump radius must be positive");
  for (int a = 0; a < grid.dim; ++a) {
    if (std::abs(center[a]) + radius > grid.half_width)
      throw BallOutsideGrid("ball of radius " + std::to_string(radius) +
                            " leaves the box [-L, L]^n");
  }
  RealFunction f(grid);
  f.support_radius = center.norm() + radius;
  const double r2 = radius * radius;
  const int m = grid.points;
  const Eigen::Index total = grid.size();
  for (Eigen::Index flat = 0; flat < total; ++flat) {
    Eigen::Index rest = flat;
    double d2 = 0.0;
    for (int a = grid.dim - 1; a >= 0; --a) {
      const double x = grid.coord(static_cast<int>(rest % m)) - center[a];
      d2 += x * x;
      rest /= m;
    }
    if (d2 < r2) f.values[flat] = amplitude * std::exp(1.0 - r2 / (r2 - d2));
  }
  return f;
}

namespace {

// Trapezoid weight of a node index along one axis.
inline double axis_weight(int i, int m) { return (i == 0 || i == m - 1) ? 0.5 : 1.0; }

template <typename Scalar, typename F>
Scalar weighted_sum(const SampledFunction<Scalar>& f, F&& term) {
  const int m = f.grid.points;
  Scalar acc{};
  if (f.grid.dim == 2) {
    for (int i = 0; i < m; ++i) {
      Scalar row{};
      for (int j = 0; j < m; ++j) row += axis_weight(j, m) * term(f.values[f.index(i, j)]);
      acc += axis_weight(i, m) * row;
    }
  } else {
    for (int i = 0; i < m; ++i) {
      Scalar plane{};
      for (int j = 0; j < m; ++j) {
        Scalar row{};
        for (int k = 0; k < m; ++k)
          row += axis_weight(k, m) * term(f.values[f.index(i, j, k)]);
        plane += axis_weight(j, m) * row;
      }
      acc += axis_weight(i, m) * plane;
    }
  }
  return acc * f.grid.cell_volume();
}

}  // namespace

template <typename Scalar>
Scalar integrate(const SampledFunction<Scalar>& f) {
  return weighted_sum(f, [](const Scalar& v) { return v; });
}

template <typename Scalar>
double l2_norm_sq(const SampledFunction<Scalar>& f) {
  SampledFunction<double> mod(f.grid, f.values.cwiseAbs2().eval());
  return integrate(mod);
}

template double integrate(const SampledFunction<double>&);
template std::complex<double> integrate(const SampledFunction<std::complex<double>>&);
template double l2_norm_sq(const SampledFunction<double>&);
template double l2_norm_sq(const SampledFunction<std::complex<double>>&);

double sup_norm(const RealFunction& f) {
  return f.values.size() == 0 ? 0.0 : f.values.cwiseAbs().maxCoeff();
}

void validate(const RealFunction& f) {
  if (f.values.size() != f.grid.size())
    throw InvalidArgument("sample count does not match grid");
  for (Eigen::Index i = 0; i < f.values.size(); ++i) {
    if (!std::isfinite(f.values[i])) throw InvalidArgument("non-finite sample");
    if (f.support_radius && f.values[i] != 0.0 &&
        f.node(i).norm() > *f.support_radius)
      throw InvalidArgument("nonzero sample outside declared support radius");
  }
}

void write_csv(std::ostream& out, const RealFunction& f) {
  out << f.grid.dim << ',' << f.grid.points << ',' << std::setprecision(17)
      << f.grid.half_width << '\n';
  for (Eigen::Index i = 0; i < f.values.size(); ++i) out << f.values[i] << '\n';
}

RealFunction read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header line n,M,L");
  std::istringstream header(line);
  int n = 0, m = 0;
  double l = 0.0;
  char c1 = 0, c2 = 0;
  if (!(header >> n >> c1 >> m >> c2 >> l) || c1 != ',' || c2 != ',')
    throw ParseError("malformed header: " + line);
  RealFunction f(GridSpec::make(n, m, l));
  Eigen::Index count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (count >= f.values.size()) throw ParseError("too many values");
    try {
      f.values[count++] = std::stod(line);
    } catch (const std::exception&) {
      throw ParseError("bad value: " + line);
    }
  }
  if (count != f.values.size())
    throw ParseError("expected " + std::to_string(f.values.size()) + " values, got " +
                     std::to_string(count));
  // The declared support is the smallest radius containing every nonzero node.
  double r = 0.0;
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    if (f.values[i] != 0.0) r = std::max(r, f.node(i).norm());
  f.support_radius = r;
  return f;
}

void write_csv(const std::string& path, const RealFunction& f) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open " + path);
  write_csv(out, f);
}

RealFunction read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return read_csv(in);
}

// ---------------------------------------------------------------------------

DirectionSet DirectionSet::circle(int count) {
  if (count < 2) throw InvalidArgument("need at least two directions");
  DirectionSet s;
  s.directions_.resize(2, count);
  for (int j = 0; j < count; ++j) {
    const double t = 2.0 * M_PI * j / count;
    s.directions_(0, j) = std::cos(t);
    s.directions_(1, j) = std::sin(t);
  }
  s.weights_ = Eigen::VectorXd::Constant(count, 1.0 / count);
  s.band_limit_ = (count - 1) / 2;
  s.finish();
  return s;
}

DirectionSet DirectionSet::sphere(int band_limit) {
  if (band_limit < 0) throw InvalidArgument("band limit must be nonnegative");
  const int polar = band_limit + 1;
  const int azimuth = 2 * band_limit + 2;
  const GaussRule gl = gauss_legendre(polar);
  DirectionSet s;
  s.directions_.resize(3, polar * azimuth);
  s.weights_.resize(polar * azimuth);
  int col = 0;
  for (int a = 0; a < polar; ++a) {
    const double z = gl.nodes[a];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int b = 0; b < azimuth; ++b) {
      const double phi = 2.0 * M_PI * (b + 0.5) / azimuth;
      s.directions_(0, col) = rho * std::cos(phi);
      s.directions_(1, col) = rho * std::sin(phi);
      s.directions_(2, col) = z;
      s.weights_[col] = 0.5 * gl.weights[a] / azimuth;
      ++col;
    }
  }
  s.band_limit_ = band_limit;
  s.finish();
  return s;
}

DirectionSet DirectionSet::custom(Eigen::MatrixXd directions, Eigen::VectorXd weights,
                                  int band_limit) {
  if (directions.cols() != weights.size())
    throw InvalidArgument("direction and weight counts differ");
  if (directions.rows() != 2 && directions.rows() != 3)
    throw UnsupportedDimension("directions must live in R^2 or R^3");
  if ((weights.array() <= 0.0).any()) throw InvalidArgument("weights must be positive");
  DirectionSet s;
  s.directions_ = std::move(directions);
  s.weights_ = std::move(weights);
  s.band_limit_ = band_limit;
  s.antipodal_ = false;
  s.antipodes_.assign(s.size(), -1);
  for (Eigen::Index j = 0; j < s.size(); ++j)
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if ((s.directions_.col(i) + s.directions_.col(j)).norm() < 1e-12) s.antipodes_[j] = i;
  s.antipodal_ = std::none_of(s.antipodes_.begin(), s.antipodes_.end(),
                              [](Eigen::Index a) { return a < 0; });
  return s;
}

void DirectionSet::finish() {
  antipodes_.assign(size(), -1);
  for (Eigen::Index j = 0; j < size(); ++j)
    for (Eigen::Index i = 0; i < size(); ++i)
      if ((directions_.col(i) + directions_.col(j)).norm() < 1e-12) {
        antipodes_[j] = i;
        break;
      }
  antipodal_ = std::none_of(antipodes_.begin(), antipodes_.end(),
                            [](Eigen::Index a) { return a < 0; });
  const double defect = exactness_defect();
  if (defect > 1e-10)
    throw QuadratureNotExact("direction rule misses harmonics up to band limit by " +
                             std::to_string(defect));
}

double DirectionSet::angle(Eigen::Index j) const {
  return std::atan2(directions_(1, j), directions_(0, j));
}

Eigen::Index DirectionSet::antipode(Eigen::Index j) const {
  if (!antipodal_) throw DirectionsNotAntipodal("direction set is not closed under negation");
  return antipodes_[j];
}

double DirectionSet::exactness_defect() const {
  const Eigen::MatrixXd basis = harmonic_basis(*this);
  const std::vector<int> deg = harmonic_degrees(dim(), band_limit_);
  const Eigen::VectorXd sums = basis.transpose() * weights_;
  double worst = std::abs(sums[0] - 1.0);
  for (Eigen::Index c = 1; c < sums.size(); ++c)
    if (deg[c] >= 1) worst = std::max(worst, std::abs(sums[c]));
  return worst;
}

double sphere_area(int n) { return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n); }

}  // namespace pwkit
