#include "pwkit/sphere.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "pwkit/parallel.hpp"
#include "pwkit/quadrature.hpp"

namespace pwkit {

ZonalProfile ZonalProfile::make(int n, Eigen::VectorXd samples,
                                std::optional<double> support_angle) {
  if (n != 2 && n != 3) throw UnsupportedDimension("zonal profiles need n in {2, 3}");
  if (samples.size() < 5 || samples.size() % 2 == 0)
    throw InvalidArgument("zonal profiles need an odd sample count >= 5");
  if (!samples.allFinite()) throw InvalidArgument("non-finite profile sample");
  ZonalProfile F{n, std::move(samples), support_angle};
  if (support_angle) {
    if (!(*support_angle > 0.0) || *support_angle > M_PI)
      throw InvalidArgument("support angle must lie in (0, pi]");
    for (Eigen::Index i = 0; i < F.size(); ++i)
      if (F.angle(i) > *support_angle && F.samples[i] != 0.0)
        throw InvalidArgument("profile is nonzero beyond its declared support angle");
  }
  return F;
}

ZonalProfile ZonalProfile::from_function(int n, Eigen::Index count,
                                         const std::function<double(double)>& F,
                                         std::optional<double> support_angle) {
  if (count < 5) throw InvalidArgument("zonal profiles need an odd sample count >= 5");
  Eigen::VectorXd v(count);
  for (Eigen::Index i = 0; i < count; ++i) v[i] = F(i * M_PI / (count - 1));
  return make(n, std::move(v), support_angle);
}

ZonalProfile ZonalProfile::cap_bump(int n, double t_supp, Eigen::Index count) {
  const double a2 = t_supp * t_supp;
  return from_function(
      n, count,
      [a2](double t) { return t * t < a2 ? std::exp(1.0 - a2 / (a2 - t * t)) : 0.0; },
      t_supp);
}

ZonalProfile ZonalProfile::cap_power(int n, double t_supp, int power, Eigen::Index count) {
  if (power < 1) throw InvalidArgument("cap power must be positive");
  const double c = std::cos(t_supp);
  return from_function(
      n, count,
      [c, t_supp, power](double t) {
        return t < t_supp ? std::pow((std::cos(t) - c) / (1.0 - c), power) : 0.0;
      },
      t_supp);
}

double ZonalProfile::step() const { return M_PI / (samples.size() - 1); }

double ZonalProfile::vanishing_angle() const {
  Eigen::Index last = -1;
  for (Eigen::Index i = 0; i < size(); ++i)
    if (samples[i] != 0.0) last = i;
  if (last < 0) return 0.0;
  double t = angle(std::min(last + 1, size() - 1));
  if (support_angle) t = std::min(t, std::max(*support_angle, angle(last)));
  return t;
}

namespace {

void check_dim(int n) {
  if (n != 2 && n != 3) throw UnsupportedDimension("sphere routines need n in {2, 3}");
}

// psi_0..psi_{m_max} at one angle.
Eigen::VectorXd psi_all(int m_max, double t, int n) {
  const double lambda = 0.5 * (n - 1);
  const double x = std::cos(t);
  Eigen::VectorXd psi(m_max + 1);
  psi[0] = 1.0;
  if (m_max >= 1) psi[1] = x;
  for (int m = 1; m < m_max; ++m)
    psi[m + 1] = (2.0 * (m + lambda) * x * psi[m] - m * psi[m - 1]) / (m + 2.0 * lambda);
  return psi;
}

// a_k with F(t) = sum'' a_k cos(k t), ends halved.
Eigen::VectorXd cosine_coefficients(const Eigen::VectorXd& f) {
  const Eigen::Index n = f.size() - 1;
  std::vector<double> table(2 * n);
  for (Eigen::Index q = 0; q < 2 * n; ++q) table[q] = std::cos(M_PI * q / n);
  Eigen::VectorXd a(n + 1);
  for (Eigen::Index k = 0; k <= n; ++k) {
    double acc = 0.5 * (f[0] + f[n] * ((k % 2) ? -1.0 : 1.0));
    for (Eigen::Index j = 1; j < n; ++j) acc += f[j] * table[(k * j) % (2 * n)];
    a[k] = 2.0 * acc / n;
  }
  return a;
}

// (2 / pi) int_s^pi F sin t dt from the cosine series.
double radon3(const Eigen::VectorXd& a, double s) {
  const Eigen::Index n = a.size() - 1;
  // S(j) = int_s^pi sin(j t) dt for j >= 1.
  const double cs = std::cos(s);
  double c_prev = 1.0, c_cur = cs;  // cos(0 s), cos(1 s)
  auto S = [](double cj, Eigen::Index j) { return (cj - ((j % 2) ? -1.0 : 1.0)) / double(j); };
  // cos(j s) for j = 0..n+1
  std::vector<double> cj(n + 2);
  cj[0] = c_prev;
  cj[1] = c_cur;
  for (Eigen::Index j = 2; j <= n + 1; ++j) cj[j] = 2.0 * cs * cj[j - 1] - cj[j - 2];
  double acc = 0.0;
  for (Eigen::Index k = 0; k <= n; ++k) {
    const double w = (k == 0 || k == n) ? 0.5 * a[k] : a[k];
    const double up = S(cj[k + 1], k + 1);
    const double down = (k == 0) ? -S(cj[1], 1) : (k == 1 ? 0.0 : S(cj[k - 1], k - 1));
    acc += w * 0.5 * (up - down);
  }
  return 2.0 / M_PI * acc;
}

// F at an arbitrary angle by 10-point Lagrange interpolation, using the
// evenness of F about 0 and pi.
double interpolate_profile(const Eigen::VectorXd& f, double t) {
  constexpr int kPoints = 10;
  const Eigen::Index n = f.size() - 1;
  const double u = t / (M_PI / n);
  const Eigen::Index base = static_cast<Eigen::Index>(std::floor(u)) - kPoints / 2 + 1;
  const double frac = u - std::floor(u);
  if (frac == 0.0) {
    const Eigen::Index i = static_cast<Eigen::Index>(std::floor(u));
    return f[std::clamp<Eigen::Index>(i, 0, n)];
  }
  double acc = 0.0;
  for (int a = 0; a < kPoints; ++a) {
    Eigen::Index i = base + a;
    double w = 1.0;
    for (int b = 0; b < kPoints; ++b)
      if (b != a) w *= (u - (base + b)) / double(a - b);
    if (i < 0) i = -i;
    if (i > n) i = 2 * n - i;
    acc += w * f[i];
  }
  return acc;
}

// (1 / (sqrt 2 pi)) int_s^pi F sin t (cos s - cos t)^{-1/2} dt with
// cos t = cos s - v^2.
double radon2(const Eigen::VectorXd& f, double s, double t_end, const GaussRule& rule) {
  const double cs = std::cos(s);
  const double top = cs - std::cos(t_end);
  if (!(top > 0.0)) return 0.0;
  const double v_max = std::sqrt(top);
  double acc = 0.0;
  for (Eigen::Index k = 0; k < rule.nodes.size(); ++k) {
    const double v = 0.5 * v_max * (rule.nodes[k] + 1.0);
    const double x = std::max(-1.0, cs - v * v);
    acc += rule.weights[k] * interpolate_profile(f, std::acos(x));
  }
  acc *= 0.5 * v_max;
  return 2.0 * acc / (std::sqrt(2.0) * M_PI);
}

const GaussRule& abel_rule() {
  static const GaussRule rule = gauss_legendre(64);
  return rule;
}

}  // namespace

double spherical_function(int m, double t, int n) {
  if (m < 0) throw InvalidArgument("spherical functions need m >= 0");
  if (n < 2) throw UnsupportedDimension("spherical functions need n >= 2");
  return psi_all(m, t, n)[m];
}

SphericalCoefficients spherical_transform(const ZonalProfile& F, int m_max) {
  check_dim(F.n);
  if (m_max < 0) throw InvalidArgument("m_max must be nonnegative");
  const Eigen::Index count = F.size();
  Eigen::VectorXd w;
  if (F.n == 2) {
    w = clenshaw_curtis_sine_weights(count);
  } else {
    w = Eigen::VectorXd::Constant(count, F.step());
    w[0] = w[count - 1] = 0.5 * F.step();
    for (Eigen::Index i = 0; i < count; ++i) w[i] *= std::pow(std::sin(F.angle(i)), 2);
  }
  SphericalCoefficients out;
  out.values = Eigen::VectorXd::Zero(m_max + 1);
  for (Eigen::Index i = 0; i < count; ++i) {
    if (F.samples[i] == 0.0) continue;
    out.values += (w[i] * F.samples[i]) * psi_all(m_max, F.angle(i), F.n);
  }
  out.normalization = "int_0^pi F(t) psi_m(t) sin^" + std::to_string(F.n - 1) + "(t) dt";
  return out;
}

double sphere_radon(const ZonalProfile& F, double s) {
  check_dim(F.n);
  if (s < 0.0 || s > M_PI) throw InvalidArgument("sphere_radon needs 0 <= s <= pi");
  const double t_end = F.vanishing_angle();
  if (s >= t_end) return 0.0;
  if (F.n == 2) return radon2(F.samples, s, t_end, abel_rule());
  return radon3(cosine_coefficients(F.samples), s);
}

Eigen::VectorXd sphere_radon_samples(const ZonalProfile& F) {
  check_dim(F.n);
  const double t_end = F.vanishing_angle();
  const Eigen::VectorXd a = F.n == 3 ? cosine_coefficients(F.samples) : Eigen::VectorXd();
  Eigen::VectorXd r = Eigen::VectorXd::Zero(F.size());
  parallel_for(0, F.size(), [&](long i) {
    const double s = F.angle(i);
    if (s >= t_end) return;
    r[i] = F.n == 3 ? radon3(a, s) : radon2(F.samples, s, t_end, abel_rule());
  });
  return r;
}

SphereSliceReport sphere_slice(const ZonalProfile& F, int m_max) {
  check_dim(F.n);
  if (m_max < 0) throw InvalidArgument("m_max must be nonnegative");
  SphereSliceReport rep;
  rep.lhs = spherical_transform(F, m_max).values;
  if (rep.lhs[0] == 0.0) throw DegenerateCalibration("f^(0) = 0, the constant cannot be fixed");
  const Eigen::VectorXd R = sphere_radon_samples(F);
  const double h = F.step();
  rep.rhs = Eigen::VectorXd::Zero(m_max + 1);
  for (int m = 0; m <= m_max; ++m) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < F.size(); ++i) {
      const double w = (i == 0 || i == F.size() - 1) ? 0.5 * h : h;
      acc += w * std::cos((m + F.rho()) * F.angle(i)) * R[i];
    }
    rep.rhs[m] = acc;
  }
  if (rep.rhs[0] == 0.0) throw DegenerateCalibration("Radon side vanishes at m = 0");
  rep.constant = rep.lhs[0] / rep.rhs[0];
  const double scale = rep.lhs.cwiseAbs().maxCoeff();
  for (int m = 1; m <= m_max; ++m) {
    rep.defect = std::max(rep.defect, std::abs(rep.lhs[m] - rep.constant * rep.rhs[m]) / scale);
    if (std::abs(rep.lhs[m]) >= 1e-3 * scale && rep.rhs[m] != 0.0)
      rep.constant_spread = std::max(
          rep.constant_spread,
          std::abs(rep.lhs[m] / rep.rhs[m] - rep.constant) / std::abs(rep.constant));
  }
  return rep;
}

double sphere_slice_defect(const ZonalProfile& F, int m_max) {
  return sphere_slice(F, m_max).defect;
}

namespace {

double detected_support(const ZonalProfile& F, const Eigen::VectorXd& v) {
  const double top = v.cwiseAbs().maxCoeff();
  if (top == 0.0) return 0.0;
  Eigen::Index last = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > 1e-9 * top) last = i;
  return F.angle(std::min(last + 1, v.size() - 1));
}

}  // namespace

std::pair<double, double> sphere_support_check(const ZonalProfile& F) {
  if (F.n != 3) throw UnsupportedDimension("the support check is implemented for n = 3");
  if (F.samples.cwiseAbs().maxCoeff() == 0.0) return {0.0, 0.0};
  return {detected_support(F, F.samples), detected_support(F, sphere_radon_samples(F))};
}

void write_csv(std::ostream& os, const ZonalProfile& F) {
  os << "t,value\n" << std::setprecision(17);
  for (Eigen::Index i = 0; i < F.size(); ++i) os << F.angle(i) << ',' << F.samples[i] << '\n';
}

ZonalProfile read_zonal_csv(std::istream& is, int n) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("missing header line t,value");
  std::vector<double> t, v;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    double a, b;
    char comma;
    if (!(row >> a >> comma >> b) || comma != ',') throw ParseError("bad profile row: " + line);
    t.push_back(a);
    v.push_back(b);
  }
  if (t.size() < 5) throw ParseError("profile needs at least 5 rows");
  const double h = M_PI / (t.size() - 1);
  for (size_t i = 0; i < t.size(); ++i)
    if (std::abs(t[i] - i * h) > 1e-9) throw ParseError("angles must be equispaced on [0, pi]");
  return ZonalProfile::make(n, Eigen::Map<Eigen::VectorXd>(v.data(), v.size()));
}

}  // namespace pwkit
