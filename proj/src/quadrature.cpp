#include "pwkit/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "pwkit/errors.hpp"

namespace pwkit {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("Gauss-Legendre rule needs at least one node");
  GaussRule rule{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

GaussRule gauss_legendre(int n, double a, double b) {
  GaussRule rule = gauss_legendre(n);
  const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
  rule.nodes = (rule.nodes.array() * half + mid).matrix();
  rule.weights *= half;
  return rule;
}

Eigen::VectorXd gregory_weights(Eigen::Index count, double step, int order) {
  if (order < 1 || count < 2 * order)
    throw InvalidArgument("too few samples for the requested Gregory order");
  // End corrections c_i, i < order, from Euler-Maclaurin: the left-end
  // trapezoid error on x^m is -B_{m+1} / (m + 1) for odd m and 0 otherwise.
  static const double bernoulli[] = {1.0,          -0.5,         1.0 / 6.0, 0.0,
                                     -1.0 / 30.0,  0.0,          1.0 / 42.0, 0.0,
                                     -1.0 / 30.0,  0.0,          5.0 / 66.0, 0.0,
                                     -691.0 / 2730.0, 0.0,       7.0 / 6.0};
  if (order > 14) throw InvalidArgument("Gregory order above 14 is not supported");
  Eigen::MatrixXd a(order, order);
  Eigen::VectorXd rhs(order);
  for (int m = 0; m < order; ++m) {
    rhs[m] = (m % 2 == 1) ? bernoulli[m + 1] / (m + 1) : 0.0;
    for (int i = 0; i < order; ++i) a(m, i) = std::pow(double(i), m);
  }
  const Eigen::VectorXd c = a.fullPivLu().solve(rhs);
  Eigen::VectorXd w = Eigen::VectorXd::Ones(count);
  w[0] = w[count - 1] = 0.5;
  for (int i = 0; i < order; ++i) {
    w[i] += c[i];
    w[count - 1 - i] += c[i];
  }
  return w * step;
}

Eigen::VectorXd clenshaw_curtis_sine_weights(Eigen::Index count) {
  if (count < 3 || count % 2 == 0)
    throw InvalidArgument("Clenshaw-Curtis weights need an odd sample count >= 3");
  const Eigen::Index n = count - 1;
  Eigen::VectorXd w(count);
  for (Eigen::Index j = 0; j <= n; ++j) {
    double v = 1.0;
    for (Eigen::Index k = 1; k <= n / 2; ++k) {
      const double b = (2 * k == n) ? 1.0 : 2.0;
      v -= b / (4.0 * k * k - 1.0) * std::cos(2.0 * M_PI * k * j / n);
    }
    const double c = (j == 0 || j == n) ? 1.0 : 2.0;
    w[j] = c * v / n;
  }
  return w;
}

}  // namespace pwkit
