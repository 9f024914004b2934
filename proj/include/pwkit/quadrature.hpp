#pragma once

#include <Eigen/Core>

namespace pwkit {

struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
GaussRule gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [a, b].
GaussRule gauss_legendre(int n, double a, double b);

/// Weights for integrating equispaced samples over [x_0, x_{count-1}]:
/// trapezoid with Gregory end corrections exact for polynomials of degree
/// < order at each end. Requires count >= 2 * order.
Eigen::VectorXd gregory_weights(Eigen::Index count, double step, int order = 8);

/// Clenshaw-Curtis weights on t_j = j pi / (T - 1): sum_j w_j g(t_j)
/// approximates int_0^pi g(t) sin(t) dt for g even and 2 pi periodic.
Eigen::VectorXd clenshaw_curtis_sine_weights(Eigen::Index count);

}  // namespace pwkit
