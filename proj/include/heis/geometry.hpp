#pragma once

// The Heisenberg group H^d = C^d x R with coordinates (x, y, t) and group
// law (z,t)(z',t') = (z+z', t+t'+2 Im<z,z'>).  Horizontal frame
//   X_j = d/dx_j + 2 y_j d/dt,   Y_j = d/dy_j - 2 x_j d/dt,
// so [X_j, Y_j] = -4 d/dt and the homogeneous dimension is Q = 2d+2.
// Horizontal vectors are stored as length-2d arrays (X-slots then Y-slots);
// Euclidean gradients as length-(2d+1) arrays (x, y, t).

#include <vector>

namespace heis {

struct HPoint {
  std::vector<double> x;
  std::vector<double> y;
  double t = 0;

  int dim() const { return static_cast<int>(x.size()); }
  static HPoint zero(int d) { return {std::vector<double>(d, 0.0), std::vector<double>(d, 0.0), 0.0}; }
};

HPoint group_multiply(const HPoint& p, const HPoint& q);
HPoint group_inverse(const HPoint& p);

// |z| and the Koranyi gauge rho = (|z|^4 + t^2)^{1/4}
double zmod(const HPoint& p);
double koranyi_norm(const HPoint& p);

// sigma(p): the 2d x (2d+1) matrix with rows X_j, Y_j in the Euclidean
// frame.  sigma_apply sends a Euclidean gradient to horizontal components;
// sigma_t_sigma_apply computes sigma^T sigma h for the horizontal
// divergence of a Euclidean vector field h.
std::vector<double> sigma_apply(const HPoint& p, const std::vector<double>& grad);
std::vector<double> sigma_t_sigma_apply(const HPoint& p, const std::vector<double>& h);

// Closed forms at the gauge rho.  All require rho > 0.
namespace koranyi {
// (X_1..X_d, Y_1..Y_d) rho = (|z|^2 z + (y,-x) t) / rho^3
std::vector<double> horizontal_gradient(const HPoint& p);
// |grad_H rho| = |z| / rho
double gradient_norm(const HPoint& p);
// L rho = -(2d+1)|z|^2 / rho^3 for L = -sum(X_j^2 + Y_j^2)
double sublaplacian(const HPoint& p);
// d rho / dr along the cylindrical radius r = |z|: r^3 / rho^3
double radial_derivative(const HPoint& p);
}  // namespace koranyi

}  // namespace heis
