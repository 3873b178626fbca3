#include "heis/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace heis {

namespace {
void require_same_dim(const HPoint& p, const HPoint& q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("group op: mismatched dimensions");
}
}  // namespace

HPoint group_multiply(const HPoint& p, const HPoint& q) {
  require_same_dim(p, q);
  const int d = p.dim();
  HPoint r = HPoint::zero(d);
  double twist = 0;  // 2 Im<z, z'> = 2 sum(y_j x'_j - x_j y'_j)
  for (int j = 0; j < d; ++j) {
    r.x[j] = p.x[j] + q.x[j];
    r.y[j] = p.y[j] + q.y[j];
    twist += p.y[j] * q.x[j] - p.x[j] * q.y[j];
  }
  r.t = p.t + q.t + 2 * twist;
  return r;
}

HPoint group_inverse(const HPoint& p) {
  HPoint r = p;
  for (auto& v : r.x) v = -v;
  for (auto& v : r.y) v = -v;
  r.t = -r.t;
  return r;
}

double zmod(const HPoint& p) {
  double s = 0;
  for (int j = 0; j < p.dim(); ++j) s += p.x[j] * p.x[j] + p.y[j] * p.y[j];
  return std::sqrt(s);
}

double koranyi_norm(const HPoint& p) {
  const double r = zmod(p);
  return std::pow(r * r * r * r + p.t * p.t, 0.25);
}

std::vector<double> sigma_apply(const HPoint& p, const std::vector<double>& grad) {
  const int d = p.dim();
  if (static_cast<int>(grad.size()) != 2 * d + 1)
    throw std::invalid_argument("sigma_apply: gradient must have 2d+1 entries");
  std::vector<double> h(2 * d);
  const double gt = grad[2 * d];
  for (int j = 0; j < d; ++j) {
    h[j] = grad[j] + 2 * p.y[j] * gt;
    h[d + j] = grad[d + j] - 2 * p.x[j] * gt;
  }
  return h;
}

std::vector<double> sigma_t_sigma_apply(const HPoint& p, const std::vector<double>& h) {
  const int d = p.dim();
  if (static_cast<int>(h.size()) != 2 * d + 1)
    throw std::invalid_argument("sigma_t_sigma_apply: field must have 2d+1 entries");
  std::vector<double> out(2 * d + 1);
  const double ht = h[2 * d];
  double tcomp = 0;
  double r2 = 0;
  for (int j = 0; j < d; ++j) {
    out[j] = h[j] + 2 * p.y[j] * ht;
    out[d + j] = h[d + j] - 2 * p.x[j] * ht;
    tcomp += 2 * p.y[j] * h[j] - 2 * p.x[j] * h[d + j];
    r2 += p.x[j] * p.x[j] + p.y[j] * p.y[j];
  }
  out[2 * d] = tcomp + 4 * r2 * ht;
  return out;
}

namespace koranyi {

std::vector<double> horizontal_gradient(const HPoint& p) {
  const int d = p.dim();
  const double rho = koranyi_norm(p);
  if (rho <= 0) throw std::domain_error("koranyi oracle at the origin");
  const double r = zmod(p);
  const double s = r * r;
  const double inv3 = 1.0 / (rho * rho * rho);
  std::vector<double> g(2 * d);
  for (int j = 0; j < d; ++j) {
    g[j] = (s * p.x[j] + p.y[j] * p.t) * inv3;
    g[d + j] = (s * p.y[j] - p.x[j] * p.t) * inv3;
  }
  return g;
}

double gradient_norm(const HPoint& p) {
  const double rho = koranyi_norm(p);
  if (rho <= 0) throw std::domain_error("koranyi oracle at the origin");
  return zmod(p) / rho;
}

double sublaplacian(const HPoint& p) {
  const double rho = koranyi_norm(p);
  if (rho <= 0) throw std::domain_error("koranyi oracle at the origin");
  const double r = zmod(p);
  return -(2 * p.dim() + 1) * r * r / (rho * rho * rho);
}

double radial_derivative(const HPoint& p) {
  const double rho = koranyi_norm(p);
  if (rho <= 0) throw std::domain_error("koranyi oracle at the origin");
  const double r = zmod(p);
  return r * r * r / (rho * rho * rho);
}

}  // namespace koranyi

}  // namespace heis
