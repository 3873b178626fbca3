#include "heis/field.hpp"

#include <cmath>
#include <stdexcept>

namespace heis {

namespace {

// Euclidean derivative of Q*G for G = exp(-a|z|^2 - b t^2), returned as the
// polynomial factor of the same Gaussian.
Poly gauss_deriv(const Poly& q, int var, double a, double b) {
  const int d = q.dim();
  Poly out = q.derivative(var);
  const double coef = var < 2 * d ? -2 * a : -2 * b;
  if (coef != 0) out = out + Poly::variable(d, var) * q * cplx{coef, 0};
  return out;
}

// frame derivative on the polynomial factor: X_j (idx<d) or Y_j
Poly frame_poly(const Poly& q, int idx, double a, double b) {
  const int d = q.dim();
  const Poly dt = gauss_deriv(q, 2 * d, a, b);
  if (idx < d)
    return gauss_deriv(q, idx, a, b) + Poly::variable(d, d + idx) * dt * cplx{2, 0};
  return gauss_deriv(q, idx, a, b) - Poly::variable(d, idx - d) * dt * cplx{2, 0};
}

}  // namespace

int PolyGaussianField::pack(int v1, int v2) const {
  const int n = 2 * dim() + 1;
  if (v1 > v2) std::swap(v1, v2);
  return v1 * n - v1 * (v1 - 1) / 2 + (v2 - v1);
}

PolyGaussianField::PolyGaussianField(Poly p, double a, double b)
    : p_(std::move(p)), a_(a), b_(b) {
  const int n = 2 * dim() + 1;
  d1_.reserve(n);
  for (int v = 0; v < n; ++v) d1_.push_back(gauss_deriv(p_, v, a_, b_));
  d2_.reserve(n * (n + 1) / 2);
  for (int v1 = 0; v1 < n; ++v1)
    for (int v2 = v1; v2 < n; ++v2)
      d2_.push_back(gauss_deriv(d1_[v1], v2, a_, b_));
}

double PolyGaussianField::gaussian(const HPoint& p) const {
  double r2 = 0;
  for (int j = 0; j < dim(); ++j) r2 += p.x[j] * p.x[j] + p.y[j] * p.y[j];
  return std::exp(-a_ * r2 - b_ * p.t * p.t);
}

cplx PolyGaussianField::value(const HPoint& p) const {
  return p_.eval(p) * gaussian(p);
}

cplx PolyGaussianField::partial(const HPoint& p, int var) const {
  return d1_.at(var).eval(p) * gaussian(p);
}

cplx PolyGaussianField::partial2(const HPoint& p, int v1, int v2) const {
  return d2_.at(pack(v1, v2)).eval(p) * gaussian(p);
}

PolyGaussianField PolyGaussianField::d_euclid(int var) const {
  return {gauss_deriv(p_, var, a_, b_), a_, b_};
}

PolyGaussianField PolyGaussianField::frame(int idx) const {
  if (idx < 0 || idx >= 2 * dim())
    throw std::invalid_argument("frame index out of range");
  return {frame_poly(p_, idx, a_, b_), a_, b_};
}

PolyGaussianField PolyGaussianField::vertical() const {
  return {gauss_deriv(p_, 2 * dim(), a_, b_), a_, b_};
}

PolyGaussianField PolyGaussianField::sublap() const {
  const int d = dim();
  Poly acc(d);
  for (int idx = 0; idx < 2 * d; ++idx)
    acc = acc + frame_poly(frame_poly(p_, idx, a_, b_), idx, a_, b_);
  return {acc * cplx{-1, 0}, a_, b_};
}

PolyGaussianField PolyGaussianField::scaled(cplx c) const {
  return {p_ * c, a_, b_};
}

PolyGaussianField PolyGaussianField::plus(const PolyGaussianField& o) const {
  if (o.a_ != a_ || o.b_ != b_)
    throw std::invalid_argument("plus: Gaussian envelopes differ");
  return {p_ + o.p_, a_, b_};
}

RadialField::RadialField(int d, double alpha, double a, double c, double b)
    : d_(d), alpha_(alpha), a_(a), c_(c), b_(b) {}

double RadialField::profile(double r, double t) const {
  return std::pow(r, alpha_) * std::exp(-a_ * r * r - c_ * r * r * r * r - b_ * t * t);
}

double RadialField::profile_r(double r, double t) const {
  const double u = alpha_ / r - 2 * a_ * r - 4 * c_ * r * r * r;
  return profile(r, t) * u;
}

double RadialField::profile_t(double r, double t) const {
  return -2 * b_ * t * profile(r, t);
}

double RadialField::profile_rr(double r, double t) const {
  const double u = alpha_ / r - 2 * a_ * r - 4 * c_ * r * r * r;
  const double du = -alpha_ / (r * r) - 2 * a_ - 12 * c_ * r * r;
  return profile(r, t) * (u * u + du);
}

double RadialField::profile_rt(double r, double t) const {
  return -2 * b_ * t * profile_r(r, t);
}

double RadialField::profile_tt(double r, double t) const {
  return (-2 * b_ + 4 * b_ * b_ * t * t) * profile(r, t);
}

cplx RadialField::value(const HPoint& p) const {
  return profile(zmod(p), p.t);
}

cplx RadialField::partial(const HPoint& p, int var) const {
  const double r = zmod(p);
  if (var == 2 * d_) return profile_t(r, p.t);
  const double coord = var < d_ ? p.x[var] : p.y[var - d_];
  return profile_r(r, p.t) * coord / r;
}

cplx RadialField::partial2(const HPoint& p, int v1, int v2) const {
  const double r = zmod(p), t = p.t;
  const int n = 2 * d_;
  if (v1 == n && v2 == n) return profile_tt(r, t);
  auto coord = [&](int v) { return v < d_ ? p.x[v] : p.y[v - d_]; };
  if (v1 == n || v2 == n) {
    const int v = v1 == n ? v2 : v1;
    return profile_rt(r, t) * coord(v) / r;
  }
  const double c1 = coord(v1), c2 = coord(v2);
  const double delta = v1 == v2 ? 1.0 : 0.0;
  return profile_rr(r, t) * c1 * c2 / (r * r) +
         profile_r(r, t) * (delta / r - c1 * c2 / (r * r * r));
}

cplx KoranyiGaugeField::value(const HPoint& p) const { return koranyi_norm(p); }

cplx KoranyiGaugeField::partial(const HPoint& p, int var) const {
  const double rho = koranyi_norm(p);
  const double rho3 = rho * rho * rho;
  if (var == 2 * d_) return p.t / (2 * rho3);
  const double r = zmod(p);
  const double s = r * r;
  const double coord = var < d_ ? p.x[var] : p.y[var - d_];
  return s * coord / rho3;
}

cplx KoranyiGaugeField::partial2(const HPoint& p, int v1, int v2) const {
  const double rho = koranyi_norm(p);
  const double rho3 = rho * rho * rho;
  const double rho7 = rho3 * rho3 * rho;
  const double r = zmod(p);
  const double s = r * r;
  const int n = 2 * d_;
  if (v1 == n && v2 == n)
    return 1 / (2 * rho3) - 3 * p.t * p.t / (4 * rho7);
  auto coord = [&](int v) { return v < d_ ? p.x[v] : p.y[v - d_]; };
  if (v1 == n || v2 == n) {
    const int v = v1 == n ? v2 : v1;
    return -3 * s * coord(v) * p.t / (2 * rho7);
  }
  const double c1 = coord(v1), c2 = coord(v2);
  const double delta = v1 == v2 ? 1.0 : 0.0;
  return (2 * c1 * c2 + s * delta) / rho3 - 3 * s * s * c1 * c2 / rho7;
}

GaugedField::GaugedField(std::shared_ptr<const Field> u, double phase)
    : u_(std::move(u)), phase_(phase) {
  if (!u_) throw std::invalid_argument("GaugedField: null field");
}

cplx GaugedField::value(const HPoint& p) const {
  const double r = zmod(p);
  return std::exp(cplx{0, phase_ * r}) * u_->value(p);
}

cplx GaugedField::partial(const HPoint& p, int var) const {
  const double r = zmod(p);
  const cplx ph = std::exp(cplx{0, phase_ * r});
  const int d = u_->dim();
  cplx sv = 0;  // d|z|/dvar
  if (var < 2 * d) sv = (var < d ? p.x[var] : p.y[var - d]) / r;
  return ph * (cplx{0, phase_} * sv * u_->value(p) + u_->partial(p, var));
}

cplx GaugedField::partial2(const HPoint& p, int v1, int v2) const {
  const double r = zmod(p);
  const cplx ph = std::exp(cplx{0, phase_ * r});
  const int d = u_->dim();
  auto coord = [&](int v) { return v < d ? p.x[v] : p.y[v - d]; };
  auto s1 = [&](int v) -> double { return v < 2 * d ? coord(v) / r : 0.0; };
  auto s2 = [&](int a, int b) -> double {
    if (a >= 2 * d || b >= 2 * d) return 0.0;
    const double delta = a == b ? 1.0 : 0.0;
    return delta / r - coord(a) * coord(b) / (r * r * r);
  };
  const cplx ip{0, phase_};
  const cplx u = u_->value(p);
  return ph * (ip * s2(v1, v2) * u + ip * ip * s1(v1) * s1(v2) * u +
               ip * s1(v1) * u_->partial(p, v2) + ip * s1(v2) * u_->partial(p, v1) +
               u_->partial2(p, v1, v2));
}

}  // namespace heis
