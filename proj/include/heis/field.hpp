#pragma once

// Scalar fields on H^d exposing exact first and second Euclidean partials.
// Generic differential operators (frame derivatives, sublaplacian,
// horizontal divergence) consume this interface; the workhorse integrands
// additionally use the symbolic closure of PolyGaussianField.

#include <complex>
#include <memory>
#include <vector>

#include "heis/geometry.hpp"
#include "heis/poly.hpp"

namespace heis {

class Field {
 public:
  virtual ~Field() = default;
  virtual int dim() const = 0;
  virtual cplx value(const HPoint& p) const = 0;
  // var in [0, 2d]: x_1..x_d, y_1..y_d, t
  virtual cplx partial(const HPoint& p, int var) const = 0;
  virtual cplx partial2(const HPoint& p, int v1, int v2) const = 0;
};

// P(x,y,t) * exp(-a|z|^2 - b t^2).  The class is closed under Euclidean and
// frame derivatives, so every operator below is exact symbolic algebra.
// First and second derivative polynomials are built eagerly; pointwise
// evaluation is then a sparse-polynomial sum.
class PolyGaussianField final : public Field {
 public:
  PolyGaussianField(Poly p, double a, double b);

  int dim() const override { return p_.dim(); }
  cplx value(const HPoint& p) const override;
  cplx partial(const HPoint& p, int var) const override;
  cplx partial2(const HPoint& p, int v1, int v2) const override;

  const Poly& poly() const { return p_; }
  double decay_z() const { return a_; }
  double decay_t() const { return b_; }

  PolyGaussianField d_euclid(int var) const;
  PolyGaussianField frame(int idx) const;  // 0..d-1: X_j, d..2d-1: Y_j
  PolyGaussianField vertical() const;      // T = d/dt
  PolyGaussianField sublap() const;        // -sum_j (X_j^2 + Y_j^2)
  PolyGaussianField scaled(cplx c) const;
  PolyGaussianField plus(const PolyGaussianField& o) const;

  double gaussian(const HPoint& p) const;

 private:
  Poly p_;
  double a_, b_;
  std::vector<Poly> d1_;
  std::vector<Poly> d2_;  // packed upper triangle, index v1<=v2
  int pack(int v1, int v2) const;
};

// A(r,t) = r^alpha exp(-a r^2 - c r^4 - b t^2), r = |z|.  Defined off the
// axis r = 0 when alpha < 0; callers keep quadrature nodes away from it.
class RadialField final : public Field {
 public:
  RadialField(int d, double alpha, double a, double c, double b);

  int dim() const override { return d_; }
  cplx value(const HPoint& p) const override;
  cplx partial(const HPoint& p, int var) const override;
  cplx partial2(const HPoint& p, int v1, int v2) const override;

  double profile(double r, double t) const;
  double profile_r(double r, double t) const;
  double profile_t(double r, double t) const;
  double profile_rr(double r, double t) const;
  double profile_rt(double r, double t) const;
  double profile_tt(double r, double t) const;

 private:
  int d_;
  double alpha_, a_, c_, b_;
};

// The gauge rho = (|z|^4 + t^2)^{1/4} with hand-derived exact partials.
class KoranyiGaugeField final : public Field {
 public:
  explicit KoranyiGaugeField(int d) : d_(d) {}
  int dim() const override { return d_; }
  cplx value(const HPoint& p) const override;
  cplx partial(const HPoint& p, int var) const override;
  cplx partial2(const HPoint& p, int v1, int v2) const override;

 private:
  int d_;
};

// exp(i phase |z|) u, the oscillatory gauge used to trade the spectral
// parameter for a radial phase.
class GaugedField final : public Field {
 public:
  GaugedField(std::shared_ptr<const Field> u, double phase);
  int dim() const override { return u_->dim(); }
  cplx value(const HPoint& p) const override;
  cplx partial(const HPoint& p, int var) const override;
  cplx partial2(const HPoint& p, int v1, int v2) const override;

 private:
  std::shared_ptr<const Field> u_;
  double phase_;
};

}  // namespace heis
