#include "heis/hardy.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "heis/engine.hpp"

namespace heis {

double gauge_hardy_constant(int d) {
  if (d < 1) throw std::domain_error("gauge_hardy_constant: d >= 1");
  return 1.0 / (static_cast<double>(d) * d);
}

double horizontal_hardy_constant(int d) {
  if (d < 2) throw std::domain_error("horizontal_hardy_constant: d >= 2");
  const double m = d - 1.0;
  return 1.0 / (m * m);
}

double weighted_radial_hardy_constant(int d) {
  if (d < 1) throw std::domain_error("weighted_radial_hardy_constant: d >= 1");
  const double m = 2.0 / (2.0 * d - 1.0);
  return m * m;
}

namespace {

struct QuotientParts {
  double lhs, rhs;
};

QuotientParts parts(const BaseIntegrals& b, const std::string& which, int d) {
  if (which == "gauge-weight") return {b.B_r2rhoinv4, gauge_hardy_constant(d) * b.A_1};
  if (which == "z-weight")
    return {b.B_rinv2, horizontal_hardy_constant(d) * b.A_1};
  return {b.B_rinv, weighted_radial_hardy_constant(d) * b.A_r};
}

HardyCheck make_check(const std::string& member, const std::string& which,
                      const BaseIntegrals& fine, const BaseIntegrals& coarse,
                      int d) {
  HardyCheck c;
  c.member = member;
  c.inequality = which;
  const auto f = parts(fine, which, d);
  const auto g = parts(coarse, which, d);
  c.lhs = f.lhs;
  c.rhs = f.rhs;
  c.quotient = f.lhs / f.rhs;
  c.quad_err = std::fabs(f.lhs / f.rhs - g.lhs / g.rhs);
  c.pass = c.quotient <= 1.0 + 3.0 * c.quad_err;
  return c;
}

}  // namespace

std::vector<HardyCheck> check_member(const FamilyMember& m,
                                     const CylinderRule& fine,
                                     const CylinderRule& coarse) {
  const int d = m.field->dim();
  const BaseIntegrals bf = compute_base_integrals(*m.field, fine);
  const BaseIntegrals bc = compute_base_integrals(*m.field, coarse);
  std::vector<HardyCheck> out;
  out.push_back(make_check(m.name, "gauge-weight", bf, bc, d));
  if (d >= 2) out.push_back(make_check(m.name, "z-weight", bf, bc, d));
  out.push_back(make_check(m.name, "weighted-z", bf, bc, d));
  return out;
}

std::vector<HardyCheck> check_family(int d, int count,
                                     const CylinderRule& fine,
                                     const CylinderRule& coarse) {
  std::vector<HardyCheck> out;
  for (const FamilyMember& m : builtin_family(d, count)) {
    auto rows = check_member(m, fine, coarse);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

namespace {

// coord * |z|^-k for coord one of x_j, y_j, or the constant 0.
class CoordOverPower final : public Field {
 public:
  CoordOverPower(int d, int var, int k) : d_(d), var_(var), k_(k) {}

  int dim() const override { return d_; }

  cplx value(const HPoint& p) const override {
    if (var_ < 0) return 0.0;
    return coord(p, var_) * std::pow(zmod(p), -k_);
  }

  cplx partial(const HPoint& p, int var) const override {
    if (var_ < 0) return 0.0;
    const double r = zmod(p);
    const double rk = std::pow(r, -k_);
    double s = (var == var_) ? rk : 0.0;
    if (k_ != 0 && var < 2 * d_)
      s += coord(p, var_) * (-k_) * std::pow(r, -k_ - 2) * coord(p, var);
    return s;
  }

  cplx partial2(const HPoint& p, int v1, int v2) const override {
    if (var_ < 0) return 0.0;
    const double r = zmod(p);
    auto dpow = [&](int v) {
      return (v < 2 * d_) ? -k_ * std::pow(r, -k_ - 2) * coord(p, v) : 0.0;
    };
    double s = 0;
    if (v1 == var_) s += dpow(v2);
    if (v2 == var_) s += dpow(v1);
    if (k_ != 0 && v1 < 2 * d_ && v2 < 2 * d_) {
      double dd = (v1 == v2) ? std::pow(r, -k_ - 2) : 0.0;
      dd += coord(p, v1) * (-k_ - 2) * std::pow(r, -k_ - 4) * coord(p, v2);
      s += coord(p, var_) * (-k_) * dd;
    }
    return s;
  }

 private:
  static double coord(const HPoint& p, int v) {
    const int d = p.dim();
    return v < d ? p.x[v] : p.y[v - d];
  }

  int d_, var_, k_;
};

}  // namespace

VectorField canonical_field(int d, int inverse_power) {
  if (inverse_power < 0 || inverse_power > 2)
    throw std::invalid_argument("canonical_field: inverse power in {0,1,2}");
  VectorField h;
  h.comp.reserve(2 * d + 1);
  for (int v = 0; v < 2 * d; ++v)
    h.comp.push_back(std::make_shared<CoordOverPower>(d, v, inverse_power));
  h.comp.push_back(std::make_shared<CoordOverPower>(d, -1, 0));
  return h;
}

namespace {

DivergenceHardy divergence_pass(const Field& u, const VectorField& h, double p,
                                const CylinderRule& rule, DivergenceHardy& acc,
                                bool record) {
  const double lhs = integrate(rule, [&](const HPoint& pt) {
    const cplx dv = div_horizontal(h, pt);
    const double div_re = std::real(dv);
    if (record &&
        (div_re <= 0 ||
         std::fabs(std::imag(dv)) > 1e-12 * (1 + std::fabs(div_re)))) {
      if (acc.div_positive) acc.first_violation = pt;
      acc.div_positive = false;
    }
    return std::pow(std::abs(u.value(pt)), p) * div_re;
  });
  const double rhs = integrate(rule, [&](const HPoint& pt) {
    const double div_re = std::real(div_horizontal(h, pt));
    const double sig = std::sqrt(sigma_length_sq(h, pt));
    const double grad = std::sqrt(horizontal_gradient_sq(u, pt));
    return std::pow(sig, p) * std::pow(div_re, 1.0 - p) * std::pow(grad, p);
  });
  DivergenceHardy out;
  out.p = p;
  out.lhs = lhs;
  out.rhs = std::pow(p, p) * rhs;
  out.quotient = out.lhs / out.rhs;
  return out;
}

}  // namespace

DivergenceHardy check_divergence_hardy(const Field& u, const VectorField& h,
                                       double p, const CylinderRule& fine,
                                       const CylinderRule& coarse) {
  if (!(p > 1.0) || !(p <= 4.0))
    throw std::domain_error("check_divergence_hardy: p in (1, 4]");
  DivergenceHardy acc;
  DivergenceHardy f = divergence_pass(u, h, p, fine, acc, true);
  DivergenceHardy c = divergence_pass(u, h, p, coarse, acc, false);
  f.div_positive = acc.div_positive;
  f.first_violation = acc.first_violation;
  f.quad_err = std::fabs(f.quotient - c.quotient);
  f.pass = f.div_positive && f.quotient <= 1.0 + 3.0 * f.quad_err;
  return f;
}

double horizontal_quotient_radial(int d, double alpha, double a, double c,
                                  double b, const CylinderRule& rule) {
  if (d < 2) throw std::domain_error("horizontal_quotient_radial: d >= 2");
  RadialField u(d, alpha, a, c, b);
  // z-radial profile: |grad_H u|^2 = u_r^2 + 4 r^2 u_t^2, so the quotient
  // reduces to a planar (r, t) integral against the cylinder measure.
  const double area = [&] {
    double s = 0;
    for (double w : rule.sphere.w) s += w;
    return s;
  }();
  double lhs = 0, rhs = 0;
  for (std::size_t i = 0; i < rule.radial.x.size(); ++i) {
    const double r = rule.radial.x[i];
    const double wr = rule.radial_measure[i] * area;
    for (std::size_t j = 0; j < rule.vertical.x.size(); ++j) {
      const double t = rule.vertical.x[j];
      const double w = wr * rule.vertical.w[j];
      const double v = u.profile(r, t);
      const double vr = u.profile_r(r, t);
      const double vt = u.profile_t(r, t);
      lhs += w * v * v / (r * r);
      rhs += w * (vr * vr + 4 * r * r * vt * vt);
    }
  }
  return lhs / (horizontal_hardy_constant(d) * rhs);
}

std::vector<SharpnessPoint> sharpness_sweep(int d, const CylinderRule& rule) {
  std::vector<SharpnessPoint> out;
  for (double alpha : {-0.5, -0.7, -0.85, -0.95})
    for (double a : {1.0, 0.5, 0.3}) {
      SharpnessPoint s;
      s.alpha = alpha;
      s.a = a;
      s.quotient = horizontal_quotient_radial(d, alpha, a, 0.02, 0.25 * a, rule);
      out.push_back(s);
    }
  return out;
}

double best_sharpness(int d, const CylinderRule& rule) {
  double best = 0;
  for (const SharpnessPoint& s : sharpness_sweep(d, rule))
    best = std::max(best, s.quotient);
  return best;
}

}  // namespace heis
