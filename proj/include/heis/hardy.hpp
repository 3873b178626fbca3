#pragma once

// Functional inequalities with explicit sharp constants: the gauge-weight
// and |z|-weight bounds, their |z|-weighted variant, and the divergence
// form that generates all three from a choice of vector field.  Checks
// report a normalized quotient (1 would saturate the constant) together
// with a two-rule quadrature error bound, so a pass certifies the
// inequality up to declared numerical error.

#include <string>
#include <vector>

#include "heis/calculus.hpp"
#include "heis/family.hpp"
#include "heis/quadrature.hpp"

namespace heis {

// int |u|^2 |z|^2 / rho^4 <= C int |grad_H u|^2, C = 1/d^2, d >= 1
double gauge_hardy_constant(int d);
// int |u|^2 / |z|^2 <= C int |grad_H u|^2, C = 1/(d-1)^2, d >= 2
double horizontal_hardy_constant(int d);
// int |u|^2 / |z| <= C int |z| |grad_H u|^2, C = (2/(2d-1))^2, d >= 1
double weighted_radial_hardy_constant(int d);

struct HardyCheck {
  std::string member;
  std::string inequality;
  double lhs = 0;       // weighted |u|^2 mass, fine rule
  double rhs = 0;       // C times weighted gradient mass, fine rule
  double quotient = 0;  // lhs / rhs
  double quad_err = 0;  // quotient spread between the two rules
  bool pass = false;    // quotient <= 1 + 3 * quad_err
};

// Named inequalities for one member: three rows for d >= 2, two for d = 1.
std::vector<HardyCheck> check_member(const FamilyMember& m,
                                     const CylinderRule& fine,
                                     const CylinderRule& coarse);

// The builtin family at the given size.
std::vector<HardyCheck> check_family(int d, int count,
                                     const CylinderRule& fine,
                                     const CylinderRule& coarse);

// int |u|^p div_H h <= p^p int |sigma h|^p (div_H h)^{1-p} |grad_H u|^p
// for real h with div_H h > 0 and p in (1, 4].
struct DivergenceHardy {
  double p = 2;
  double lhs = 0;
  double rhs = 0;        // includes the p^p factor
  double quotient = 0;   // lhs / rhs
  double quad_err = 0;
  bool div_positive = true;
  HPoint first_violation;  // dim 0 when div_positive
  bool pass = false;
};

DivergenceHardy check_divergence_hardy(const Field& u, const VectorField& h,
                                       double p, const CylinderRule& fine,
                                       const CylinderRule& coarse);

// Canonical generators (t-component zero): z/|z|^2 reproduces the
// |z|-weight bound at p = 2, z/|z| the |z|-weighted variant, z the
// unweighted Euclidean-looking one.
VectorField canonical_field(int d, int inverse_power);

// Saturation probe for the |z|-weight inequality: quotient of the profile
// r^alpha exp(-a r^2 - c r^4 - b t^2) against the sharp constant.  Tends
// to 1 as alpha -> -(d-1) with a flattening envelope.
double horizontal_quotient_radial(int d, double alpha, double a, double c,
                                  double b, const CylinderRule& rule);

struct SharpnessPoint {
  double alpha = 0;
  double a = 0;
  double quotient = 0;
};

std::vector<SharpnessPoint> sharpness_sweep(int d, const CylinderRule& rule);
double best_sharpness(int d, const CylinderRule& rule);

}  // namespace heis
