#pragma once

// Weighted resolvent estimates in manufactured-solution mode.  A family
// member u and an optional potential V define f := -Lu - Vu + lambda u, so
// u solves the shifted equation by construction and every stated estimate
// and multiplier identity is checkable by quadrature alone.  All the
// integrals involved reduce to the engine's base set, which is lambda-free:
// one fine plus one coarse engine pass per (member, V) serves the whole
// spectral sweep.
//
// The multiplier identities come from pairing the weak form with Phi*u for
// the closed family Phi in {1, |z|, sgn(l2)*2|z|} and with the commutator
// [L, |z|^2]u; their combination with the radial gauge u~ = e^{-i th |z|} u
// yields the keystone identity behind the in-cone gradient bound.  The
// commutator identity carries the frame-twist term Tw_r (see engine.hpp);
// dropping it, as a flat-space computation would, breaks the identity at
// O(1).

#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "heis/engine.hpp"
#include "heis/family.hpp"
#include "heis/quadrature.hpp"

namespace heis {

// a stated hypothesis (sign condition, budget bound) fails on the data
class hypothesis_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// value with a two-rule quadrature error estimate
struct Val {
  double v = 0;
  double err = 0;
};

class ResolventBase {
 public:
  ResolventBase(FamilyMember m, const CylinderRule& fine,
                const CylinderRule& coarse,
                std::shared_ptr<const SlabPotential> V = nullptr);

  const FamilyMember& member() const { return m_; }
  const BasePair& pair() const { return bp_; }
  bool has_potential() const { return V_ != nullptr; }
  const SlabPotential* potential() const { return V_.get(); }
  int dim() const { return d_; }

  // gauge phase th = sgn(l2) sqrt(|l1|) and the cone slope q = |l2|/sqrt(l1)
  // (q = 0 when l2 = 0, NaN-free only for l1 > 0 or l2 = 0)
  struct Norms {
    double theta = 0;
    double q = 0;
    Val grad_u;        // || grad_H u ||
    Val grad_gauged;   // || grad_H (e^{-i th |z|} u) ||
    Val u_over_z;      // || u / |z| ||
    Val u_over_rho;    // || u / rho ||
    Val zf;            // || |z| f ||
    Val rhof;          // || rho f ||
  };
  Norms norms(cplx lambda) const;

 private:
  FamilyMember m_;
  std::shared_ptr<const SlabPotential> V_;
  BasePair bp_;
  int d_;
};

struct Verdict {
  std::string inequality;  // see builders below for the id vocabulary
  double delta = 0;
  bool inside_cone = false;  // branch the verdict was evaluated on
  bool applicable = true;
  double lhs = 0;
  double rhs = 0;
  double constant = 0;   // the multiplier of the weighted f-norm
  double margin = 0;     // rhs - lhs
  double quad_err = 0;
  bool pass = true;      // lhs <= rhs + 3 * quad_err
};

// Free case (V absent).  Ids: "gradient-offcone" (|l2| >= delta |l1|),
// "gradient-cone-gauged" (|l2| <= delta |l1|), "inverse-z-uniform",
// "inverse-gauge-uniform", "pairing-chain".  Boundary lambdas evaluate
// both gradient branches.
std::vector<Verdict> verify_free(const ResolventBase& base, cplx lambda,
                                 double delta);

// Nonnegative potential with radial-growth budget b: the signed cone
// |l2| <= delta * l1 replaces the absolute one and l1 < 0 is off-cone.
// Ids reuse the free vocabulary; constants carry the b inflation.
std::vector<Verdict> verify_repulsive(const ResolventBase& base, cplx lambda,
                                      double delta, double b);

// Real sign-indefinite potential with budgets b1 (negative part) and b2
// (radial growth).
std::vector<Verdict> verify_two_budget(const ResolventBase& base, cplx lambda,
                                       double delta, double b1, double b2);

// The unimodular radial gauge u^{sign} = exp(sign * i th |z|) u with
// th = sgn(l2) sqrt|l1|.  For sign = -1 the horizontal energy satisfies
// pointwise |grad_H u^-|^2 = |grad_H u|^2 + th^2 |u|^2
// - 2 th Im(conj(u) d_r u), which is what the gauged verdict norm
// integrates.  l1 = 0 gives the identity transform.
GaugedField gauge_transform(std::shared_ptr<const Field> u, cplx lambda,
                            int sign);

// Exploratory Koranyi-weighted analogue of the in-cone gradient bound:
// reports the margin of || grad_H (e^{-i th rho} u) || against
// K_d(delta) * || rho f || without asserting a verdict.
struct GaugeProbe {
  double lhs = 0;
  double rhs = 0;
  double margin = 0;
};
GaugeProbe koranyi_gauge_probe(const ResolventBase& base, cplx lambda,
                               double delta);

struct IdentityCheck {
  std::string name;
  bool applicable = true;
  double lhs = 0;
  double rhs = 0;
  double residual = 0;  // |lhs - rhs|
  // total |.| mass of the constituent terms on both sides, floored by a
  // small multiple of the data mass; an identity whose sides cancel to
  // zero is then judged at quadrature accuracy instead of against zero
  double scale = 0;
  double rel = 0;  // residual / scale
  bool pass = true;
};

// The multiplier identity suite at one lambda: "real-multiplier-1",
// "real-multiplier-z", "imag-multiplier-1", "imag-multiplier-z",
// "radial-virial", "commutator-multiplier", "combined-multiplier"
// (l1 >= 0 only), "gauged-combination" (l1 > 0 or l2 = 0).
std::vector<IdentityCheck> multiplier_identities(const ResolventBase& base,
                                                 cplx lambda,
                                                 double tol = 1e-5);

// The keystone identity alone; throws std::domain_error at l1 = 0, l2 != 0
// (the gauge slope q degenerates) and for l1 < 0 (off-cone).
IdentityCheck gauged_combination(const ResolventBase& base, cplx lambda,
                                 double tol = 1e-5);

// max over 50 seeded points of |f(p) - (-Lu - Vu + lambda u)(p)| with the
// sublaplacian evaluated through generic partials rather than the symbolic
// closure; certifies the manufactured pair.
double consistency_residual(const ResolventBase& base, cplx lambda,
                            std::uint64_t seed = 2026);

// 12 spectral parameters exercising both cone branches for the given
// delta: real, imaginary, negative-real-part, boundary, and interior
// points.
std::vector<cplx> lambda_grid(double delta);

// ---------------------------------------------------------------------------
// Discrete mode (d = 2 only): a uniform grid on a box, Dirichlet in the
// horizontal coordinates and periodic in t.  The discrete sublaplacian
// composes skew central differences, so it is symmetric positive
// semidefinite and the shifted system is solved matrix-free.  Discrete
// verdicts are indicative (O(h^2) operator error), not certifying.

struct DiscreteParams {
  int n_xy = 12;        // points per horizontal axis, <= 16
  int n_t = 12;         // points on the periodic t axis, <= 16
  double box_xy = 5.0;  // horizontal half-width
  double box_t = 6.0;   // vertical half-width
  double tol = 1e-8;    // relative residual target
  int max_iter = 20000;
};

struct DiscreteReport {
  int n_xy = 0;
  int n_t = 0;
  double residual = 0;       // achieved relative residual
  int iterations = 0;
  double recovery_error = 0; // manufactured right-hand side round trip
  double sample_error = 0;   // grid solution vs the continuum member
  double offcone_margin = 0; // discrete gradient-offcone margin at lambda
  bool converged = false;
};

DiscreteReport discrete_solve(const FamilyMember& m, cplx lambda,
                              const DiscreteParams& p);

}  // namespace heis
