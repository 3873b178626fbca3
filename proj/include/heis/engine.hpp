#pragma once

// Batched evaluation of the quadratic base integrals behind every resolvent
// verdict and identity check.  A polynomial-times-Gaussian field is closed
// under the horizontal calculus, so u, its horizontal gradient and its
// sublaplacian share one Gaussian envelope and differ only in the polynomial
// factor.  On a cylinder rule each polynomial splits per slab (r_i, t_j) into
// a few angular-monomial coefficients; node values are then rank-one updates
// against precomputed angular rows, and all sphere contractions are dot
// products.  The simd kernels carry both loops.

#include <functional>
#include <stdexcept>

#include "heis/field.hpp"
#include "heis/quadrature.hpp"

namespace heis {

// Real potential sampled per slab; both entries take (r, t).  drrV is the
// horizontal radial derivative of r*V, the quantity whose positive part the
// repulsivity hypotheses budget.
struct SlabPotential {
  std::function<double(double, double)> value;
  std::function<double(double, double)> drrV;
};

// Naming: quantity _ weight, weights read as products (r2rhoinv4 = r^2/rho^4).
// Quantities: B = |u|^2, A = |grad_H u|^2, C = Im(conj(u) du/dr),
// E = Im(conj(u) tau.grad_H u) with tau = (y,-x)/r, D = Re(conj(u) du/dr),
// G = Re(conj(du/dr) g), g2 = |g|^2, Rg = Re(conj(u) g), Ig = Im(conj(u) g),
// Tw = Re(conj(Tu) tau.grad_H u), where g = -Lu - Vu is the
// spectral-parameter-free source and T the vertical derivative.  Tw is the
// twist the frame commutators [X_j, Y_j] = -4T inject into the radial
// virial identity; the commutative analogue has no such term.
struct BaseIntegrals {
  double B_1 = 0, B_r = 0, B_r2 = 0, B_rinv = 0, B_rinv2 = 0;
  double B_rhoinv2 = 0, B_r2rhoinv4 = 0, B_rho2 = 0, B_r2rhoinv2 = 0;
  double B_V = 0, B_rV = 0, B_drrV = 0;
  double A_1 = 0, A_r = 0;
  double C_1 = 0, C_r = 0, C_r3rhoinv3 = 0;
  double E_trrhoinv3 = 0;
  double D_r = 0;
  double G_r = 0;
  double Tw_r = 0;
  double g2_1 = 0, g2_r2 = 0, g2_rho2 = 0;
  double Rg_1 = 0, Rg_r = 0, Rg_r2 = 0, Rg_rho2 = 0;
  double Ig_1 = 0, Ig_r = 0, Ig_r2 = 0, Ig_rho2 = 0;
};

BaseIntegrals compute_base_integrals(const PolyGaussianField& u,
                                     const CylinderRule& rule,
                                     const SlabPotential* V = nullptr);

// Same integrals on a nested pair of rules; any scalar derived from the
// fine table gets its quadrature-error estimate from the coarse companion.
struct BasePair {
  BaseIntegrals fine;
  BaseIntegrals coarse;

  // |g(fine) - g(coarse)|, the error proxy for a derived combination
  double spread(const std::function<double(const BaseIntegrals&)>& g) const {
    return std::abs(g(fine) - g(coarse));
  }
};

BasePair compute_base_pair(const PolyGaussianField& u, const CylinderRule& fine,
                           const CylinderRule& coarse,
                           const SlabPotential* V = nullptr);

}  // namespace heis
