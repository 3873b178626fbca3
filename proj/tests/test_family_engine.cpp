#include <cmath>
#include <complex>
#include <memory>
#include <random>

#include "doctest.h"
#include "heis/calculus.hpp"
#include "heis/engine.hpp"
#include "heis/family.hpp"
#include "heis/geometry.hpp"
#include "heis/quadrature.hpp"

using namespace heis;

namespace {

HPoint random_point(int d, std::mt19937_64& rng, double spread = 1.5) {
  std::uniform_real_distribution<double> u(-spread, spread);
  HPoint p = HPoint::zero(d);
  for (int j = 0; j < d; ++j) {
    p.x[j] = u(rng);
    p.y[j] = u(rng);
  }
  p.t = u(rng);
  return p;
}

// small rule: engine-vs-direct comparisons only need both paths to sum the
// same nodes, not an accurate integral
CylinderRule tiny_rule(int d) {
  CylParams p;
  p.r_breaks = {0, 1, 3, 6};
  p.t_breaks = {0, 1, 3, 6};
  p.r_nodes = 3;
  p.t_nodes = 3;
  p.sphere_degree = 8;
  return make_cylinder_rule(d, p);
}

double rel(double a, double b) {
  return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-12});
}

}  // namespace

TEST_CASE("builtin family is deterministic, prefix-stable and anchored") {
  for (int d : {2, 3}) {
    CAPTURE(d);
    const auto fam = builtin_family(d, 24);
    REQUIRE(fam.size() == 24);
    CHECK(fam[0].name == "gauss-unit");
    CHECK(fam[0].field->decay_z() == doctest::Approx(1.0));
    CHECK(fam[0].field->decay_t() == doctest::Approx(1.0));

    const auto prefix = builtin_family(d, 8);
    std::mt19937_64 rng(11);
    const HPoint p = random_point(d, rng);
    for (int i = 0; i < 8; ++i) {
      CHECK(prefix[i].name == fam[i].name);
      CHECK(prefix[i].field->value(p) == fam[i].field->value(p));
    }
    for (std::size_t i = 1; i < fam.size(); ++i)
      CHECK(fam[i].name != fam[i - 1].name);
  }
}

TEST_CASE("family members satisfy the frame-derivative invariant") {
  const int d = 2;
  const auto fam = builtin_family(d, 12);
  std::mt19937_64 rng(17);
  for (const auto& m : fam) {
    CAPTURE(m.name);
    for (int trial = 0; trial < 4; ++trial) {
      const HPoint p = random_point(d, rng);
      for (int j = 0; j < 2 * d; ++j) {
        const cplx exact = apply_field(*m.field, j, p);
        const cplx fd = apply_field_fd(*m.field, j, p, 1e-4);
        CHECK(std::abs(exact - fd) <= 1e-6 * (1 + std::abs(exact)));
      }
    }
  }
}

TEST_CASE("2 Re(conj(u) X u) equals the frame derivative of |u|^2") {
  const int d = 2;
  const auto fam = builtin_family(d, 8);
  std::mt19937_64 rng(23);
  for (const auto& m : fam) {
    CAPTURE(m.name);
    const HPoint p = random_point(d, rng);
    const double h = 1e-5;
    for (int j = 0; j < d; ++j) {
      // flow of X_j: x_j += s, t += 2 y_j s
      HPoint a = p, b = p;
      a.x[j] += h;
      a.t += 2 * p.y[j] * h;
      b.x[j] -= h;
      b.t -= 2 * p.y[j] * h;
      const double fd =
          (std::norm(m.field->value(a)) - std::norm(m.field->value(b))) /
          (2 * h);
      const double alg =
          2 * std::real(std::conj(m.field->value(p)) * apply_field(*m.field, j, p));
      CHECK(std::fabs(fd - alg) <= 1e-6 * (1 + std::fabs(alg)));
    }
  }
}

TEST_CASE("base integrals match direct quadrature of the defining integrands") {
  const int d = 2;
  const auto fam = builtin_family(d, 8);
  const CylinderRule rule = tiny_rule(d);
  const auto& u = *fam[6].field;  // complex member with angular content
  const PolyGaussianField g = u.sublap().scaled(-1.0);  // g = -L u

  SlabPotential V;
  V.value = [](double r, double t) { return 0.2 * std::exp(-r * r - 0.5 * t * t); };
  V.drrV = [](double r, double t) {
    return 0.2 * std::exp(-r * r - 0.5 * t * t) * (1 - 2 * r * r);
  };
  const BaseIntegrals bi = compute_base_integrals(u, rule, &V);
  // with V present the engine works against g = -L u - V u
  auto gv = [&](const HPoint& p) {
    return g.value(p) - V.value(zmod(p), p.t) * u.value(p);
  };

  auto direct = [&](const std::function<double(const HPoint&)>& F) {
    return integrate(rule, F);
  };

  CHECK(rel(bi.B_1, direct([&](const HPoint& p) {
          return std::norm(u.value(p));
        })) < 1e-9);
  CHECK(rel(bi.B_r2, direct([&](const HPoint& p) {
          return zmod(p) * zmod(p) * std::norm(u.value(p));
        })) < 1e-9);
  CHECK(rel(bi.B_rinv2, direct([&](const HPoint& p) {
          return std::norm(u.value(p)) / (zmod(p) * zmod(p));
        })) < 1e-9);
  CHECK(rel(bi.B_rhoinv2, direct([&](const HPoint& p) {
          const double rho = koranyi_norm(p);
          return std::norm(u.value(p)) / (rho * rho);
        })) < 1e-9);
  CHECK(rel(bi.A_1, direct([&](const HPoint& p) {
          return horizontal_gradient_sq(u, p);
        })) < 1e-9);
  CHECK(rel(bi.C_1, direct([&](const HPoint& p) {
          return std::imag(std::conj(u.value(p)) * radial_derivative(u, p));
        })) < 1e-9);
  CHECK(rel(bi.Tw_r, direct([&](const HPoint& p) {
          // tau . grad_H u = (1/r) sum_j (y_j X_j u - x_j Y_j u)
          const double r = zmod(p);
          cplx tang = 0;
          for (int j = 0; j < d; ++j)
            tang += p.y[j] * apply_field(u, j, p) -
                    p.x[j] * apply_field(u, d + j, p);
          tang /= r;
          return r * std::real(std::conj(apply_field_t(u, p)) * tang);
        })) < 1e-9);
  CHECK(rel(bi.Rg_1, direct([&](const HPoint& p) {
          return std::real(std::conj(u.value(p)) * gv(p));
        })) < 1e-9);
  CHECK(rel(bi.Ig_r, direct([&](const HPoint& p) {
          return zmod(p) * std::imag(std::conj(u.value(p)) * gv(p));
        })) < 1e-9);
  CHECK(rel(bi.g2_r2, direct([&](const HPoint& p) {
          return zmod(p) * zmod(p) * std::norm(gv(p));
        })) < 1e-9);
  CHECK(rel(bi.G_r, direct([&](const HPoint& p) {
          return zmod(p) *
                 std::real(gv(p) * std::conj(radial_derivative(u, p)));
        })) < 1e-9);
  CHECK(rel(bi.B_V, direct([&](const HPoint& p) {
          return V.value(zmod(p), p.t) * std::norm(u.value(p));
        })) < 1e-9);
  CHECK(rel(bi.B_drrV, direct([&](const HPoint& p) {
          return V.drrV(zmod(p), p.t) * std::norm(u.value(p));
        })) < 1e-9);
}

TEST_CASE("integration by parts ties the gradient pairing to the sublaplacian") {
  const int d = 2;
  const auto fam = builtin_family(d, 8);
  const CylinderRule rule = make_cylinder_rule(d, light_params(d));
  const auto& f = *fam[5].field;
  const auto& g = *fam[6].field;
  const PolyGaussianField lf = f.sublap();

  auto pairing = [&](bool imag_part) {
    return integrate(rule, [&](const HPoint& p) {
      const auto gf = horizontal_gradient(f, p);
      const auto gg = horizontal_gradient(g, p);
      cplx s = 0;
      for (int j = 0; j < 2 * d; ++j) s += gf[j] * std::conj(gg[j]);
      return imag_part ? std::imag(s) : std::real(s);
    });
  };
  auto weak = [&](bool imag_part) {
    return integrate(rule, [&](const HPoint& p) {
      const cplx s = lf.value(p) * std::conj(g.value(p));
      return imag_part ? std::imag(s) : std::real(s);
    });
  };
  const cplx lhs(pairing(false), pairing(true));
  const cplx rhs(weak(false), weak(true));
  CHECK(std::abs(lhs - rhs) <= 1e-4 * std::abs(lhs));
}

TEST_CASE("hardy integrand is finite and stable under refinement") {
  const int d = 2;
  const auto fam = builtin_family(d, 12);
  const CylParams fp = light_params(d);
  const CylinderRule fine = make_cylinder_rule(d, fp);
  const CylinderRule coarse = make_cylinder_rule(d, coarse_params(fp));
  for (const auto& m : fam) {
    CAPTURE(m.name);
    const BasePair bp = compute_base_pair(*m.field, fine, coarse);
    REQUIRE(std::isfinite(bp.fine.B_rinv2));
    CHECK(bp.fine.B_rinv2 > 0);
    CHECK(bp.spread([](const BaseIntegrals& b) { return b.B_rinv2; }) <=
          2e-2 * bp.fine.B_rinv2);
  }
}
