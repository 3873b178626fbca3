#include <cmath>
#include <memory>

#include "doctest.h"
#include "heis/calculus.hpp"
#include "heis/family.hpp"
#include "heis/field.hpp"
#include "heis/hardy.hpp"
#include "heis/quadrature.hpp"

using namespace heis;

namespace {

const CylinderRule& fine2() {
  static const CylinderRule r = make_cylinder_rule(2, light_params(2));
  return r;
}

const CylinderRule& coarse2() {
  static const CylinderRule r =
      make_cylinder_rule(2, coarse_params(light_params(2)));
  return r;
}

}  // namespace

TEST_CASE("hardy constants") {
  CHECK(gauge_hardy_constant(2) == doctest::Approx(0.25));
  CHECK(gauge_hardy_constant(3) == doctest::Approx(1.0 / 9));
  CHECK(horizontal_hardy_constant(2) == doctest::Approx(1.0));
  CHECK(horizontal_hardy_constant(5) == doctest::Approx(1.0 / 16));
  CHECK(weighted_radial_hardy_constant(2) == doctest::Approx(4.0 / 9));
  CHECK(weighted_radial_hardy_constant(1) == doctest::Approx(4.0));
}

TEST_CASE("family members satisfy all three inequalities") {
  const auto checks = check_family(2, 30, fine2(), coarse2());
  REQUIRE(checks.size() == 90);
  for (const auto& c : checks) {
    CAPTURE(c.member);
    CAPTURE(c.inequality);
    CHECK(c.pass);
    CHECK(c.quotient <= 1 + 3 * c.quad_err);
    CHECK(c.quotient > 0);
  }
}

TEST_CASE("divergence form generates the named inequalities at p = 2") {
  const auto fam = builtin_family(2, 8);
  const auto& u = *fam[6].field;

  // h = z/|z| has div_H h = (2d-1)/|z|; at p = 2 the divergence bound is
  // exactly the |z|-weighted inequality
  const auto dv = check_divergence_hardy(u, canonical_field(2, 1), 2.0,
                                         fine2(), coarse2());
  CHECK(dv.div_positive);
  CHECK(dv.pass);

  const auto rows = check_member(fam[6], fine2(), coarse2());
  double weighted_quot = 0;
  for (const auto& r : rows)
    if (r.inequality == "weighted-z") weighted_quot = r.quotient;
  REQUIRE(weighted_quot > 0);
  CHECK(dv.quotient == doctest::Approx(weighted_quot).epsilon(1e-6));
}

TEST_CASE("divergence form across generators and exponents") {
  const auto fam = builtin_family(2, 8);
  for (int k : {0, 1, 2}) {
    const VectorField h = canonical_field(2, k);
    for (double p : {1.5, 2.0, 3.0, 4.0}) {
      CAPTURE(k);
      CAPTURE(p);
      const auto r =
          check_divergence_hardy(*fam[0].field, h, p, fine2(), coarse2());
      CHECK(r.div_positive);
      CHECK(r.pass);
      CHECK(r.quotient <= 1 + 3 * r.quad_err);
    }
  }
}

TEST_CASE("negative divergence is flagged with a witness") {
  const int d = 2;
  const auto fam = builtin_family(d, 1);
  // h = -z has div_H h = -2d < 0 everywhere
  VectorField h;
  for (int j = 0; j < 2 * d; ++j)
    h.comp.push_back(std::make_shared<PolyGaussianField>(
        Poly::variable(d, j) * cplx(-1, 0), 0.0, 0.0));
  h.comp.push_back(std::make_shared<PolyGaussianField>(Poly(d), 0.0, 0.0));
  const auto r =
      check_divergence_hardy(*fam[0].field, h, 2.0, fine2(), coarse2());
  CHECK_FALSE(r.div_positive);
  CHECK_FALSE(r.pass);
  CHECK(r.first_violation.dim() == 2);
}

TEST_CASE("exponent domain is enforced") {
  const auto fam = builtin_family(2, 1);
  const VectorField h = canonical_field(2, 1);
  CHECK_THROWS_AS(
      check_divergence_hardy(*fam[0].field, h, 1.0, fine2(), coarse2()),
      std::domain_error);
  CHECK_THROWS_AS(
      check_divergence_hardy(*fam[0].field, h, 4.5, fine2(), coarse2()),
      std::domain_error);
}

TEST_CASE("radial quotient agrees with the generic route") {
  const int d = 2;
  const double alpha = -0.6, a = 1.0, c = 0.02, b = 0.25;
  const double reduced =
      horizontal_quotient_radial(d, alpha, a, c, b, fine2());

  const RadialField u(d, alpha, a, c, b);
  const double lhs = integrate(fine2(), [&](const HPoint& p) {
    return std::norm(u.value(p)) / (zmod(p) * zmod(p));
  });
  const double rhs = integrate(fine2(), [&](const HPoint& p) {
    return horizontal_gradient_sq(u, p);
  });
  const double generic = lhs / (horizontal_hardy_constant(d) * rhs);
  CHECK(reduced == doctest::Approx(generic).epsilon(1e-8));
}

TEST_CASE("saturation approaches the sharp constant") {
  const CylinderRule rule = make_cylinder_rule(2, sweep_params(2));
  const auto sweep = sharpness_sweep(2, rule);
  REQUIRE(!sweep.empty());
  double best = 0;
  for (const auto& s : sweep) {
    CHECK(s.quotient <= 1.0 + 1e-6);
    best = std::max(best, s.quotient);
  }
  CHECK(best >= 0.8);
  CHECK(best_sharpness(2, rule) == doctest::Approx(best));
}

TEST_CASE("dimension domain") {
  CHECK_THROWS_AS(horizontal_quotient_radial(1, -0.5, 1, 0, 1, fine2()),
                  std::domain_error);
}
