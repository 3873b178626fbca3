#include <cmath>
#include <random>

#include "doctest.h"
#include "heis/geometry.hpp"

using namespace heis;

namespace {

HPoint random_point(int d, std::mt19937_64& rng, double spread = 2.0) {
  std::uniform_real_distribution<double> u(-spread, spread);
  HPoint p = HPoint::zero(d);
  for (int j = 0; j < d; ++j) {
    p.x[j] = u(rng);
    p.y[j] = u(rng);
  }
  p.t = u(rng);
  return p;
}

double dist(const HPoint& a, const HPoint& b) {
  double s = std::abs(a.t - b.t);
  for (int j = 0; j < a.dim(); ++j)
    s += std::abs(a.x[j] - b.x[j]) + std::abs(a.y[j] - b.y[j]);
  return s;
}

}  // namespace

TEST_CASE("group law is associative with two-sided identity and inverse") {
  std::mt19937_64 rng(7);
  for (int d : {1, 2, 3}) {
    for (int rep = 0; rep < 50; ++rep) {
      const HPoint p = random_point(d, rng), q = random_point(d, rng),
                   r = random_point(d, rng);
      const HPoint lhs = group_multiply(group_multiply(p, q), r);
      const HPoint rhs = group_multiply(p, group_multiply(q, r));
      CHECK(dist(lhs, rhs) < 1e-12);
      const HPoint e = HPoint::zero(d);
      CHECK(dist(group_multiply(p, e), p) == 0);
      CHECK(dist(group_multiply(e, p), p) == 0);
      CHECK(dist(group_multiply(p, group_inverse(p)), e) < 1e-13);
    }
  }
}

TEST_CASE("group commutator of unit horizontal steps is purely vertical") {
  // exp(sX_j) exp(sY_j) exp(-sX_j) exp(-sY_j) = (0, 0, -4 s^2)
  const int d = 2, j = 1;
  const double s = 0.35;
  HPoint a = HPoint::zero(d), b = HPoint::zero(d);
  a.x[j] = s;
  b.y[j] = s;
  HPoint c = group_multiply(group_multiply(a, b),
                            group_multiply(group_inverse(a), group_inverse(b)));
  CHECK(std::abs(c.x[0]) + std::abs(c.x[1]) + std::abs(c.y[0]) + std::abs(c.y[1]) < 1e-15);
  CHECK(c.t == doctest::Approx(-4 * s * s).epsilon(1e-14));
}

TEST_CASE("koranyi norm is homogeneous under the parabolic dilations") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 30; ++rep) {
    const HPoint p = random_point(3, rng);
    for (double lam : {0.5, 2.0, 7.3}) {
      HPoint q = p;
      for (auto& v : q.x) v *= lam;
      for (auto& v : q.y) v *= lam;
      q.t *= lam * lam;
      CHECK(koranyi_norm(q) == doctest::Approx(lam * koranyi_norm(p)).epsilon(1e-13));
    }
  }
}

TEST_CASE("sigma_t_sigma_apply is the composition of sigma with its adjoint") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1, 1);
  const int d = 3;
  for (int rep = 0; rep < 20; ++rep) {
    const HPoint p = random_point(d, rng);
    std::vector<double> h(2 * d + 1), g(2 * d + 1);
    for (auto& v : h) v = u(rng);
    for (auto& v : g) v = u(rng);
    // <sigma^T sigma h, g> = <sigma h, sigma g>
    const auto sth = sigma_t_sigma_apply(p, h);
    const auto sh = sigma_apply(p, h);
    const auto sg = sigma_apply(p, g);
    double lhs = 0, rhs = 0;
    for (int i = 0; i < 2 * d + 1; ++i) lhs += sth[i] * g[i];
    for (int i = 0; i < 2 * d; ++i) rhs += sh[i] * sg[i];
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("koranyi closed forms are mutually consistent") {
  std::mt19937_64 rng(31);
  for (int d : {1, 2, 4}) {
    for (int rep = 0; rep < 40; ++rep) {
      const HPoint p = random_point(d, rng);
      const auto g = koranyi::horizontal_gradient(p);
      double n2 = 0;
      for (double v : g) n2 += v * v;
      CHECK(std::sqrt(n2) == doctest::Approx(koranyi::gradient_norm(p)).epsilon(1e-12));
      CHECK(koranyi::gradient_norm(p) <= 1.0 + 1e-14);
      // omega . grad_H rho recovers the radial derivative
      const double r = zmod(p);
      double rad = 0;
      for (int j = 0; j < d; ++j) rad += (p.x[j] * g[j] + p.y[j] * g[d + j]) / r;
      CHECK(rad == doctest::Approx(koranyi::radial_derivative(p)).epsilon(1e-12));
    }
  }
}
