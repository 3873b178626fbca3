#include <cmath>
#include <numbers>

#include "doctest.h"
#include "heis/numerics.hpp"

using namespace heis::num;

namespace {

double legendre_moment(int k) { return k % 2 ? 0.0 : 2.0 / (k + 1); }

// integral of (1-u^2)^p u^k over [-1,1]
double gegenbauer_moment(int k, double p) {
  if (k % 2) return 0.0;
  const double h = (k + 1) / 2.0;
  return std::tgamma(h) * std::tgamma(p + 1) / std::tgamma(h + p + 1);
}

}  // namespace

TEST_CASE("gauss_legendre is exact through degree 2n-1") {
  for (int n : {1, 2, 3, 6, 11, 24}) {
    auto r = gauss_legendre(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0;
      for (int i = 0; i < n; ++i) s += r.w[i] * std::pow(r.x[i], k);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(s == doctest::Approx(legendre_moment(k)).epsilon(1e-13));
    }
  }
}

TEST_CASE("gauss_legendre nodes are symmetric and weights positive") {
  auto r = gauss_legendre(9);
  for (int i = 0; i < 9; ++i) {
    CHECK(r.w[i] > 0);
    CHECK(r.x[i] == doctest::Approx(-r.x[8 - i]).epsilon(1e-14));
  }
}

TEST_CASE("gauss_jacobi matches Chebyshev second-kind closed form") {
  // weight (1-u^2)^{1/2}: nodes cos(j pi/(n+1)), weights pi/(n+1) sin^2
  const int n = 7;
  auto r = gauss_jacobi(n, 0.5, 0.5);
  for (int i = 0; i < n; ++i) {
    const double theta = (n - i) * std::numbers::pi / (n + 1);
    CHECK(r.x[i] == doctest::Approx(std::cos(theta)).epsilon(1e-12));
    const double w = std::numbers::pi / (n + 1) * std::sin(theta) * std::sin(theta);
    CHECK(r.w[i] == doctest::Approx(w).epsilon(1e-12));
  }
}

TEST_CASE("gauss_jacobi is exact for half-integer and integer weights") {
  for (double p : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0}) {
    for (int n : {2, 4, 6, 9}) {
      auto r = gauss_jacobi(n, p, p);
      for (int k = 0; k <= 2 * n - 1; ++k) {
        double s = 0;
        for (int i = 0; i < n; ++i) s += r.w[i] * std::pow(r.x[i], k);
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(s == doctest::Approx(gegenbauer_moment(k, p)).epsilon(5e-13));
      }
    }
  }
}

TEST_CASE("bisect finds a bracketed root") {
  auto r = bisect([](double x) { return std::cos(x); }, 1.0, 2.0);
  CHECK(r.converged);
  CHECK(r.x == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
  CHECK_THROWS(bisect([](double x) { return x * x + 1; }, -1.0, 1.0));
}

TEST_CASE("expand_bracket walks right until the sign flips") {
  auto br = expand_bracket([](double x) { return x - 100.0; }, 0.0, 1.0);
  REQUIRE(br.has_value());
  CHECK(br->first < 100.0);
  CHECK(br->second > 100.0);
}

TEST_CASE("golden_min locates a quadratic minimum") {
  auto m = golden_min([](double x) { return (x - 1.234) * (x - 1.234) + 5; },
                      0.0, 3.0);
  // argmin accuracy is sqrt(eps)-limited once f differences fall below
  // rounding; the value itself converges quadratically faster
  CHECK(m.x == doctest::Approx(1.234).epsilon(1e-6));
  CHECK(m.fx == doctest::Approx(5.0));
}
