#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "heis/constants.hpp"

using namespace heis::constants;

namespace {

// published five-decimal values for the crossing opening and the uniform
// constant, d = 2..6
struct Pinned {
  int d;
  double ds, kap;
};
constexpr Pinned kPinned[] = {
    {2, 2.37340e-1, 5.21337},    {3, 1.21514e-1, 2.30737},
    {4, 8.17278e-2, 1.47064},    {5, 6.15799e-2, 1.07744},
    {6, 4.94043e-2, 8.49645e-1},
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("crossing opening and uniform constant match the published table") {
  for (const auto& row : kPinned) {
    CHECK(rel(delta_star(row.d), row.ds) < 1e-5);
    CHECK(rel(kappa_d(row.d), row.kap) < 1e-5);
  }
}

TEST_CASE("crossing opening satisfies its defining equation") {
  for (int d = 2; d <= 12; ++d) {
    const double ds = delta_star(d);
    const double resid =
        ds * ds / std::sqrt(1 + ds) + 4 * ds - 1.0 / (d - 1);
    CHECK(std::abs(resid) < 1e-12);
    if (d > 2) CHECK(ds < delta_star(d - 1));
  }
}

TEST_CASE("gradient-bound routes agree to 1e-9") {
  const double deltas[] = {0.01, 0.02, 0.05, 0.08, 0.1,  0.15, 0.2,
                           0.3,  0.4,  0.5,  0.7,  0.9,  1.0,  1.3,
                           1.7,  2.0,  2.5,  3.0,  4.0,  5.0};
  for (int d = 2; d <= 12; ++d)
    for (double del : deltas) {
      const double a = K_d(d, del);
      CAPTURE(d);
      CAPTURE(del);
      CHECK(rel(K_d_minimization(d, del), a) < 1e-9);
      CHECK(rel(K_d_implicit(d, del), a) < 1e-9);
    }
}

TEST_CASE("gradient bound argmin is stationary") {
  for (double del : {0.05, 0.3, 1.0}) {
    for (double b : {0.0, 0.4}) {
      const int d = 2;
      const double g = gamma_delta(d, del, b);
      const double h = 1e-5 * g;
      const double slope = (K_db_expr(d, del, b, g + h) -
                            K_db_expr(d, del, b, g - h)) /
                           (2 * h);
      CHECK(std::abs(slope) * g < 1e-6 * K_db(d, del, b));
    }
  }
}

TEST_CASE("uniform-constant routes agree to 1e-9") {
  for (int d = 2; d <= 12; ++d) {
    const double a = kappa_d(d);
    CAPTURE(d);
    CHECK(rel(kappa_d_minimax(d), a) < 1e-9);
    CHECK(rel(kappa_d_implicit(d), a) < 1e-9);
    // at the crossing both branches meet the constant
    CHECK(rel(K_d(d, delta_star(d)) / (d - 1), a) < 1e-11);
  }
}

TEST_CASE("uniform constant dominates its naive lower bound") {
  for (int d = 2; d <= 50; ++d) {
    CAPTURE(d);
    CHECK(kappa_d(d) > kappa_lower_bound(d));
  }
}

TEST_CASE("threshold identity holds at the crossing") {
  for (int d = 2; d <= 8; ++d) {
    CAPTURE(d);
    CHECK(std::abs(threshold_identity_residual(d)) < 1e-9);
  }
}

TEST_CASE("perturbed gradient bound behaves in the strength parameter") {
  const int d = 2;
  const double del = 0.1;
  CHECK(rel(K_db(d, del, 0.0), K_d(d, del)) < 1e-13);
  CHECK(rel(K_db_minimization(d, del, 0.3), K_db(d, del, 0.3)) < 1e-9);
  CHECK(K_db(d, del, 0.4) > K_db(d, del, 0.2));
  CHECK(K_db(d, del, 0.999) > 100 * K_db(d, del, 0.0));
  CHECK_THROWS_AS((void)K_db(d, del, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)K_db(d, del, -0.1), std::domain_error);
}

TEST_CASE("positive-potential uniform constant degenerates to the free one") {
  for (int d : {2, 3, 5}) {
    const auto c = kappa_db(d, 0.0);
    CAPTURE(d);
    CHECK(rel(c.value, kappa_d(d)) < 1e-8);
    CHECK(c.branch_gap < 1e-8 * c.value);
    CHECK(kappa_db(d, 0.5).value > c.value);
    CHECK(rel(c.delta, delta_star(d)) < 1e-7);
  }
}

TEST_CASE("double-optimized bound sits strictly above the free one") {
  const int d = 2;
  const double del = 0.1;
  const auto m = M_db2(d, del, 0.0);
  CHECK(m.value > K_d(d, del) * (1 + 1e-6));
  CHECK(m.gamma1 > 1e-5);
  CHECK(m.gamma2 > 1e-6);
  CHECK(m.gamma2 < 1 - 1e-6);
  // stationarity in both directions
  for (int axis : {0, 1}) {
    const double g1 = m.gamma1, g2 = m.gamma2;
    const double h = 1e-5 * (axis == 0 ? g1 : g2);
    const double up = axis == 0 ? M_db2_expr(d, del, 0.0, g1 + h, g2)
                                : M_db2_expr(d, del, 0.0, g1, g2 + h);
    const double dn = axis == 0 ? M_db2_expr(d, del, 0.0, g1 - h, g2)
                                : M_db2_expr(d, del, 0.0, g1, g2 - h);
    CHECK(std::abs(up - dn) / (2 * h) * (axis == 0 ? g1 : g2) <
          1e-5 * m.value);
  }
  CHECK(M_db2(d, del, 0.5).value > m.value);
}

TEST_CASE("real-potential uniform constant is monotone in both strengths") {
  const int d = 2;
  const auto base = mu_db(d, 0.0, 0.0);
  CHECK(base.branch_gap < 1e-8 * base.value);
  CHECK(base.value > kappa_d(d));
  CHECK(mu_db(d, 0.3, 0.0).value > base.value);
  CHECK(mu_db(d, 0.0, 0.3).value > base.value);
}

TEST_CASE("imaginary-strength bound and cone window") {
  CHECK(std::abs(b3_bound(2, 0, 0) - 5.43402) < 1e-5);
  // collapsing the real part sends the bound to 2A; convergence is only
  // O(sqrt(1 - b1^2)) so the probe has to sit very close to 1
  const double nearly = b3_bound(2, 1.0 - 1e-12, 0);
  CHECK(std::abs(nearly - 1.0 / (4 * (2 - 1))) < 1e-4);

  const auto w = delta_tilde_window(2, 0, 0, 0.1);
  CHECK(std::abs(w.lower - 0.1) < 1e-12);
  CHECK(std::abs(w.upper - 20.4082) < 1e-4);
  CHECK(w.nonempty);

  CHECK_THROWS_AS((void)delta_tilde_window(2, 0, 0, 0.0), std::invalid_argument);

  // the window closes exactly at the quadratic root
  const double thr = b3_window_threshold(2, 0, 0);
  CHECK(delta_tilde_window(2, 0, 0, 0.999 * thr).nonempty);
  CHECK_FALSE(delta_tilde_window(2, 0, 0, 1.001 * thr).nonempty);
  // large b3 kills the squared base outright
  CHECK_FALSE(delta_tilde_window(2, 0, 0, 0.21).nonempty);
}

TEST_CASE("constants report is internally consistent") {
  const auto r = make_report(3);
  CHECK(r.d == 3);
  CHECK(rel(r.K_at_star, r.K_at_star_minimization) < 1e-9);
  CHECK(rel(r.K_at_star, r.K_at_star_implicit) < 1e-9);
  CHECK(rel(r.kappa, r.kappa_minimax) < 1e-9);
  CHECK(rel(r.kappa, r.kappa_implicit) < 1e-9);
  CHECK(r.kappa > r.kappa_lower);
  CHECK(std::abs(r.threshold_residual) < 1e-9);
  CHECK(rel(r.gamma_at_star,
            (r.d - 1) * std::sqrt(r.delta_star / (1 + r.delta_star))) < 1e-10);
}
