#include "heis/constants.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "heis/numerics.hpp"

namespace heis::constants {

namespace {

void require_dim(int d) {
  if (d < 2) throw std::domain_error("constants: need d >= 2");
}

void require_strength(double b) {
  if (!(b >= 0) || b >= 1)
    throw std::domain_error("constants: subordination strength must lie in [0,1)");
}

double golden_log_min(const std::function<double(double)>& f, double lo,
                      double hi) {
  const auto m = num::golden_min(
      [&](double s) { return f(std::exp(s)); }, std::log(lo), std::log(hi));
  return m.fx;
}

}  // namespace

double gamma_delta(int d, double delta, double b) {
  require_dim(d);
  require_strength(b);
  if (delta < 0) throw std::domain_error("gamma_delta: delta must be >= 0");
  const double target = (1 - b * b) * (d - 1.0) * (d - 1.0);
  const double hi = std::sqrt(target / (4 * d - 3));
  if (delta == 0) return hi;
  const double sq = std::sqrt(delta);
  auto cubic = [&](double g) { return sq * g * g * g + (4 * d - 3) * g * g - target; };
  return num::bisect(cubic, 0.0, hi, 1e-16).x;
}

double K_d(int d, double delta) { return K_db(d, delta, 0.0); }

double K_d_minimization(int d, double delta) {
  return K_db_minimization(d, delta, 0.0);
}

double K_d_expr(int d, double delta, double gamma) {
  return K_db_expr(d, delta, 0.0, gamma);
}

double K_d_implicit(int d, double delta) {
  require_dim(d);
  if (!(delta > 0)) throw std::domain_error("K_d_implicit: delta must be > 0");
  // left side is strictly decreasing in K
  auto eq = [&](double K) {
    return std::sqrt(delta * (d - 1)) * std::pow(K, -1.5) + (4 * d - 3) / K -
           (d - 1);
  };
  const double lo = (4 * d - 3) / (d - 1.0);  // delta -> 0 limit, eq(lo) > 0
  auto br = num::expand_bracket(eq, lo, 2 * lo);
  if (!br) throw std::runtime_error("K_d_implicit: no bracket");
  return num::bisect(eq, br->first, br->second, 1e-15).x;
}

double K_db(int d, double delta, double b) {
  const double g = gamma_delta(d, delta, b);
  return (d - 1.0) / (g * g);
}

double K_db_expr(int d, double delta, double b, double gamma) {
  require_dim(d);
  require_strength(b);
  if (!(gamma > 0)) throw std::domain_error("K_db_expr: gamma must be > 0");
  const double sq = std::sqrt(delta);
  const double fac = (1 - b * b);
  const double P = (8 * d - 6 + gamma * sq) / (4 * (d - 1) * fac);
  return P + std::sqrt(P * P + sq / (2 * gamma * fac));
}

double K_db_minimization(int d, double delta, double b) {
  require_dim(d);
  require_strength(b);
  if (!(delta > 0))
    throw std::domain_error("K_db_minimization: delta must be > 0");
  return golden_log_min(
      [&](double g) { return K_db_expr(d, delta, b, g); }, 1e-6, 1e3);
}

double delta_star(int d) {
  require_dim(d);
  auto eq = [&](double del) {
    return del * del / std::sqrt(1 + del) + 4 * del - 1.0 / (d - 1);
  };
  return num::bisect(eq, 1e-12, 0.25 / (d - 1.0), 1e-16).x;
}

double kappa_d(int d) {
  const double ds = delta_star(d);
  return (1 + 1 / ds) / ((d - 1.0) * (d - 1.0));
}

double kappa_d_minimax(int d) {
  require_dim(d);
  auto branches = [&](double del) {
    const double first = (1 + 1 / del) / ((d - 1.0) * (d - 1.0));
    const double second = K_d(d, del) / (d - 1.0);
    return first > second ? first : second;
  };
  return golden_log_min(branches, 1e-4, 2.0);
}

double kappa_d_implicit(int d) {
  require_dim(d);
  // in x = 1/kappa the left side grows from -(d-1)^2 to +infinity
  const double cap = (d - 1.0) * (d - 1.0);
  auto eq = [&](double x) {
    return x * x / std::sqrt(cap - x) + (4 * d - 3) * x - cap;
  };
  const double x = num::bisect(eq, 1e-12, cap * (1 - 1e-12), 1e-16).x;
  return 1 / x;
}

double kappa_lower_bound(int d) {
  require_dim(d);
  return 4 / (d - 1.0) + 1 / ((d - 1.0) * (d - 1.0));
}

Crossing kappa_db(int d, double b) {
  require_dim(d);
  require_strength(b);
  auto first = [&](double del) {
    return (1 + 1 / del) / ((d - 1.0) * (d - 1.0));
  };
  auto second = [&](double del) { return K_db(d, del, b) / (d - 1.0); };
  auto diff = [&](double del) { return first(del) - second(del); };
  auto br = num::expand_bracket(diff, 1e-8, 1e-2);
  if (!br) throw std::runtime_error("kappa_db: no crossing bracket");
  const double del = num::bisect(diff, br->first, br->second, 1e-15).x;
  Crossing c;
  c.delta = del;
  c.value = std::max(first(del), second(del));
  c.branch_gap = std::abs(diff(del));
  return c;
}

double M_db2_expr(int d, double delta, double b2, double gamma1, double gamma2) {
  require_dim(d);
  require_strength(b2);
  if (!(gamma1 > 0) || !(gamma2 > 0) || !(gamma2 < 1))
    throw std::domain_error("M_db2_expr: need gamma1 > 0 and gamma2 in (0,1)");
  const double sq = std::sqrt(delta);
  const double fac = 1 - b2 * b2;
  const double pin = sq / (8 * (d - 1) * gamma2);
  const double N = ((4 * d - 3 + gamma1 * sq / 2) + pin * pin / fac) /
                   ((d - 1) * fac * (1 - gamma2 * gamma2));
  const double q = (sq / (2 * gamma1)) / (fac * (1 - gamma2 * gamma2));
  return N + std::sqrt(N * N + q);
}

Mdb2Result M_db2(int d, double delta, double b2) {
  require_dim(d);
  require_strength(b2);
  if (!(delta > 0)) throw std::domain_error("M_db2: delta must be > 0");
  auto expr = [&](double g1, double g2) {
    return M_db2_expr(d, delta, b2, g1, g2);
  };
  Mdb2Result best;
  best.value = std::numeric_limits<double>::infinity();
  for (double s1 : {0.05, 0.3, 1.0, 5.0})
    for (double s2 : {0.1, 0.3, 0.6, 0.9}) {
      double g1 = s1, g2 = s2;
      double prev = expr(g1, g2);
      for (int sweep = 0; sweep < 60; ++sweep) {
        const auto m1 = num::golden_min(
            [&](double s) { return expr(std::exp(s), g2); }, std::log(1e-5),
            std::log(1e5));
        g1 = std::exp(m1.x);
        const auto m2 = num::golden_min(
            [&](double t) { return expr(g1, t); }, 1e-6, 1 - 1e-6);
        g2 = m2.x;
        if (std::abs(prev - m2.fx) < 1e-14 * (1 + std::abs(m2.fx))) {
          prev = m2.fx;
          break;
        }
        prev = m2.fx;
      }
      if (prev < best.value) {
        best.value = prev;
        best.gamma1 = g1;
        best.gamma2 = g2;
      }
    }
  return best;
}

Crossing mu_db(int d, double b1, double b2) {
  require_dim(d);
  require_strength(b1);
  require_strength(b2);
  const double inflate = 1 - b1 * b1;
  auto first = [&](double del) {
    return (1 + 1 / del) / ((d - 1.0) * (d - 1.0) * inflate);
  };
  auto second = [&](double del) { return M_db2(d, del, b2).value / (d - 1.0); };
  auto diff = [&](double del) { return first(del) - second(del); };
  auto br = num::expand_bracket(diff, 1e-8, 1e-2);
  if (!br) throw std::runtime_error("mu_db: no crossing bracket");
  const double del = num::bisect(diff, br->first, br->second, 1e-13, 100).x;
  Crossing c;
  c.delta = del;
  c.value = std::max(first(del), second(del));
  c.branch_gap = std::abs(diff(del));
  return c;
}

double b3_bound(int d, double b1, double b2) {
  require_dim(d);
  require_strength(b1);
  require_strength(b2);
  const double root1 = std::sqrt(1 - b1 * b1);
  const double A = 1 / (8 * (d - 1.0)) + (2 * d - 1.5) * root1;
  const double C = (d - 1.0) * (1 - b2 * b2) * root1;
  return A + std::sqrt(A * A + C);
}

double b3_window_threshold(int d, double b1, double b2) {
  require_dim(d);
  require_strength(b1);
  require_strength(b2);
  const double root1 = std::sqrt(1 - b1 * b1);
  const double A = 1 / (8 * (d - 1.0)) + (2 * d - 1.5) * root1;
  const double C = (d - 1.0) * (1 - b2 * b2) * root1;
  return -A + std::sqrt(A * A + C);
}

DeltaWindow delta_tilde_window(int d, double b1, double b2, double b3) {
  require_dim(d);
  require_strength(b1);
  require_strength(b2);
  if (!(b3 > 0))
    throw std::invalid_argument("delta_tilde_window: b3 must be positive");
  DeltaWindow w;
  w.lower = b3 / ((d - 1.0) * (1 - b1 * b1));
  const double base = 1 - b2 * b2 - (4 * d - 3) * b3 / (d - 1.0);
  if (base <= 0) {
    w.upper = 0;
    w.nonempty = false;
    return w;
  }
  const double denom = 1 / (4 * (d - 1.0)) + b3;
  w.upper = (d - 1.0) / b3 * base * base / (denom * denom);
  w.nonempty = w.lower < w.upper;
  return w;
}

double threshold_identity_residual(int d) {
  const double kd = kappa_d(d);
  const double c = 1 / ((d - 1.0) * kd);
  const double ds = delta_star(d);
  return std::pow(c, 1.5) * std::sqrt(ds) / std::sqrt(d - 1.0) +
         c * (4 * d - 3) / (d - 1.0) - 1;
}

PerturbedConstants make_perturbed(int d, double delta, double b, double b1,
                                  double b2, double b3) {
  PerturbedConstants p;
  p.d = d;
  p.delta = delta;
  p.b = b;
  p.b1 = b1;
  p.b2 = b2;
  p.b3 = b3;
  p.K_b = K_db(d, delta, b);
  p.M = M_db2(d, delta, b2);
  p.kappa_b = kappa_db(d, b);
  p.mu = mu_db(d, b1, b2);
  p.b3_threshold = b3_bound(d, b1, b2);
  if (b3 > 0) {
    p.window = delta_tilde_window(d, b1, b2, b3);
  } else {
    p.window.lower = 0;
    p.window.upper = std::numeric_limits<double>::infinity();
    p.window.nonempty = true;
  }
  return p;
}

std::vector<TableRow> table_rows() {
  std::vector<TableRow> rows;
  for (int d = 2; d <= 6; ++d)
    rows.push_back({d, delta_star(d), kappa_d(d)});
  return rows;
}

ConstantsReport make_report(int d) {
  ConstantsReport r;
  r.d = d;
  r.delta_star = delta_star(d);
  r.gamma_at_star = gamma_delta(d, r.delta_star);
  r.kappa = kappa_d(d);
  r.kappa_minimax = kappa_d_minimax(d);
  r.kappa_implicit = kappa_d_implicit(d);
  r.kappa_lower = kappa_lower_bound(d);
  r.K_at_star = K_d(d, r.delta_star);
  r.K_at_star_minimization = K_d_minimization(d, r.delta_star);
  r.K_at_star_implicit = K_d_implicit(d, r.delta_star);
  r.threshold_residual = threshold_identity_residual(d);
  return r;
}

}  // namespace heis::constants
