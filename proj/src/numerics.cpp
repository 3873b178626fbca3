#include "heis/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heis::num {

RootResult bisect(const std::function<double(double)>& f, double lo, double hi,
                  double xtol, int maxit) {
  double flo = f(lo), fhi = f(hi);
  RootResult r;
  if (flo == 0) return {lo, 0, true};
  if (fhi == 0) return {hi, 0, true};
  if ((flo > 0) == (fhi > 0))
    throw std::invalid_argument("bisect: endpoints do not bracket a root");
  for (int it = 0; it < maxit; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    r.iterations = it + 1;
    if (fm == 0 || hi - lo < xtol * (1 + std::abs(mid))) {
      r.x = mid;
      r.converged = true;
      return r;
    }
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  r.x = 0.5 * (lo + hi);
  r.converged = hi - lo < 1e-12 * (1 + std::abs(r.x));
  return r;
}

std::optional<std::pair<double, double>> expand_bracket(
    const std::function<double(double)>& f, double lo, double hi,
    int max_expand) {
  double flo = f(lo), fhi = f(hi);
  if ((flo > 0) != (fhi > 0) || flo == 0 || fhi == 0) return {{lo, hi}};
  double w = hi - lo;
  for (int i = 0; i < max_expand; ++i) {
    lo = hi;
    flo = fhi;
    w *= 2;
    hi += w;
    fhi = f(hi);
    if ((flo > 0) != (fhi > 0) || fhi == 0) return {{lo, hi}};
  }
  return std::nullopt;
}

MinResult golden_min(const std::function<double(double)>& f, double lo,
                     double hi, double xtol, int maxit) {
  constexpr double phi = 0.6180339887498949;  // (sqrt(5)-1)/2
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < maxit && b - a > xtol * (1 + std::abs(a) + std::abs(b));
       ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? MinResult{x1, f1} : MinResult{x2, f2};
}

Rule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev estimate, then Newton on P_n
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15 * (1 + std::abs(x))) {
        // one polishing step after convergence
        p0 = 1;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        pp = n * (x * p1 - p0) / (x * x - 1);
        x -= p1 / pp;
        break;
      }
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    const double w = 2.0 / ((1 - x * x) * pp * pp);
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.x[n / 2] = 0;
  return r;
}

namespace detail {

void tridiag_ql_first_row(std::vector<double>& d, std::vector<double>& e,
                          std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  e.resize(n + 1, 0.0);  // e[n] is rotation scratch
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m + 1]) <= 1e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw std::runtime_error("tridiag_ql: too many iterations");
        double g = (d[l + 1] - d[l]) / (2 * e[l + 1]);
        double rr = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l + 1] / (g + std::copysign(rr, g));
        double s = 1, c = 1, p = 0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i + 1];
          const double b = c * e[i + 1];
          rr = std::hypot(f, g);
          e[i + 2] = rr;
          if (rr == 0) {
            d[i + 1] -= p;
            e[m + 1] = 0;
            break;
          }
          s = f / rr;
          c = g / rr;
          g = d[i + 1] - p;
          rr = (d[i] - g) * s + 2 * c * b;
          p = s * rr;
          d[i + 1] = g + p;
          g = c * rr - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        d[l] -= p;
        e[l + 1] = g;
        e[m + 1] = 0;
      }
    } while (m != l);
  }
  // sort ascending, carrying z
  for (int i = 1; i < n; ++i) {
    const double dv = d[i], zv = z[i];
    int j = i - 1;
    while (j >= 0 && d[j] > dv) {
      d[j + 1] = d[j];
      z[j + 1] = z[j];
      --j;
    }
    d[j + 1] = dv;
    z[j + 1] = zv;
  }
}

}  // namespace detail

Rule1D gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be positive");
  if (alpha <= -1 || beta <= -1)
    throw std::invalid_argument("gauss_jacobi: weight exponents must exceed -1");
  std::vector<double> d(n), e(n, 0.0), z(n, 0.0);
  const double ab = alpha + beta;
  d[0] = (beta - alpha) / (ab + 2);
  for (int k = 1; k < n; ++k) {
    const double t = 2 * k + ab;
    d[k] = (beta * beta - alpha * alpha) / (t * (t + 2));
    double b2;
    if (k == 1) {
      b2 = 4 * (alpha + 1) * (beta + 1) / ((ab + 2) * (ab + 2) * (ab + 3));
    } else {
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
           (t * t * (t + 1) * (t - 1));
    }
    e[k] = std::sqrt(b2);
  }
  z[0] = 1;
  detail::tridiag_ql_first_row(d, e, z);
  const double mu0 = std::pow(2.0, ab + 1) * std::tgamma(alpha + 1) *
                     std::tgamma(beta + 1) / std::tgamma(ab + 2);
  Rule1D r;
  r.x = std::move(d);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) r.w[i] = mu0 * z[i] * z[i];
  return r;
}

}  // namespace heis::num
