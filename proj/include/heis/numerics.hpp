#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace heis::num {

struct RootResult {
  double x = 0;
  int iterations = 0;
  bool converged = false;
};

// Bisection root of f on [lo,hi]; requires f(lo) and f(hi) of opposite sign
// (a zero endpoint counts).  Runs until the bracket width falls below xtol
// in absolute-plus-relative terms.
RootResult bisect(const std::function<double(double)>& f, double lo, double hi,
                  double xtol = 1e-15, int maxit = 200);

// Expands [lo,hi] geometrically to the right until f changes sign.
std::optional<std::pair<double, double>> expand_bracket(
    const std::function<double(double)>& f, double lo, double hi,
    int max_expand = 80);

struct MinResult {
  double x = 0;
  double fx = 0;
};

// Golden-section minimum of a unimodal f on [lo,hi].
MinResult golden_min(const std::function<double(double)>& f, double lo,
                     double hi, double xtol = 1e-12, int maxit = 400);

struct Rule1D {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre rule on [-1,1], exact for polynomials of degree 2n-1.
Rule1D gauss_legendre(int n);

// Gauss-Jacobi rule for weight (1-x)^alpha (1+x)^beta on [-1,1]
// (Golub-Welsch on the Jacobi recurrence matrix).
Rule1D gauss_jacobi(int n, double alpha, double beta);

namespace detail {
// QL with implicit shifts for a symmetric tridiagonal matrix.  d holds the
// diagonal (overwritten with eigenvalues), e the subdiagonal in e[1..n-1],
// z accumulates the first row of the eigenvector matrix.
void tridiag_ql_first_row(std::vector<double>& d, std::vector<double>& e,
                          std::vector<double>& z);
}  // namespace detail

}  // namespace heis::num
