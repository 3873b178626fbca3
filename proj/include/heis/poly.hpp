#pragma once

// Sparse polynomials in the 2d+1 coordinates (x_1..x_d, y_1..y_d, t) with
// complex coefficients.  Terms live in an ordered map keyed by exponent
// vector, so iteration order and hence all downstream accumulation is
// deterministic.  Variable indices: 0..d-1 the x_j, d..2d-1 the y_j, 2d is t.

#include <complex>
#include <map>
#include <vector>

#include "heis/geometry.hpp"

namespace heis {

using cplx = std::complex<double>;

class Poly {
 public:
  using Key = std::vector<int>;
  using Terms = std::map<Key, cplx>;

  explicit Poly(int d) : d_(d) {}
  static Poly constant(int d, cplx c);
  static Poly variable(int d, int var);

  int dim() const { return d_; }
  int nvars() const { return 2 * d_ + 1; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(const Key& exps, cplx c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(cplx c) const;

  Poly derivative(int var) const;
  cplx eval(const HPoint& p) const;

  int total_degree() const;
  int degree_in_t() const;
  // largest sum of x,y exponents over terms: bounds the spherical-harmonic
  // content of the angular factor
  int angular_degree() const;

 private:
  int d_;
  Terms terms_;
};

}  // namespace heis
