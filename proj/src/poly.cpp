#include "heis/poly.hpp"

#include <stdexcept>

namespace heis {

Poly Poly::constant(int d, cplx c) {
  Poly p(d);
  p.add_term(Key(2 * d + 1, 0), c);
  return p;
}

Poly Poly::variable(int d, int var) {
  if (var < 0 || var > 2 * d)
    throw std::invalid_argument("Poly::variable: index out of range");
  Poly p(d);
  Key k(2 * d + 1, 0);
  k[var] = 1;
  p.add_term(k, 1.0);
  return p;
}

void Poly::add_term(const Key& exps, cplx c) {
  if (static_cast<int>(exps.size()) != nvars())
    throw std::invalid_argument("Poly::add_term: wrong exponent count");
  if (c == cplx{}) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx{}) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(d_);
  Key k(nvars());
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      for (int v = 0; v < nvars(); ++v) k[v] = ka[v] + kb[v];
      r.add_term(k, ca * cb);
    }
  return r;
}

Poly Poly::operator*(cplx c) const {
  Poly r(d_);
  if (c == cplx{}) return r;
  for (const auto& [k, coef] : terms_) r.terms_.emplace(k, coef * c);
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(d_);
  Key k(nvars());
  for (const auto& [key, c] : terms_) {
    if (key[var] == 0) continue;
    k = key;
    k[var] -= 1;
    r.add_term(k, c * static_cast<double>(key[var]));
  }
  return r;
}

cplx Poly::eval(const HPoint& p) const {
  if (p.dim() != d_) throw std::invalid_argument("Poly::eval: dimension mismatch");
  cplx s{};
  for (const auto& [k, c] : terms_) {
    double m = 1;
    for (int j = 0; j < d_; ++j) {
      for (int e = 0; e < k[j]; ++e) m *= p.x[j];
      for (int e = 0; e < k[d_ + j]; ++e) m *= p.y[j];
    }
    for (int e = 0; e < k[2 * d_]; ++e) m *= p.t;
    s += c * m;
  }
  return s;
}

int Poly::total_degree() const {
  int deg = 0;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int e : k) s += e;
    if (s > deg) deg = s;
  }
  return deg;
}

int Poly::degree_in_t() const {
  int deg = 0;
  for (const auto& [k, c] : terms_)
    if (k[2 * d_] > deg) deg = k[2 * d_];
  return deg;
}

int Poly::angular_degree() const {
  int deg = 0;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int v = 0; v < 2 * d_; ++v) s += k[v];
    if (s > deg) deg = s;
  }
  return deg;
}

}  // namespace heis
