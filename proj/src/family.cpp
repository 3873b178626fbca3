#include "heis/family.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "heis/poly.hpp"

namespace heis {

namespace {

Poly radial_square(int d) {
  Poly p(d);
  for (int j = 0; j < 2 * d; ++j) {
    Poly::Key k(2 * d + 1, 0);
    k[j] = 2;
    p.add_term(k, 1.0);
  }
  return p;
}

Poly first_harmonic(int d) {
  Poly p = Poly::variable(d, 0) + Poly::variable(d, d) * cplx(0.0, 1.0);
  return p;
}

FamilyMember make(std::string name, Poly p, double a, double b) {
  return {std::move(name),
          std::make_shared<PolyGaussianField>(std::move(p), a, b)};
}

// One random polynomial-times-Gaussian member.  Draw order is fixed so the
// catalog is reproducible and prefix-stable across counts.
FamilyMember random_member(int d, int index, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double a = 0.4 + 1.2 * unit(rng);
  const double b = 0.3 + 1.2 * unit(rng);

  const int ang_cap = d == 2 ? 3 : 2;
  const int nmono = 1 + static_cast<int>(5.0 * unit(rng)) % 5;
  Poly p(d);
  for (int m = 0; m < nmono; ++m) {
    Poly::Key key(2 * d + 1, 0);
    const int adeg = static_cast<int>((ang_cap + 1) * unit(rng)) % (ang_cap + 1);
    for (int q = 0; q < adeg; ++q) {
      const int var = static_cast<int>(2 * d * unit(rng)) % (2 * d);
      ++key[var];
    }
    key[2 * d] = static_cast<int>(3.0 * unit(rng)) % 3;
    const double mag = 0.3 + 0.7 * unit(rng);
    const double phase = 2.0 * M_PI * unit(rng);
    p.add_term(key, std::polar(mag, phase));
  }
  if (p.is_zero()) p = Poly::constant(d, 1.0);

  if (unit(rng) < 0.3) p = p * radial_square(d);
  if (unit(rng) < 0.3) p = p * first_harmonic(d);

  return make("rand-" + std::to_string(index), std::move(p), a, b);
}

}  // namespace

std::vector<FamilyMember> builtin_family(int d, int count,
                                         unsigned long long seed) {
  if (d < 1) throw std::invalid_argument("builtin_family: d must be >= 1");
  if (count < 0) throw std::invalid_argument("builtin_family: negative count");

  std::vector<FamilyMember> out;
  out.reserve(static_cast<size_t>(count));

  const struct {
    const char* name;
    Poly p;
    double a, b;
  } anchors[] = {
      {"gauss-unit", Poly::constant(d, 1.0), 1.0, 1.0},
      {"gauss-wide", Poly::constant(d, 1.3), 0.7, 0.5},
      {"radial-weight", radial_square(d), 1.0, 1.0},
      {"first-harmonic", first_harmonic(d), 1.0, 1.0},
      {"mixed-poly",
       Poly::constant(d, 1.0) + Poly::variable(d, 0) * 0.5 +
           Poly::variable(d, d) * (-0.4) +
           Poly::variable(d, 0) * Poly::variable(d, d) * 0.3 +
           Poly::variable(d, 2 * d) * 0.2,
       0.9, 0.8},
  };
  for (const auto& anc : anchors) {
    if (static_cast<int>(out.size()) == count) return out;
    out.push_back(make(anc.name, anc.p, anc.a, anc.b));
  }

  std::mt19937_64 rng(seed);
  for (int i = static_cast<int>(out.size()); i < count; ++i)
    out.push_back(random_member(d, i, rng));
  return out;
}

}  // namespace heis
