#include "heis/potentials.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <stdexcept>

#include "heis/constants.hpp"

namespace heis {
namespace {

using nlohmann::json;

constexpr double kSignTol = 1e-12;

double sq(double x) { return x * x; }

// golden-section maximizer for the smooth one-dimensional envelopes below;
// the interval shrinks past double resolution long before 200 iterations
double max_on(double a, double b, const std::function<double(double)>& f) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

// sup over y >= 0 of y e^{-y} (1 - 2y)_+, the repulsivity envelope of a
// unit-rate Gaussian bump
double gaussian_bump_sup() {
  return max_on(0.0, 0.5, [](double y) { return y * std::exp(-y) * (1 - 2 * y); });
}

// sup over y >= 0 of y e^{-y} (2y - 1)_+, the same envelope for a Gaussian well
double gaussian_well_sup() {
  return max_on(0.5, 12.0, [](double y) { return y * std::exp(-y) * (2 * y - 1); });
}

// sup over xi in [0,1] of xi (1 - 2 xi^2)_+ with xi = |z|^2 / rho^2, the
// repulsivity envelope of a positive inverse-square gauge potential
double gauge_bump_sup() {
  return max_on(0.0, 1.0, [](double x) { return x * std::max(1 - 2 * x * x, 0.0); });
}

struct TermBudgets {
  // uppers enter b/b3 linearly and b1^2/b2^2 additively
  std::optional<double> b, b1, b2, b3;
};

// Certified routes per term.  Every bound is a pointwise majorization of the
// hypothesis weight by one of the two Hardy weights: W <= m / |z|^2 gives the
// horizontal route with constant m / (d-1)^2, W <= m |z|^2 / rho^4 the gauge
// route with m / d^2.  Weights with no scale-invariant majorant (wrong
// homogeneity) get no certificate and the caller falls back to the family
// supremum.
TermBudgets certify(const PotentialTerm& t, int d) {
  TermBudgets out;
  const double dh = d - 1.0;
  const double re = t.coeff.real(), im = t.coeff.imag();
  const double mag = std::abs(t.coeff);

  switch (t.form) {
    case PotentialTerm::Form::power: {
      const double k = t.exponent;
      if (mag == 0)
        out.b = 0;
      else if (k == 2)
        out.b = mag / dh;
      if (re >= 0)
        out.b1 = 0;
      else if (k == 2)
        out.b1 = std::sqrt(-re) / dh;
      // d(r V)/dr = re (1-k) r^{-k}
      if (re * (1 - k) <= 0)
        out.b2 = 0;
      else if (k == 2)
        out.b2 = std::sqrt(re * (1 - k)) / dh;
      if (im == 0)
        out.b3 = 0;
      else if (k == 2)
        out.b3 = std::abs(im) / dh;
      break;
    }
    case PotentialTerm::Form::koranyi_power: {
      const double a = t.exponent;
      if (mag == 0)
        out.b = 0;
      else if (a == 2)
        out.b = mag / d;
      if (re >= 0)
        out.b1 = 0;
      else if (a == 2)
        out.b1 = std::sqrt(-re) / dh;  // rho^{-2} <= |z|^{-2}
      // d(r V)/dr = re rho^{-a} (1 - a xi^2), xi = r^2/rho^2
      if (re == 0 || (re <= 0 && a <= 1))
        out.b2 = 0;
      else if (a == 2)
        out.b2 = re > 0 ? std::sqrt(re * gauge_bump_sup()) / dh
                        : std::sqrt(-re) / dh;
      if (im == 0)
        out.b3 = 0;
      else if (a == 2)
        out.b3 = std::abs(im) / d;
      break;
    }
    case PotentialTerm::Form::gaussian: {
      const double s = t.exponent;
      // r^4 e^{-2 s r^2} peaks at r^2 = 1/s with value e^{-2}/s^2
      out.b = mag / (std::exp(1.0) * s * dh);
      out.b1 = re >= 0 ? 0 : std::sqrt(-re / (std::exp(1.0) * s)) / dh;
      if (re == 0)
        out.b2 = 0;
      else if (re > 0)
        out.b2 = std::sqrt(re * gaussian_bump_sup() / s) / dh;
      else
        out.b2 = std::sqrt(-re * gaussian_well_sup() / s) / dh;
      out.b3 = std::abs(im) / (std::exp(1.0) * s * dh);
      break;
    }
  }
  return out;
}

// accumulate optional bounds; a single uncertified term poisons the sum
void add_linear(std::optional<double>& acc, const std::optional<double>& term) {
  if (!acc || !term)
    acc = std::nullopt;
  else
    acc = *acc + *term;
}

void add_square(std::optional<double>& acc, const std::optional<double>& term) {
  if (!acc || !term)
    acc = std::nullopt;
  else
    acc = std::sqrt(sq(*acc) + sq(*term));
}

cplx parse_coeff(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw std::invalid_argument("coeff array must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
  }
  return {j.get<double>(), 0.0};
}

PotentialTerm parse_term(const json& j) {
  const std::string form = j.at("form").get<std::string>();
  PotentialTerm t;
  t.coeff = j.contains("coeff") ? parse_coeff(j.at("coeff")) : cplx(0, 0);
  if (form == "power") {
    // negative exponents admit growing profiles such as c|z|; those only
    // ever receive zero or uncertified budgets
    t.form = PotentialTerm::Form::power;
    t.exponent = j.at("exponent").get<double>();
  } else if (form == "koranyi-power") {
    t.form = PotentialTerm::Form::koranyi_power;
    t.exponent = j.at("exponent").get<double>();
  } else if (form == "gaussian") {
    t.form = PotentialTerm::Form::gaussian;
    t.exponent = j.at("rate").get<double>();
    if (t.exponent <= 0) throw std::invalid_argument("gaussian rate must be > 0");
  } else {
    throw std::invalid_argument("unknown potential form: " + form);
  }
  return t;
}

json term_to_json(const PotentialTerm& t) {
  json j;
  switch (t.form) {
    case PotentialTerm::Form::power:
      j["form"] = "power";
      j["exponent"] = t.exponent;
      break;
    case PotentialTerm::Form::koranyi_power:
      j["form"] = "koranyi-power";
      j["exponent"] = t.exponent;
      break;
    case PotentialTerm::Form::gaussian:
      j["form"] = "gaussian";
      j["rate"] = t.exponent;
      break;
  }
  if (t.coeff.imag() == 0)
    j["coeff"] = t.coeff.real();
  else
    j["coeff"] = {t.coeff.real(), t.coeff.imag()};
  return j;
}

}  // namespace

bool PotentialSpec::is_zero() const {
  for (const auto& t : terms)
    if (std::abs(t.coeff) != 0) return false;
  return true;
}

bool PotentialSpec::is_real() const {
  for (const auto& t : terms)
    if (t.coeff.imag() != 0) return false;
  return true;
}

cplx PotentialSpec::value(double r, double t) const {
  const double rho = std::pow(r * r * r * r + t * t, 0.25);
  cplx v = 0;
  for (const auto& tm : terms) {
    switch (tm.form) {
      case PotentialTerm::Form::power:
        v += tm.coeff * std::pow(r, -tm.exponent);
        break;
      case PotentialTerm::Form::koranyi_power:
        v += tm.coeff * std::pow(rho, -tm.exponent);
        break;
      case PotentialTerm::Form::gaussian:
        v += tm.coeff * std::exp(-tm.exponent * r * r);
        break;
    }
  }
  return v;
}

double PotentialSpec::drrV_real(double r, double t) const {
  const double rho = std::pow(r * r * r * r + t * t, 0.25);
  double out = 0;
  for (const auto& tm : terms) {
    const double re = tm.coeff.real();
    if (re == 0) continue;
    switch (tm.form) {
      case PotentialTerm::Form::power:
        out += re * (1 - tm.exponent) * std::pow(r, -tm.exponent);
        break;
      case PotentialTerm::Form::koranyi_power: {
        // d/dr (r rho^{-a}) with d(rho)/dr = r^3 / rho^3
        const double xi2 = sq(sq(r / rho));
        out += re * std::pow(rho, -tm.exponent) * (1 - tm.exponent * xi2);
        break;
      }
      case PotentialTerm::Form::gaussian:
        out += re * std::exp(-tm.exponent * r * r) * (1 - 2 * tm.exponent * r * r);
        break;
    }
  }
  return out;
}

bool PotentialSpec::w1d_loc(int d) const {
  for (const auto& t : terms) {
    if (std::abs(t.coeff) == 0) continue;
    switch (t.form) {
      case PotentialTerm::Form::power:
        // |grad V| ~ r^{-k-1} against the cylinder volume r^{2d-1} dr dt
        if (t.exponent >= 1) return false;
        break;
      case PotentialTerm::Form::koranyi_power:
        // |grad_H rho^{-a}| ~ rho^{-a-1} against rho^{Q-1} drho, Q = 2d+2
        if ((t.exponent + 1) * d >= 2 * d + 2) return false;
        break;
      case PotentialTerm::Form::gaussian:
        break;
    }
  }
  return true;
}

PotentialSpec parse_potential(const json& j) {
  PotentialSpec p;
  if (j.contains("label")) p.label = j.at("label").get<std::string>();
  const std::string form = j.at("form").get<std::string>();
  if (form == "sum") {
    for (const auto& tj : j.at("terms")) p.terms.push_back(parse_term(tj));
  } else {
    p.terms.push_back(parse_term(j));
  }
  return p;
}

json potential_to_json(const PotentialSpec& p) {
  json j;
  if (p.terms.size() == 1) {
    j = term_to_json(p.terms[0]);
  } else {
    j["form"] = "sum";
    j["terms"] = json::array();
    for (const auto& t : p.terms) j["terms"].push_back(term_to_json(t));
  }
  if (!p.label.empty()) j["label"] = p.label;
  return j;
}

std::shared_ptr<SlabPotential> make_slab_potential(const PotentialSpec& p) {
  if (!p.is_real())
    throw std::invalid_argument(
        "verdict engine takes real potentials; imaginary parts enter only "
        "through the subordination budgets");
  auto sp = std::make_shared<SlabPotential>();
  sp->value = [p](double r, double t) { return p.value(r, t).real(); };
  sp->drrV = [p](double r, double t) { return p.drrV_real(r, t); };
  return sp;
}

PotentialBounds compute_bounds(const PotentialSpec& p, int d,
                               const CylinderRule& rule, int family_count,
                               unsigned long long seed) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  PotentialBounds out;

  std::optional<double> b = 0.0, b1 = 0.0, b2 = 0.0, b3 = 0.0;
  for (const auto& t : p.terms) {
    const TermBudgets tb = certify(t, d);
    add_linear(b, tb.b);
    add_square(b1, tb.b1);
    add_square(b2, tb.b2);
    add_linear(b3, tb.b3);
  }
  out.b.upper = b;
  out.b1.upper = b1;
  out.b2.upper = b2;
  out.b3.upper = b3;
  out.method = (b && b1 && b2 && b3) ? "analytic" : "quotient-sup";

  if (family_count > 0 && !p.is_zero()) {
    const auto family = builtin_family(d, family_count, seed);
    const std::function<double(double, double)> weights[4] = {
        [&p](double r, double t) { return sq(r * std::abs(p.value(r, t))); },
        [&p](double r, double t) {
          return std::max(-p.value(r, t).real(), 0.0);
        },
        [&p](double r, double t) { return std::max(p.drrV_real(r, t), 0.0); },
        [&p](double r, double t) { return sq(r * p.value(r, t).imag()); },
    };
    BudgetBound* slots[4] = {&out.b, &out.b1, &out.b2, &out.b3};
    for (int w = 0; w < 4; ++w) {
      SlabPotential sp;
      sp.value = weights[w];
      sp.drrV = [](double, double) { return 0.0; };
      double best = 0;
      for (const auto& m : family) {
        const BaseIntegrals bi = compute_base_integrals(*m.field, rule, &sp);
        best = std::max(best, std::max(bi.B_V, 0.0) / bi.A_1);
      }
      slots[w]->lower = std::sqrt(best);
    }
  }
  return out;
}

namespace {

// decision inputs fall back to the empirical lower when no certificate
// exists; the report is then marked non-certifying
double decision_value(const BudgetBound& b, bool& certifying) {
  if (b.certified()) return *b.upper;
  certifying = false;
  return b.lower;
}

}  // namespace

ThmV1Report check_thm_V1(const PotentialBounds& bounds, int d) {
  ThmV1Report r;
  r.b = decision_value(bounds.b, r.certifying);
  r.threshold = 1.0 / ((d - 1) * constants::kappa_d(d));
  r.margin = r.threshold - r.b;
  r.subordination = r.b / (d - 1);
  r.met = r.b < r.threshold;
  return r;
}

ThmV2Report check_thm_V2(const PotentialBounds& bounds, int d) {
  ThmV2Report r;
  r.b1 = decision_value(bounds.b1, r.certifying);
  r.b2 = decision_value(bounds.b2, r.certifying);
  r.b3 = decision_value(bounds.b3, r.certifying);
  if (r.b1 < 1 && r.b2 < 1) {
    r.b3_threshold = constants::b3_bound(d, r.b1, r.b2);
    r.met = r.b3 < r.b3_threshold;
    if (r.b3 > 0) {
      const auto w = constants::delta_tilde_window(d, r.b1, r.b2, r.b3);
      r.window_lower = w.lower;
      r.window_upper = w.upper;
      r.window_nonempty = w.nonempty;
    } else {
      // no imaginary part: every positive aperture works
      r.window_lower = 0;
      r.window_upper = std::numeric_limits<double>::infinity();
      r.window_nonempty = true;
    }
  }
  r.subordinated = sq(r.b1) + sq(r.b2) + r.b3 / (d - 1) < 1;
  r.single_budget_threshold = 1.0 / ((d - 1) * constants::kappa_d(d));
  r.beats_single_budget = r.b3_threshold > r.single_budget_threshold;
  return r;
}

std::vector<RayProfile> radial_repulsivity_profile(
    const PotentialSpec& p, const std::vector<double>& r_samples,
    const std::vector<double>& t_levels) {
  if (r_samples.empty() || t_levels.empty())
    throw std::invalid_argument("repulsivity profile needs sample points");
  for (double r : r_samples)
    if (r <= 0) throw std::invalid_argument("ray samples must have r > 0");

  std::vector<RayProfile> out;
  for (double t : t_levels) {
    RayProfile prof;
    prof.t = t;
    prof.r = r_samples;
    for (double r : r_samples) {
      const double v = p.drrV_real(r, t);
      prof.drrV.push_back(v);
      prof.max_positive = std::max(prof.max_positive, v);
      if (v > kSignTol) prof.repulsive = false;
    }
    prof.max_positive = std::max(prof.max_positive, 0.0);
    out.push_back(prof);
  }
  return out;
}

}  // namespace heis
