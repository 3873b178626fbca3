#include "heis/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "heis/calculus.hpp"
#include "heis/constants.hpp"
#include "heis/geometry.hpp"

namespace heis {

using constants::K_d;
using constants::K_db;
using constants::kappa_d;
using constants::kappa_db;
using constants::M_db2;
using constants::mu_db;

namespace {

double sgn_pos(double x) { return x < 0 ? -1.0 : 1.0; }  // sgn(0) = +1

struct LambdaScalars {
  double l1 = 0, l2 = 0;
  double theta = 0;  // sgn(l2) sqrt(|l1|)
  double q = 0;      // |l2| / sqrt(l1), 0 when l2 = 0
  bool q_ok = true;  // q is finite under the stated convention
};

LambdaScalars lambda_scalars(cplx lambda) {
  LambdaScalars s;
  s.l1 = lambda.real();
  s.l2 = lambda.imag();
  s.theta = sgn_pos(s.l2) * std::sqrt(std::fabs(s.l1));
  if (s.l2 == 0) {
    s.q = 0;
  } else if (s.l1 > 0) {
    s.q = std::fabs(s.l2) / std::sqrt(s.l1);
  } else {
    s.q_ok = false;
  }
  return s;
}

double zf_sq(const BaseIntegrals& b, double l1, double l2) {
  return b.g2_r2 + 2 * l1 * b.Rg_r2 + 2 * l2 * b.Ig_r2 +
         (l1 * l1 + l2 * l2) * b.B_r2;
}

double rhof_sq(const BaseIntegrals& b, double l1, double l2) {
  return b.g2_rho2 + 2 * l1 * b.Rg_rho2 + 2 * l2 * b.Ig_rho2 +
         (l1 * l1 + l2 * l2) * b.B_rho2;
}

double gauged_sq(const BaseIntegrals& b, double th) {
  return b.A_1 + th * th * b.B_1 - 2 * th * b.C_1;
}

double root(double x) { return std::sqrt(std::max(x, 0.0)); }

template <class G>
Val norm_val(const BasePair& p, G&& g) {
  const double f = root(g(p.fine));
  const double c = root(g(p.coarse));
  return {f, std::fabs(f - c)};
}

Verdict make_verdict(std::string id, double delta, bool inside,
                     bool applicable, const Val& lhs, double constant,
                     const Val& weighted_f) {
  Verdict v;
  v.inequality = std::move(id);
  v.delta = delta;
  v.inside_cone = inside;
  v.applicable = applicable;
  v.lhs = lhs.v;
  v.constant = constant;
  v.rhs = constant * weighted_f.v;
  v.quad_err = lhs.err + constant * weighted_f.err;
  v.margin = v.rhs - v.lhs;
  v.pass = !applicable || v.lhs <= v.rhs + 3 * v.quad_err;
  return v;
}

// |delta Re W| + |Im W| <= ((1+delta)/(d-1)) ||zf|| ||grad u|| for
// W = int conj(u) f; Cauchy-Schwarz plus the |z|-weight inequality
Verdict chain_verdict(const ResolventBase& base, const LambdaScalars& s,
                      double delta, const ResolventBase::Norms& n) {
  const int d = base.dim();
  auto lhs_of = [&](const BaseIntegrals& b) {
    const double re_w = b.Rg_1 + s.l1 * b.B_1;
    const double im_w = b.Ig_1 + s.l2 * b.B_1;
    return delta * std::fabs(re_w) + std::fabs(im_w);
  };
  const double lf = lhs_of(base.pair().fine);
  const double lc = lhs_of(base.pair().coarse);
  Verdict v;
  v.inequality = "pairing-chain";
  v.delta = delta;
  v.applicable = true;
  v.lhs = lf;
  v.constant = (1 + delta) / (d - 1);
  v.rhs = v.constant * n.zf.v * n.grad_u.v;
  v.quad_err = std::fabs(lf - lc) +
               v.constant * (n.zf.err * n.grad_u.v + n.zf.v * n.grad_u.err +
                             n.zf.err * n.grad_u.err);
  v.margin = v.rhs - v.lhs;
  v.pass = v.lhs <= v.rhs + 3 * v.quad_err;
  return v;
}

void require_delta(double delta, const char* who) {
  if (!(delta > 0)) throw std::invalid_argument(std::string(who) + ": delta > 0");
}

void require_budget(double b, const char* who) {
  if (!(b >= 0) || b >= 1)
    throw std::domain_error(std::string(who) + ": budget in [0, 1)");
}

}  // namespace

ResolventBase::ResolventBase(FamilyMember m, const CylinderRule& fine,
                             const CylinderRule& coarse,
                             std::shared_ptr<const SlabPotential> V)
    : m_(std::move(m)), V_(std::move(V)) {
  d_ = m_.field->dim();
  if (d_ < 2)
    throw std::invalid_argument("ResolventBase: estimates require d >= 2");
  bp_ = compute_base_pair(*m_.field, fine, coarse, V_.get());
}

ResolventBase::Norms ResolventBase::norms(cplx lambda) const {
  const auto s = lambda_scalars(lambda);
  Norms n;
  n.theta = s.theta;
  n.q = s.q;
  n.grad_u = norm_val(bp_, [](const BaseIntegrals& b) { return b.A_1; });
  n.grad_gauged =
      norm_val(bp_, [&](const BaseIntegrals& b) { return gauged_sq(b, s.theta); });
  n.u_over_z = norm_val(bp_, [](const BaseIntegrals& b) { return b.B_rinv2; });
  n.u_over_rho =
      norm_val(bp_, [](const BaseIntegrals& b) { return b.B_rhoinv2; });
  n.zf = norm_val(bp_, [&](const BaseIntegrals& b) { return zf_sq(b, s.l1, s.l2); });
  n.rhof =
      norm_val(bp_, [&](const BaseIntegrals& b) { return rhof_sq(b, s.l1, s.l2); });
  return n;
}

std::vector<Verdict> verify_free(const ResolventBase& base, cplx lambda,
                                 double delta) {
  require_delta(delta, "verify_free");
  if (base.has_potential())
    throw std::invalid_argument("verify_free: potential present");
  const auto s = lambda_scalars(lambda);
  const int d = base.dim();
  const auto n = base.norms(lambda);
  const bool outside = std::fabs(s.l2) >= delta * std::fabs(s.l1);
  const bool inside = std::fabs(s.l2) <= delta * std::fabs(s.l1);

  std::vector<Verdict> out;
  out.push_back(make_verdict("gradient-offcone", delta, false, outside,
                             n.grad_u, (1 + 1 / delta) / (d - 1), n.zf));
  out.push_back(make_verdict("gradient-cone-gauged", delta, true, inside,
                             n.grad_gauged, K_d(d, delta), n.zf));
  out.push_back(make_verdict("inverse-z-uniform", delta, inside, true,
                             n.u_over_z, kappa_d(d), n.zf));
  out.push_back(make_verdict("inverse-gauge-uniform", delta, inside, true,
                             n.u_over_rho, kappa_d(d), n.rhof));
  out.push_back(chain_verdict(base, s, delta, n));
  return out;
}

std::vector<Verdict> verify_repulsive(const ResolventBase& base, cplx lambda,
                                      double delta, double b) {
  require_delta(delta, "verify_repulsive");
  require_budget(b, "verify_repulsive");
  if (const SlabPotential* V = base.potential()) {
    // sign hypothesis on a seeded sample cloud
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ur(0.05, 6.0), ut(-8.0, 8.0);
    for (int k = 0; k < 200; ++k) {
      const double r = ur(rng), t = ut(rng);
      if (V->value(r, t) < -1e-12)
        throw hypothesis_error("verify_repulsive: potential negative on sample");
    }
  }
  const auto s = lambda_scalars(lambda);
  const int d = base.dim();
  const auto n = base.norms(lambda);
  // signed cone: l1 < 0 is always off-cone here
  const bool outside = std::fabs(s.l2) >= delta * s.l1;
  const bool inside = std::fabs(s.l2) <= delta * s.l1;

  std::vector<Verdict> out;
  out.push_back(make_verdict("gradient-offcone", delta, false, outside,
                             n.grad_u, (1 + 1 / delta) / (d - 1), n.zf));
  out.push_back(make_verdict("gradient-cone-gauged", delta, true, inside,
                             n.grad_gauged, K_db(d, delta, b), n.zf));
  out.push_back(make_verdict("inverse-z-uniform", delta, inside, true,
                             n.u_over_z, kappa_db(d, b).value, n.zf));
  out.push_back(chain_verdict(base, s, delta, n));
  return out;
}

std::vector<Verdict> verify_two_budget(const ResolventBase& base, cplx lambda,
                                       double delta, double b1, double b2) {
  require_delta(delta, "verify_two_budget");
  require_budget(b1, "verify_two_budget");
  require_budget(b2, "verify_two_budget");
  const auto s = lambda_scalars(lambda);
  const int d = base.dim();
  const auto n = base.norms(lambda);
  const bool outside = std::fabs(s.l2) >= delta * s.l1;
  const bool inside = std::fabs(s.l2) <= delta * s.l1;

  std::vector<Verdict> out;
  out.push_back(make_verdict("gradient-offcone", delta, false, outside,
                             n.grad_u,
                             (1 + 1 / delta) / ((d - 1) * (1 - b1 * b1)),
                             n.zf));
  out.push_back(make_verdict("gradient-cone-gauged", delta, true, inside,
                             n.grad_gauged, M_db2(d, delta, b2).value, n.zf));
  out.push_back(make_verdict("inverse-z-uniform", delta, inside, true,
                             n.u_over_z, mu_db(d, b1, b2).value, n.zf));
  out.push_back(chain_verdict(base, s, delta, n));
  return out;
}

GaugedField gauge_transform(std::shared_ptr<const Field> u, cplx lambda,
                            int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("gauge_transform: sign is +1 or -1");
  const auto s = lambda_scalars(lambda);
  return GaugedField(std::move(u), sign * s.theta);
}

GaugeProbe koranyi_gauge_probe(const ResolventBase& base, cplx lambda,
                               double delta) {
  require_delta(delta, "koranyi_gauge_probe");
  const auto s = lambda_scalars(lambda);
  const auto& b = base.pair().fine;
  const double th = s.theta;
  GaugeProbe g;
  g.lhs = root(b.A_1 + th * th * b.B_r2rhoinv2 -
               2 * th * (b.C_r3rhoinv3 + b.E_trrhoinv3));
  g.rhs = K_d(base.dim(), delta) *
          root(rhof_sq(b, s.l1, s.l2));
  g.margin = g.rhs - g.lhs;
  return g;
}

namespace {

// accumulates a signed sum of terms together with their absolute mass
struct Sum {
  double value = 0;
  double mass = 0;
  Sum& add(double term) {
    value += term;
    mass += std::fabs(term);
    return *this;
  }
};

IdentityCheck make_identity(std::string name, const Sum& lhs, const Sum& rhs,
                            double data_mass, double tol, bool applicable) {
  IdentityCheck c;
  c.name = std::move(name);
  c.applicable = applicable;
  c.lhs = lhs.value;
  c.rhs = rhs.value;
  c.residual = std::fabs(lhs.value - rhs.value);
  c.scale = std::max(lhs.mass + rhs.mass, 1e-2 * data_mass);
  c.rel = applicable ? c.residual / c.scale : 0.0;
  c.pass = !applicable || c.rel <= tol;
  return c;
}

IdentityCheck gauged_row(const BaseIntegrals& b, int d, const LambdaScalars& s,
                         double mass, double tol, bool applicable) {
  const double th = applicable ? s.theta : 0;
  const double q = applicable ? s.q : 0;
  Sum lhs, rhs;
  lhs.add(b.A_1)
      .add(th * th * b.B_1)
      .add(-2 * th * b.C_1)
      .add(-8 * b.Tw_r)
      .add(q * b.A_r)
      .add(q * th * th * b.B_r)
      .add(-2 * q * th * b.C_r)
      .add(-(d - 0.5) * q * b.B_rinv)
      .add(q * b.B_rV)
      .add(-b.B_drrV);
  rhs.add(-(2 * d - 1) * (b.Rg_1 + s.l1 * b.B_1))
      .add(-q * (b.Rg_r + s.l1 * b.B_r))
      .add(-2 * (b.G_r + s.l1 * b.D_r + s.l2 * b.C_r))
      .add(2 * th * (b.Ig_r + s.l2 * b.B_r));
  return make_identity("gauged-combination", lhs, rhs, mass, tol, applicable);
}

}  // namespace

std::vector<IdentityCheck> multiplier_identities(const ResolventBase& base,
                                                 cplx lambda, double tol) {
  const BaseIntegrals& b = base.pair().fine;
  const auto s = lambda_scalars(lambda);
  const int d = base.dim();
  const double mass = b.A_1 + (1 + std::norm(lambda)) * b.B_1 + b.g2_1;

  std::vector<IdentityCheck> out;
  {
    Sum lhs, rhs;
    lhs.add(-b.A_1).add(-b.B_V).add(s.l1 * b.B_1);
    rhs.add(b.Rg_1).add(s.l1 * b.B_1);
    out.push_back(make_identity("real-multiplier-1", lhs, rhs, mass, tol, true));
  }
  {
    Sum lhs, rhs;
    lhs.add((d - 0.5) * b.B_rinv).add(-b.A_r).add(-b.B_rV).add(s.l1 * b.B_r);
    rhs.add(b.Rg_r).add(s.l1 * b.B_r);
    out.push_back(make_identity("real-multiplier-z", lhs, rhs, mass, tol, true));
  }
  {
    Sum lhs, rhs;
    lhs.add(s.l2 * b.B_1);
    rhs.add(b.Ig_1).add(s.l2 * b.B_1);
    out.push_back(make_identity("imag-multiplier-1", lhs, rhs, mass, tol, true));
  }
  {
    Sum lhs, rhs;
    lhs.add(-2 * b.C_1).add(2 * s.l2 * b.B_r);
    rhs.add(2 * b.Ig_r).add(2 * s.l2 * b.B_r);
    out.push_back(make_identity("imag-multiplier-z", lhs, rhs, mass, tol, true));
  }
  {
    Sum lhs, rhs;
    lhs.add(b.D_r);
    rhs.add(-static_cast<double>(d) * b.B_1);
    out.push_back(make_identity("radial-virial", lhs, rhs, mass, tol, true));
  }
  {
    // the radial multiplier sees V only through r dV/dr = d(rV)/dr - V
    Sum lhs, rhs;
    lhs.add(2 * b.A_1)
        .add(-8 * b.Tw_r)
        .add(-(b.B_drrV - b.B_V))
        .add(-2 * s.l2 * b.C_r);
    rhs.add(-2 * d * (b.Rg_1 + s.l1 * b.B_1))
        .add(-2 * (b.G_r + s.l1 * b.D_r + s.l2 * b.C_r));
    out.push_back(
        make_identity("commutator-multiplier", lhs, rhs, mass, tol, true));
  }
  {
    const bool app = s.l1 >= 0;
    const double th = app ? s.theta : 0;
    Sum lhs, rhs;
    lhs.add(b.A_1)
        .add(-8 * b.Tw_r)
        .add(-b.B_drrV)
        .add(s.l1 * b.B_1)
        .add(-2 * th * b.C_1)
        .add(2 * th * s.l2 * b.B_r)
        .add(-2 * s.l2 * b.C_r);
    rhs.add((1 - 2 * d) * (b.Rg_1 + s.l1 * b.B_1))
        .add(2 * th * (b.Ig_r + s.l2 * b.B_r))
        .add(-2 * (b.G_r + s.l1 * b.D_r + s.l2 * b.C_r));
    out.push_back(make_identity("combined-multiplier", lhs, rhs, mass, tol, app));
  }
  out.push_back(gauged_row(b, d, s, mass, tol, s.q_ok && s.l1 >= 0));
  return out;
}

IdentityCheck gauged_combination(const ResolventBase& base, cplx lambda,
                                 double tol) {
  const auto s = lambda_scalars(lambda);
  if (s.l1 < 0)
    throw std::domain_error("gauged_combination: Re lambda >= 0 required");
  if (!s.q_ok)
    throw std::domain_error(
        "gauged_combination: gauge slope degenerates at Re lambda = 0; "
        "use the off-cone branch");
  const BaseIntegrals& b = base.pair().fine;
  const double mass = b.A_1 + (1 + std::norm(lambda)) * b.B_1 + b.g2_1;
  return gauged_row(b, base.dim(), s, mass, tol, true);
}

double consistency_residual(const ResolventBase& base, cplx lambda,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> co(-2.0, 2.0), vt(-3.0, 3.0);
  const PolyGaussianField& u = *base.member().field;
  const PolyGaussianField lu = u.sublap();
  const int d = base.dim();
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    HPoint p = HPoint::zero(d);
    do {
      for (int j = 0; j < d; ++j) {
        p.x[j] = co(rng);
        p.y[j] = co(rng);
      }
    } while (zmod(p) < 0.3);
    p.t = vt(rng);
    const double vv =
        base.has_potential() ? base.potential()->value(zmod(p), p.t) : 0.0;
    const cplx uv = u.value(p);
    const cplx fa = -lu.value(p) - vv * uv + lambda * uv;
    const cplx fb = -sublaplacian(u, p) - vv * uv + lambda * uv;
    worst = std::max(worst, std::abs(fa - fb) / (1 + std::abs(fa)));
  }
  return worst;
}

std::vector<cplx> lambda_grid(double delta) {
  require_delta(delta, "lambda_grid");
  return {cplx(1, 0),           cplx(4, 0),
          cplx(0, 1),           cplx(0, 2),
          cplx(-1, 0.5),        cplx(-2, 1),
          cplx(1, delta),       cplx(1, -delta),
          cplx(2, 2 * delta),   cplx(3, 1.5 * delta),
          cplx(1, 2 * delta),   cplx(0.5, 0.25 * delta)};
}

// ---------------------------------------------------------------------------
// discrete mode

namespace {

struct DGrid {
  int n = 0, nt = 0;
  double h = 0, ht = 0;
  std::vector<double> c;   // horizontal coordinates
  std::vector<double> tv;  // vertical coordinates

  std::size_t size() const {
    return static_cast<std::size_t>(n) * n * n * n * nt;
  }
};

DGrid make_grid(const DiscreteParams& p) {
  DGrid g;
  g.n = p.n_xy;
  g.nt = p.n_t;
  g.h = 2 * p.box_xy / (p.n_xy + 1);
  g.ht = 2 * p.box_t / p.n_t;
  g.c.resize(p.n_xy);
  for (int i = 0; i < p.n_xy; ++i) g.c[i] = -p.box_xy + (i + 1) * g.h;
  g.tv.resize(p.n_t);
  for (int k = 0; k < p.n_t; ++k) g.tv[k] = -p.box_t + k * g.ht;
  return g;
}

// central difference along one horizontal axis (Dirichlet) plus the
// coordinate-weighted central difference along periodic t; each frame is
// skew, so the composed sublaplacian is symmetric positive semidefinite
class DiscreteOp {
 public:
  DiscreteOp(const DGrid& g, cplx lambda) : g_(g), lambda_(lambda) {
    t1_.resize(g_.size());
    t2_.resize(g_.size());
  }

  // which: 0 -> X_1, 1 -> X_2, 2 -> Y_1, 3 -> Y_2
  void frame(int which, const std::vector<cplx>& in,
             std::vector<cplx>& out) const {
    const int n = g_.n, nt = g_.nt;
    const std::size_t st[4] = {static_cast<std::size_t>(n) * n * n * nt,
                               static_cast<std::size_t>(n) * n * nt,
                               static_cast<std::size_t>(n) * nt,
                               static_cast<std::size_t>(nt)};
    const bool is_x = which < 2;
    const int axis = which;                          // slot of the spatial axis
    const int cross = is_x ? which + 2 : which - 2;  // paired coordinate slot
    const double ih = 1 / (2 * g_.h);
    const double iht = 1 / (2 * g_.ht);
    std::size_t p = 0;
    int id[4];
    for (id[0] = 0; id[0] < n; ++id[0])
      for (id[1] = 0; id[1] < n; ++id[1])
        for (id[2] = 0; id[2] < n; ++id[2])
          for (id[3] = 0; id[3] < n; ++id[3]) {
            const double coord = g_.c[id[cross]];
            const double tfac = (is_x ? 2.0 : -2.0) * coord * iht;
            const int ia = id[axis];
            const std::size_t sa = st[axis];
            for (int k = 0; k < nt; ++k, ++p) {
              cplx v = 0;
              if (ia + 1 < n) v += in[p + sa];
              if (ia > 0) v -= in[p - sa];
              v *= ih;
              const std::size_t up = (k + 1 < nt) ? p + 1 : p + 1 - nt;
              const std::size_t dn = (k > 0) ? p - 1 : p - 1 + nt;
              v += tfac * (in[up] - in[dn]);
              out[p] = v;
            }
          }
  }

  // out = (-L_h + lambda) in
  void apply(const std::vector<cplx>& in, std::vector<cplx>& out) const {
    const std::size_t N = g_.size();
    for (std::size_t i = 0; i < N; ++i) out[i] = lambda_ * in[i];
    for (int w = 0; w < 4; ++w) {
      frame(w, in, t1_);
      frame(w, t1_, t2_);
      for (std::size_t i = 0; i < N; ++i) out[i] += t2_[i];
    }
  }

 private:
  const DGrid& g_;
  cplx lambda_;
  mutable std::vector<cplx> t1_, t2_;
};

cplx vdot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double vnorm(const std::vector<cplx>& a) { return std::sqrt(std::real(vdot(a, a))); }

struct SolveStats {
  double residual = 0;
  int iterations = 0;
  bool converged = false;
};

// unpreconditioned BiCGStab; x starts at zero
SolveStats bicgstab(const DiscreteOp& A, const std::vector<cplx>& rhs,
                    std::vector<cplx>& x, double tol, int max_iter) {
  const std::size_t N = rhs.size();
  x.assign(N, 0);
  std::vector<cplx> r = rhs, r0 = rhs, pvec(N, 0), v(N, 0), svec(N), tvec(N);
  const double bnorm = vnorm(rhs);
  SolveStats st;
  if (bnorm == 0) {
    st.converged = true;
    return st;
  }
  cplx rho = 1, alpha = 1, omega = 1;
  double resid = 1;
  for (int it = 1; it <= max_iter; ++it) {
    const cplx rho1 = vdot(r0, r);
    if (std::abs(rho1) < 1e-300) break;
    if (it == 1) {
      pvec = r;
    } else {
      const cplx beta = (rho1 / rho) * (alpha / omega);
      for (std::size_t i = 0; i < N; ++i)
        pvec[i] = r[i] + beta * (pvec[i] - omega * v[i]);
    }
    rho = rho1;
    A.apply(pvec, v);
    alpha = rho / vdot(r0, v);
    for (std::size_t i = 0; i < N; ++i) svec[i] = r[i] - alpha * v[i];
    if (vnorm(svec) / bnorm < tol) {
      for (std::size_t i = 0; i < N; ++i) x[i] += alpha * pvec[i];
      st.residual = vnorm(svec) / bnorm;
      st.iterations = it;
      st.converged = true;
      return st;
    }
    A.apply(svec, tvec);
    omega = vdot(tvec, svec) / vdot(tvec, tvec);
    for (std::size_t i = 0; i < N; ++i) {
      x[i] += alpha * pvec[i] + omega * svec[i];
      r[i] = svec[i] - omega * tvec[i];
    }
    resid = vnorm(r) / bnorm;
    st.residual = resid;
    st.iterations = it;
    if (resid < tol) {
      st.converged = true;
      return st;
    }
    if (std::abs(omega) < 1e-300) break;
  }
  return st;
}

}  // namespace

DiscreteReport discrete_solve(const FamilyMember& m, cplx lambda,
                              const DiscreteParams& p) {
  if (m.field->dim() != 2)
    throw std::invalid_argument("discrete_solve: d = 2 only");
  if (p.n_xy < 4 || p.n_xy > 16 || p.n_t < 4 || p.n_t > 16)
    throw std::invalid_argument("discrete_solve: 4..16 points per axis");

  const DGrid g = make_grid(p);
  const std::size_t N = g.size();
  const PolyGaussianField& u = *m.field;
  const PolyGaussianField lu = u.sublap();

  std::vector<cplx> u0(N), fc(N);
  std::vector<double> r2(N);
  {
    std::size_t idx = 0;
    HPoint pt = HPoint::zero(2);
    for (int ix = 0; ix < g.n; ++ix)
      for (int jx = 0; jx < g.n; ++jx)
        for (int iy = 0; iy < g.n; ++iy)
          for (int jy = 0; jy < g.n; ++jy) {
            pt.x[0] = g.c[ix];
            pt.x[1] = g.c[jx];
            pt.y[0] = g.c[iy];
            pt.y[1] = g.c[jy];
            const double rr = pt.x[0] * pt.x[0] + pt.x[1] * pt.x[1] +
                              pt.y[0] * pt.y[0] + pt.y[1] * pt.y[1];
            for (int k = 0; k < g.nt; ++k, ++idx) {
              pt.t = g.tv[k];
              const cplx uv = u.value(pt);
              u0[idx] = uv;
              fc[idx] = -lu.value(pt) + lambda * uv;
              r2[idx] = rr;
            }
          }
  }

  const DiscreteOp A(g, lambda);
  DiscreteReport rep;
  rep.n_xy = g.n;
  rep.n_t = g.nt;

  // manufactured right-hand side round trip
  std::vector<cplx> fm(N), x(N);
  A.apply(u0, fm);
  SolveStats s1 = bicgstab(A, fm, x, p.tol, p.max_iter);
  const double u0n = vnorm(u0);
  {
    std::vector<cplx> diff(N);
    for (std::size_t i = 0; i < N; ++i) diff[i] = x[i] - u0[i];
    rep.recovery_error = vnorm(diff) / u0n;
  }

  // continuum right-hand side
  std::vector<cplx> y(N);
  SolveStats s2 = bicgstab(A, fc, y, p.tol, p.max_iter);
  {
    std::vector<cplx> diff(N);
    for (std::size_t i = 0; i < N; ++i) diff[i] = y[i] - u0[i];
    rep.sample_error = vnorm(diff) / u0n;
  }

  rep.residual = std::max(s1.residual, s2.residual);
  rep.iterations = s1.iterations + s2.iterations;
  rep.converged = s1.converged && s2.converged;
  if (!rep.converged)
    throw std::runtime_error(
        "discrete_solve: no convergence, residual " +
        std::to_string(rep.residual));

  // indicative off-cone margin for the solved pair at delta = 1
  {
    std::vector<cplx> fr(N);
    double grad2 = 0;
    for (int w = 0; w < 4; ++w) {
      A.frame(w, y, fr);
      for (std::size_t i = 0; i < N; ++i) grad2 += std::norm(fr[i]);
    }
    double zf2 = 0;
    for (std::size_t i = 0; i < N; ++i) zf2 += r2[i] * std::norm(fc[i]);
    const double vol = g.h * g.h * g.h * g.h * g.ht;
    const double c1 = 2.0;  // (1 + 1/delta)/(d-1) at delta = 1, d = 2
    rep.offcone_margin = c1 * std::sqrt(vol * zf2) - std::sqrt(vol * grad2);
  }
  return rep;
}

}  // namespace heis
