#include "heis/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "heis/simd.hpp"

namespace heis {

namespace {

// one monomial of a compiled polynomial: coeff * r^rdeg * t^tdeg * M_key(w)
struct TermRef {
  int key;
  int rdeg;
  int tdeg;
  cplx coeff;
};

// interns angular exponent vectors shared by all fields of one member
struct AngularTable {
  int n_ang;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> keys;

  std::vector<TermRef> compile(const Poly& p) {
    std::vector<TermRef> out;
    out.reserve(p.terms().size());
    for (const auto& [mono, c] : p.terms()) {
      std::vector<int> ang(mono.begin(), mono.begin() + n_ang);
      int rdeg = 0;
      for (int e : ang) rdeg += e;
      auto [it, fresh] = index.try_emplace(ang, static_cast<int>(keys.size()));
      if (fresh) keys.push_back(ang);
      out.push_back({it->second, rdeg, mono[static_cast<size_t>(n_ang)], c});
    }
    return out;
  }
};

}  // namespace

BaseIntegrals compute_base_integrals(const PolyGaussianField& u,
                                     const CylinderRule& rule,
                                     const SlabPotential* V) {
  const int d = u.dim();
  if (rule.d != d)
    throw std::invalid_argument("compute_base_integrals: rule dimension mismatch");
  const int n = 2 * d;
  const int F = n + 3;  // u, 2d gradient components, Lu, Tu

  // symbolic closure: every derived field keeps u's envelope
  std::vector<Poly> polys;
  polys.reserve(static_cast<size_t>(F));
  polys.push_back(u.poly());
  for (int j = 0; j < n; ++j) polys.push_back(u.frame(j).poly());
  polys.push_back(u.sublap().poly());
  polys.push_back(u.vertical().poly());

  AngularTable tab{n, {}, {}};
  std::vector<std::vector<TermRef>> terms;
  terms.reserve(polys.size());
  int maxr = 0, maxt = 0;
  for (const Poly& p : polys) {
    terms.push_back(tab.compile(p));
    for (const TermRef& t : terms.back()) {
      maxr = std::max(maxr, t.rdeg);
      maxt = std::max(maxt, t.tdeg);
    }
  }

  const std::size_t S = rule.sphere.size();
  const int K = static_cast<int>(tab.keys.size());

  // angular monomial rows over the sphere nodes
  std::vector<double> ang(static_cast<std::size_t>(K) * S);
  for (int k = 0; k < K; ++k) {
    const std::vector<int>& e = tab.keys[static_cast<size_t>(k)];
    double* row = ang.data() + static_cast<std::size_t>(k) * S;
    for (std::size_t s = 0; s < S; ++s) {
      const double* om = rule.sphere.node(s);
      double v = 1;
      for (int i = 0; i < n; ++i)
        for (int q = 0; q < e[static_cast<size_t>(i)]; ++q) v *= om[i];
      row[s] = v;
    }
  }

  std::vector<std::vector<double>> vre(static_cast<size_t>(F)),
      vim(static_cast<size_t>(F));
  for (int f = 0; f < F; ++f) {
    vre[static_cast<size_t>(f)].resize(S);
    vim[static_cast<size_t>(f)].resize(S);
  }
  std::vector<double> rad_re(S), rad_im(S), tan_re(S), tan_im(S);
  std::vector<double> g_re(S), g_im(S);
  std::vector<double> qB(S), qA(S), qC(S), qE(S), qD(S), qG(S), qTw(S), qg2(S),
      qRg(S), qIg(S);
  std::vector<double> rpow(static_cast<size_t>(maxr) + 1),
      tpow(static_cast<size_t>(maxt) + 1);

  const double a2 = 2 * u.decay_z();
  const double b2 = 2 * u.decay_t();
  const std::span<const double> sw(rule.sphere.w);

  BaseIntegrals out;
  for (std::size_t i = 0; i < rule.radial.x.size(); ++i) {
    const double r = rule.radial.x[i];
    const double wrad = rule.radial_measure[i];
    rpow[0] = 1;
    for (int q = 1; q <= maxr; ++q)
      rpow[static_cast<size_t>(q)] = rpow[static_cast<size_t>(q) - 1] * r;

    for (std::size_t j = 0; j < rule.vertical.x.size(); ++j) {
      const double t = rule.vertical.x[j];
      tpow[0] = 1;
      for (int q = 1; q <= maxt; ++q)
        tpow[static_cast<size_t>(q)] = tpow[static_cast<size_t>(q) - 1] * t;

      // fold radial and vertical factors, then rank-one angular updates
      for (int f = 0; f < F; ++f) {
        std::fill(vre[static_cast<size_t>(f)].begin(),
                  vre[static_cast<size_t>(f)].end(), 0.0);
        std::fill(vim[static_cast<size_t>(f)].begin(),
                  vim[static_cast<size_t>(f)].end(), 0.0);
        for (const TermRef& tr : terms[static_cast<size_t>(f)]) {
          const cplx w = tr.coeff * rpow[static_cast<size_t>(tr.rdeg)] *
                         tpow[static_cast<size_t>(tr.tdeg)];
          const std::span<const double> row(
              ang.data() + static_cast<std::size_t>(tr.key) * S, S);
          simd::axpy(w.real(), row, vre[static_cast<size_t>(f)]);
          simd::axpy(w.imag(), row, vim[static_cast<size_t>(f)]);
        }
      }

      const double Vv = V ? V->value(r, t) : 0.0;
      const double Vd = V ? V->drrV(r, t) : 0.0;

      for (std::size_t s = 0; s < S; ++s) {
        const double* om = rule.sphere.node(s);
        double rr = 0, ri = 0, tr_ = 0, ti = 0;
        for (int k = 0; k < d; ++k) {
          const double ox = om[k], oy = om[d + k];
          const std::size_t jx = static_cast<size_t>(1 + k);
          const std::size_t jy = static_cast<size_t>(1 + d + k);
          rr += ox * vre[jx][s] + oy * vre[jy][s];
          ri += ox * vim[jx][s] + oy * vim[jy][s];
          tr_ += oy * vre[jx][s] - ox * vre[jy][s];
          ti += oy * vim[jx][s] - ox * vim[jy][s];
        }
        rad_re[s] = rr;
        rad_im[s] = ri;
        tan_re[s] = tr_;
        tan_im[s] = ti;

        const std::size_t lu = static_cast<size_t>(n) + 1;
        const std::size_t tu = static_cast<size_t>(n) + 2;
        const double ure = vre[0][s], uim = vim[0][s];
        const double gre = -vre[lu][s] - Vv * ure;
        const double gim = -vim[lu][s] - Vv * uim;
        g_re[s] = gre;
        g_im[s] = gim;

        qB[s] = ure * ure + uim * uim;
        double asum = 0;
        for (int c = 1; c <= n; ++c)
          asum += vre[static_cast<size_t>(c)][s] * vre[static_cast<size_t>(c)][s] +
                  vim[static_cast<size_t>(c)][s] * vim[static_cast<size_t>(c)][s];
        qA[s] = asum;
        qC[s] = ure * ri - uim * rr;
        qD[s] = ure * rr + uim * ri;
        qE[s] = ure * ti - uim * tr_;
        qG[s] = rr * gre + ri * gim;
        qTw[s] = vre[tu][s] * tr_ + vim[tu][s] * ti;
        qg2[s] = gre * gre + gim * gim;
        qRg[s] = ure * gre + uim * gim;
        qIg[s] = ure * gim - uim * gre;
      }

      const double sB = simd::dot(qB, sw);
      const double sA = simd::dot(qA, sw);
      const double sC = simd::dot(qC, sw);
      const double sE = simd::dot(qE, sw);
      const double sD = simd::dot(qD, sw);
      const double sG = simd::dot(qG, sw);
      const double sTw = simd::dot(qTw, sw);
      const double sg2 = simd::dot(qg2, sw);
      const double sRg = simd::dot(qRg, sw);
      const double sIg = simd::dot(qIg, sw);

      const double env2 = std::exp(-(a2 * r * r + b2 * t * t));
      const double base = wrad * rule.vertical.w[j] * env2;

      const double r2 = r * r;
      const double rho2 = std::sqrt(r2 * r2 + t * t);
      const double rho3 = rho2 * std::sqrt(rho2);

      out.B_1 += base * sB;
      out.B_r += base * r * sB;
      out.B_r2 += base * r2 * sB;
      out.B_rinv += base / r * sB;
      out.B_rinv2 += base / r2 * sB;
      out.B_rhoinv2 += base / rho2 * sB;
      out.B_r2rhoinv4 += base * r2 / (rho2 * rho2) * sB;
      out.B_rho2 += base * rho2 * sB;
      out.B_r2rhoinv2 += base * r2 / rho2 * sB;
      out.B_V += base * Vv * sB;
      out.B_rV += base * r * Vv * sB;
      out.B_drrV += base * Vd * sB;
      out.A_1 += base * sA;
      out.A_r += base * r * sA;
      out.C_1 += base * sC;
      out.C_r += base * r * sC;
      out.C_r3rhoinv3 += base * r2 * r / rho3 * sC;
      out.E_trrhoinv3 += base * t * r / rho3 * sE;
      out.D_r += base * r * sD;
      out.G_r += base * r * sG;
      out.Tw_r += base * r * sTw;
      out.g2_1 += base * sg2;
      out.g2_r2 += base * r2 * sg2;
      out.g2_rho2 += base * rho2 * sg2;
      out.Rg_1 += base * sRg;
      out.Rg_r += base * r * sRg;
      out.Rg_r2 += base * r2 * sRg;
      out.Rg_rho2 += base * rho2 * sRg;
      out.Ig_1 += base * sIg;
      out.Ig_r += base * r * sIg;
      out.Ig_r2 += base * r2 * sIg;
      out.Ig_rho2 += base * rho2 * sIg;
    }
  }
  return out;
}

BasePair compute_base_pair(const PolyGaussianField& u, const CylinderRule& fine,
                           const CylinderRule& coarse, const SlabPotential* V) {
  return {compute_base_integrals(u, fine, V),
          compute_base_integrals(u, coarse, V)};
}

}  // namespace heis
