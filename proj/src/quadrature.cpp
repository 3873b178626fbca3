#include "heis/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace heis {

double sphere_area(int n_dim) {
  // |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2)
  return 2 * std::pow(std::numbers::pi, n_dim / 2.0) / std::tgamma(n_dim / 2.0);
}

SphereRule make_sphere_rule(int n_dim, int degree) {
  if (n_dim < 2) throw std::invalid_argument("make_sphere_rule: need n_dim >= 2");
  if (degree < 1) degree = 1;
  SphereRule rule;
  rule.n_dim = n_dim;
  rule.degree = degree;

  // circle factor: M >= degree+1 kills all aliased Fourier modes
  int M = degree + 2;
  if (M % 2) ++M;
  if (M < 4) M = 4;
  std::vector<std::vector<double>> nodes;
  std::vector<double> w;
  nodes.reserve(M);
  for (int k = 0; k < M; ++k) {
    const double phi = 2 * std::numbers::pi * (k + 0.5) / M;
    nodes.push_back({std::cos(phi), std::sin(phi)});
    w.push_back(2 * std::numbers::pi / M);
  }

  // wrap coordinates: S^m from S^{m-1} with weight (1-u^2)^{(m-2)/2}
  const int nu = (degree + 2) / 2;  // 2*nu - 1 >= degree
  for (int m = 2; m <= n_dim - 1; ++m) {
    const double expo = (m - 2) / 2.0;
    const num::Rule1D ur = num::gauss_jacobi(nu, expo, expo);
    std::vector<std::vector<double>> next;
    std::vector<double> nw;
    next.reserve(nodes.size() * nu);
    nw.reserve(nodes.size() * nu);
    for (int i = 0; i < nu; ++i) {
      const double u = ur.x[i];
      const double s = std::sqrt(std::max(0.0, 1 - u * u));
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        std::vector<double> v;
        v.reserve(nodes[j].size() + 1);
        v.push_back(u);
        for (double c : nodes[j]) v.push_back(s * c);
        next.push_back(std::move(v));
        nw.push_back(ur.w[i] * w[j]);
      }
    }
    nodes = std::move(next);
    w = std::move(nw);
  }

  rule.coords.reserve(nodes.size() * n_dim);
  for (const auto& v : nodes)
    for (double c : v) rule.coords.push_back(c);
  rule.w = std::move(w);
  return rule;
}

PanelRule composite_gl(const std::vector<double>& breaks, int nodes_per_panel) {
  if (breaks.size() < 2)
    throw std::invalid_argument("composite_gl: need at least one panel");
  const num::Rule1D base = num::gauss_legendre(nodes_per_panel);
  PanelRule r;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p], b = breaks[p + 1];
    if (!(b > a)) throw std::invalid_argument("composite_gl: breaks not ascending");
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < nodes_per_panel; ++i) {
      r.x.push_back(mid + half * base.x[i]);
      r.w.push_back(half * base.w[i]);
    }
  }
  return r;
}

CylParams standard_params(int d) {
  CylParams p;
  p.r_breaks = {0, 0.01, 0.05, 0.25, 1, 2, 3, 4.5, 6.5, 9};
  p.t_breaks = {0, 0.012, 0.05, 0.2, 0.8, 2, 3.5, 5.5, 8, 12};
  p.r_nodes = 8;
  p.t_nodes = 8;
  p.sphere_degree = d == 2 ? 10 : (d == 3 ? 8 : 6);
  return p;
}

CylParams light_params(int d) {
  CylParams p;
  p.r_breaks = {0, 0.02, 0.1, 0.5, 1.5, 3, 5, 8};
  p.t_breaks = {0, 0.05, 0.3, 1.2, 3, 6, 10};
  p.r_nodes = 6;
  p.t_nodes = 6;
  p.sphere_degree = d == 2 ? 8 : 6;
  return p;
}

CylParams coarse_params(const CylParams& p) {
  CylParams c = p;
  c.r_nodes = std::max(2, p.r_nodes / 2);
  c.t_nodes = std::max(2, p.t_nodes / 2);
  return c;
}

CylParams sweep_params(int d) {
  CylParams p = light_params(d);
  p.r_nodes = 4;
  p.t_nodes = 4;
  return p;
}

CylinderRule make_cylinder_rule(int d, const CylParams& p) {
  if (d < 1) throw std::invalid_argument("make_cylinder_rule: need d >= 1");
  CylinderRule rule;
  rule.d = d;
  rule.radial = composite_gl(p.r_breaks, p.r_nodes);
  std::vector<double> tb;
  for (auto it = p.t_breaks.rbegin(); it != p.t_breaks.rend(); ++it)
    tb.push_back(-*it);
  for (std::size_t i = 1; i < p.t_breaks.size(); ++i) tb.push_back(p.t_breaks[i]);
  rule.vertical = composite_gl(tb, p.t_nodes);
  rule.sphere = make_sphere_rule(2 * d, p.sphere_degree);
  rule.radial_measure.resize(rule.radial.x.size());
  for (std::size_t i = 0; i < rule.radial.x.size(); ++i)
    rule.radial_measure[i] =
        rule.radial.w[i] * std::pow(rule.radial.x[i], 2 * d - 1);
  return rule;
}

double integrate(const CylinderRule& rule,
                 const std::function<double(const HPoint&)>& F) {
  const int d = rule.d;
  HPoint p = HPoint::zero(d);
  double total = 0;
  for (std::size_t i = 0; i < rule.radial.x.size(); ++i) {
    const double r = rule.radial.x[i];
    const double wr = rule.radial_measure[i];
    for (std::size_t j = 0; j < rule.vertical.x.size(); ++j) {
      p.t = rule.vertical.x[j];
      const double wslab = wr * rule.vertical.w[j];
      double ssum = 0;
      for (std::size_t s = 0; s < rule.sphere.size(); ++s) {
        const double* om = rule.sphere.node(s);
        for (int k = 0; k < d; ++k) {
          p.x[k] = r * om[k];
          p.y[k] = r * om[d + k];
        }
        ssum += rule.sphere.w[s] * F(p);
      }
      total += wslab * ssum;
    }
  }
  return total;
}

WeightedNorm weighted_l2_norm(const CylinderRule& fine, const CylinderRule& coarse,
                              const Field& f,
                              const std::function<double(const HPoint&)>& weight) {
  auto integrand = [&](const HPoint& p) {
    return weight(p) * std::norm(f.value(p));
  };
  WeightedNorm out;
  out.square = integrate(fine, integrand);
  const double csq = integrate(coarse, integrand);
  out.value = std::sqrt(std::max(0.0, out.square));
  const double diff = std::abs(out.square - csq);
  out.error = out.value > 0 ? diff / (2 * out.value) : std::sqrt(diff);
  return out;
}

double mc_integrate(int d, double R, int strata_per_axis, int points_per_cell,
                    std::uint64_t seed,
                    const std::function<double(const HPoint&)>& F) {
  const int axes = 2 * d + 1;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double h = 2 * R / strata_per_axis;
  std::vector<int> idx(axes, 0);
  HPoint p = HPoint::zero(d);
  double total = 0;
  std::size_t cells = 1;
  for (int a = 0; a < axes; ++a) cells *= strata_per_axis;
  for (std::size_t c = 0; c < cells; ++c) {
    // decode cell index
    std::size_t cc = c;
    for (int a = 0; a < axes; ++a) {
      idx[a] = static_cast<int>(cc % strata_per_axis);
      cc /= strata_per_axis;
    }
    double cell_sum = 0;
    for (int k = 0; k < points_per_cell; ++k) {
      for (int a = 0; a < axes; ++a) {
        const double coord = -R + (idx[a] + u01(rng)) * h;
        if (a < d)
          p.x[a] = coord;
        else if (a < 2 * d)
          p.y[a - d] = coord;
        else
          p.t = coord;
      }
      cell_sum += F(p);
    }
    total += cell_sum / points_per_cell;
  }
  double cell_vol = 1;
  for (int a = 0; a < axes; ++a) cell_vol *= h;
  return total * cell_vol;
}

}  // namespace heis
