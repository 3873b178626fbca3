#pragma once

// Deterministic quadrature over H^d in cylindrical form
//   integral F = int_0^inf int_R int_{S^{2d-1}} F(r w, t) r^{2d-1} dsigma dr dt.
// Radial and vertical axes use composite Gauss-Legendre panels graded
// toward the origin (gauge weights have a point singularity there and the
// vertical scale of rho collapses like r^2); the sphere uses a product rule
// exact to a requested polynomial degree.

#include <cstdint>
#include <functional>
#include <vector>

#include "heis/field.hpp"
#include "heis/numerics.hpp"

namespace heis {

struct SphereRule {
  int n_dim = 0;                // ambient dimension 2d
  int degree = 0;               // monomials of this total degree integrate exactly
  std::vector<double> coords;   // size() x n_dim, row major
  std::vector<double> w;        // sums to the surface area
  std::size_t size() const { return w.size(); }
  const double* node(std::size_t s) const { return coords.data() + s * n_dim; }
};

SphereRule make_sphere_rule(int n_dim, int degree);
double sphere_area(int n_dim);

struct PanelRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Composite Gauss-Legendre over consecutive [breaks[i], breaks[i+1]].
PanelRule composite_gl(const std::vector<double>& breaks, int nodes_per_panel);

struct CylParams {
  std::vector<double> r_breaks;  // ascending, from 0
  std::vector<double> t_breaks;  // ascending, from 0; mirrored to t<0
  int r_nodes = 8;
  int t_nodes = 8;
  int sphere_degree = 10;
};

// presets: standard carries the full verdict workload, light the wide
// member sweeps, sweep the large inequality batches (sphere exactness
// kept, fewer panel nodes), coarse(p) the error-estimation companion of p
CylParams standard_params(int d);
CylParams light_params(int d);
CylParams sweep_params(int d);
CylParams coarse_params(const CylParams& p);

struct CylinderRule {
  int d = 0;
  PanelRule radial;              // nodes in (0, R)
  PanelRule vertical;            // nodes in (-T, T)
  SphereRule sphere;
  std::vector<double> radial_measure;  // radial.w[i] * r_i^(2d-1)
  std::size_t node_count() const {
    return radial.x.size() * vertical.x.size() * sphere.size();
  }
};

CylinderRule make_cylinder_rule(int d, const CylParams& p);

// Straight summation of F over all nodes; HPoint storage is reused.
double integrate(const CylinderRule& rule,
                 const std::function<double(const HPoint&)>& F);

struct WeightedNorm {
  double value = 0;   // sqrt of the weighted square integral
  double error = 0;   // |fine - coarse| transported to the value
  double square = 0;  // the fine-pass square integral
};

// sqrt( integral weight * |f|^2 ) with a coarse companion pass.
WeightedNorm weighted_l2_norm(const CylinderRule& fine, const CylinderRule& coarse,
                              const Field& f,
                              const std::function<double(const HPoint&)>& weight);

// Stratified Monte Carlo over [-R,R]^{2d+1}: jittered grid with
// strata_per_axis cells per axis, points_per_cell draws in each.
double mc_integrate(int d, double R, int strata_per_axis, int points_per_cell,
                    std::uint64_t seed,
                    const std::function<double(const HPoint&)>& F);

}  // namespace heis
