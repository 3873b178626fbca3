#pragma once

// Horizontal calculus on top of the Field interface.  Frame indices follow
// geometry.hpp: 0..d-1 select X_j, d..2d-1 select Y_j.

#include <complex>
#include <memory>
#include <vector>

#include "heis/field.hpp"

namespace heis {

// Analytic route through exact partials.
cplx apply_field(const Field& f, int frame_idx, const HPoint& p);
cplx apply_field_t(const Field& f, const HPoint& p);

// Central difference along the group flow exp(s X_j); O(h^2).
cplx apply_field_fd(const Field& f, int frame_idx, const HPoint& p, double h);

std::vector<cplx> horizontal_gradient(const Field& f, const HPoint& p);
double horizontal_gradient_sq(const Field& f, const HPoint& p);

// L f = -sum_j (X_j^2 + Y_j^2) f, expanded in Euclidean partials.
cplx sublaplacian(const Field& f, const HPoint& p);

// d/dr along the cylindrical radius, i.e. omega . grad_H with omega = z/|z|.
cplx radial_derivative(const Field& f, const HPoint& p);

// Euclidean-coordinate vector field with 2d+1 components.
struct VectorField {
  std::vector<std::shared_ptr<const Field>> comp;
  int dim() const { return (static_cast<int>(comp.size()) - 1) / 2; }
};

// div_H h = div(sigma^T sigma h)
cplx div_horizontal(const VectorField& h, const HPoint& p);

// |sigma h|^2, the squared horizontal length of h
double sigma_length_sq(const VectorField& h, const HPoint& p);

}  // namespace heis
