#include "heis/calculus.hpp"

#include <cmath>
#include <stdexcept>

namespace heis {

cplx apply_field(const Field& f, int frame_idx, const HPoint& p) {
  const int d = f.dim();
  if (frame_idx < 0 || frame_idx >= 2 * d)
    throw std::invalid_argument("apply_field: frame index out of range");
  const int tvar = 2 * d;
  if (frame_idx < d)
    return f.partial(p, frame_idx) + 2.0 * p.y[frame_idx] * f.partial(p, tvar);
  const int j = frame_idx - d;
  return f.partial(p, frame_idx) - 2.0 * p.x[j] * f.partial(p, tvar);
}

cplx apply_field_t(const Field& f, const HPoint& p) {
  return f.partial(p, 2 * f.dim());
}

cplx apply_field_fd(const Field& f, int frame_idx, const HPoint& p, double h) {
  const int d = f.dim();
  if (frame_idx < 0 || frame_idx >= 2 * d)
    throw std::invalid_argument("apply_field_fd: frame index out of range");
  HPoint step = HPoint::zero(d);
  if (frame_idx < d)
    step.x[frame_idx] = h;
  else
    step.y[frame_idx - d] = h;
  const HPoint fwd = group_multiply(p, step);
  step = group_inverse(step);
  const HPoint bwd = group_multiply(p, step);
  return (f.value(fwd) - f.value(bwd)) / (2 * h);
}

std::vector<cplx> horizontal_gradient(const Field& f, const HPoint& p) {
  const int d = f.dim();
  std::vector<cplx> g(2 * d);
  const cplx ft = f.partial(p, 2 * d);
  for (int j = 0; j < d; ++j) {
    g[j] = f.partial(p, j) + 2.0 * p.y[j] * ft;
    g[d + j] = f.partial(p, d + j) - 2.0 * p.x[j] * ft;
  }
  return g;
}

double horizontal_gradient_sq(const Field& f, const HPoint& p) {
  double s = 0;
  for (const cplx& g : horizontal_gradient(f, p)) s += std::norm(g);
  return s;
}

cplx sublaplacian(const Field& f, const HPoint& p) {
  const int d = f.dim();
  const int tvar = 2 * d;
  cplx lap = 0;
  double r2 = 0;
  cplx twist = 0;
  for (int j = 0; j < d; ++j) {
    lap += f.partial2(p, j, j) + f.partial2(p, d + j, d + j);
    twist += p.y[j] * f.partial2(p, j, tvar) - p.x[j] * f.partial2(p, d + j, tvar);
    r2 += p.x[j] * p.x[j] + p.y[j] * p.y[j];
  }
  return -(lap + 4.0 * twist + 4.0 * r2 * f.partial2(p, tvar, tvar));
}

cplx radial_derivative(const Field& f, const HPoint& p) {
  const double r = zmod(p);
  if (r == 0) throw std::domain_error("radial_derivative on the center axis");
  const auto g = horizontal_gradient(f, p);
  const int d = f.dim();
  cplx s = 0;
  for (int j = 0; j < d; ++j) s += (p.x[j] * g[j] + p.y[j] * g[d + j]) / r;
  return s;
}

cplx div_horizontal(const VectorField& h, const HPoint& p) {
  const int d = h.dim();
  if (static_cast<int>(h.comp.size()) != 2 * d + 1 || d < 1)
    throw std::invalid_argument("div_horizontal: need 2d+1 components");
  cplx s = 0;
  for (int j = 0; j < d; ++j) {
    s += apply_field(*h.comp[j], j, p);
    s += apply_field(*h.comp[d + j], d + j, p);
    s += 2.0 * p.y[j] * apply_field(*h.comp[2 * d], j, p);
    s -= 2.0 * p.x[j] * apply_field(*h.comp[2 * d], d + j, p);
  }
  return s;
}

double sigma_length_sq(const VectorField& h, const HPoint& p) {
  const int d = h.dim();
  const cplx ht = h.comp[2 * d]->value(p);
  double s = 0;
  for (int j = 0; j < d; ++j) {
    s += std::norm(h.comp[j]->value(p) + 2.0 * p.y[j] * ht);
    s += std::norm(h.comp[d + j]->value(p) - 2.0 * p.x[j] * ht);
  }
  return s;
}

}  // namespace heis
