#include "heis/simd.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace heis::simd {

namespace detail {

double reduce_add_scalar(const double* x, std::size_t n) {
  double a0 = 0, a1 = 0, a2 = 0, a3 = 0;
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    a0 += x[i];
    a1 += x[i + 1];
    a2 += x[i + 2];
    a3 += x[i + 3];
  }
  // tail element k goes to lane k, matching the vector backend's masked load
  switch (n - n4) {
    case 3: a2 += x[n4 + 2]; [[fallthrough]];
    case 2: a1 += x[n4 + 1]; [[fallthrough]];
    case 1: a0 += x[n4 + 0]; break;
    default: break;
  }
  return (a0 + a1) + (a2 + a3);
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double a0 = 0, a1 = 0, a2 = 0, a3 = 0;
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    a0 = std::fma(x[i], y[i], a0);
    a1 = std::fma(x[i + 1], y[i + 1], a1);
    a2 = std::fma(x[i + 2], y[i + 2], a2);
    a3 = std::fma(x[i + 3], y[i + 3], a3);
  }
  switch (n - n4) {
    case 3: a2 = std::fma(x[n4 + 2], y[n4 + 2], a2); [[fallthrough]];
    case 2: a1 = std::fma(x[n4 + 1], y[n4 + 1], a1); [[fallthrough]];
    case 1: a0 = std::fma(x[n4 + 0], y[n4 + 0], a0); break;
    default: break;
  }
  return (a0 + a1) + (a2 + a3);
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend resolve(Backend want) {
  if (want == Backend::auto_detect) {
    if (const char* env = std::getenv("HEIS_SIMD")) {
      if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
      if (std::strcmp(env, "avx2") == 0) want = Backend::avx2;
    }
  }
  const bool can = cpu_has_avx2() && detail::avx2_compiled();
  if (want == Backend::scalar) return Backend::scalar;
  return can ? Backend::avx2 : Backend::scalar;
}

Backend g_active = resolve(Backend::auto_detect);

}  // namespace

void set_backend(Backend b) { g_active = resolve(b); }

Backend active_backend() { return g_active; }

const char* backend_name() {
  return g_active == Backend::avx2 ? "avx2" : "scalar";
}

bool avx2_supported() { return cpu_has_avx2() && detail::avx2_compiled(); }

double reduce_add(std::span<const double> x) {
  if (g_active == Backend::avx2) return detail::reduce_add_avx2(x.data(), x.size());
  return detail::reduce_add_scalar(x.data(), x.size());
}

double dot(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size() < y.size() ? x.size() : y.size();
  if (g_active == Backend::avx2) return detail::dot_avx2(x.data(), y.data(), n);
  return detail::dot_scalar(x.data(), y.data(), n);
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size() < y.size() ? x.size() : y.size();
  if (g_active == Backend::avx2) {
    detail::axpy_avx2(a, x.data(), y.data(), n);
    return;
  }
  detail::axpy_scalar(a, x.data(), y.data(), n);
}

}  // namespace heis::simd
