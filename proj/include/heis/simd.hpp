#pragma once

// Vector kernels used by the quadrature accumulators.  Two backends, one
// contract: the scalar reference and the AVX2 variant perform the same
// fused-multiply-add operations in the same order, so results agree bit for
// bit.  Reductions stripe the input over four lanes (element i feeds lane
// i mod 4 in the aligned body, trailing element k feeds lane k) and combine
// as (l0+l1)+(l2+l3).

#include <cstddef>
#include <span>

namespace heis::simd {

enum class Backend { auto_detect, scalar, avx2 };

// Selects the backend for subsequent calls.  Requesting avx2 on a host
// without AVX2+FMA resolves to scalar.
void set_backend(Backend b);

// The resolved backend (never auto_detect).
Backend active_backend();
const char* backend_name();

// True when the running CPU supports the avx2 backend.
bool avx2_supported();

// sum_i x[i]
double reduce_add(std::span<const double> x);

// sum_i x[i]*y[i]
double dot(std::span<const double> x, std::span<const double> y);

// y[i] += a*x[i]
void axpy(double a, std::span<const double> x, std::span<double> y);

namespace detail {
double reduce_add_scalar(const double* x, std::size_t n);
double dot_scalar(const double* x, const double* y, std::size_t n);
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
double reduce_add_avx2(const double* x, std::size_t n);
double dot_avx2(const double* x, const double* y, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
bool avx2_compiled();
}  // namespace detail

}  // namespace heis::simd
