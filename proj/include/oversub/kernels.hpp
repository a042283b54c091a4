#pragma once
// Dense double-precision kernels used by the nets, the environments and the
// metric code. Every operation has a scalar reference implementation plus
// SIMD variants (AVX2 on x86-64, NEON on aarch64) selected once at startup;
// tests assert the variants agree with the scalar lane.

#include <cstddef>
#include <string_view>

namespace oversub::kernels {

enum class Backend { Scalar, Avx2, Neon };

// Backend chosen at startup: best available unless the OVERSUB_KERNELS
// environment variable (scalar|avx2|neon) says otherwise.
Backend active_backend();
bool backend_available(Backend b);
std::string_view backend_name(Backend b);

// Pin a backend for the rest of the process (throws std::invalid_argument
// if the hardware lacks it). Used by the equivalence tests.
void force_backend(Backend b);
void reset_backend();

// out[r] = bias[r] + sum_c w[r*cols + c] * x[c]     (bias may be null)
void matvec(const double* w, const double* x, const double* bias, double* out,
            std::size_t rows, std::size_t cols);

// dx[c] = sum_r w[r*cols + c] * dy[r]               (transposed product)
void matvec_t(const double* w, const double* dy, double* dx,
              std::size_t rows, std::size_t cols);

// dw[r*cols + c] += dy[r] * x[c]                    (rank-1 accumulate)
void ger_acc(double* dw, const double* dy, const double* x,
             std::size_t rows, std::size_t cols);

// y[i] += a * x[i]
void axpy(double a, const double* x, double* y, std::size_t n);

double dot(const double* a, const double* b, std::size_t n);

double sum(const double* x, std::size_t n);

// sum_i (x[i] - mean)^2
double sumsq_dev(const double* x, std::size_t n, double mean);

// x[i] *= a
void scale(double a, double* x, std::size_t n);

// x[i] = min(1, max(0, x[i]))
void clamp01(double* x, std::size_t n);

}  // namespace oversub::kernels
