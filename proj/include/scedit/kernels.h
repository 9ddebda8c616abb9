// Copyright 2026 The scedit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Data-parallel inner loops shared across the library. Each kernel exists in
// an OpenMP variant (default) and a serial reference variant under
// kernels::serial with identical per-element arithmetic; outputs are
// bit-identical, which the test suite and the bench tool rely on.
// Reductions use fixed-size chunking so results do not depend on the thread
// count.

#ifndef SCEDIT_KERNELS_H_
#define SCEDIT_KERNELS_H_

#include <cstddef>

namespace scedit {
namespace kernels {

// Chunk length for deterministic partial-sum reductions.
inline constexpr std::size_t kReduceChunk = 4096;

struct SincKernel {
  int half_taps = 32;      // taps on each side of the interpolation point
  double kaiser_beta = 10.0;
  double cutoff = 0.95;    // fraction of the narrower Nyquist band
};

// out[i] = g * x[i]
void scale(const double* x, double g, double* out, std::size_t n);

// out[i] = a * x[i] + b * y[i]
void axpby(double a, const double* x, double b, const double* y, double* out,
           std::size_t n);

// y[i] += a * x[i]
void accumulate(double a, const double* x, double* y, std::size_t n);

double sum_squares(const double* x, std::size_t n);

// Mean of (a[i] - b[i])^2.
double mean_squared_error(const double* a, const double* b, std::size_t n);

// Unbiased sample covariance (divisor n-1) of n rows of dimension d around
// `mean`; writes the symmetric d*d matrix row-major into cov.
void covariance(const double* rows, std::size_t n, std::size_t d,
                const double* mean, double* cov);

// Band-limited interpolation: out[i] = x(i * step) where x is the
// windowed-sinc reconstruction of `in` (zero outside its support). For
// step > 1 the kernel cutoff drops to 1/step for anti-aliasing.
void resample_sinc(const double* in, std::size_t n_in, double* out,
                   std::size_t n_out, double step, const SincKernel& k);

// Mean over frames of sqrt(mean over bins of
// (log10(a + eps) - log10(b + eps))^2); a and b are frames*bins power grids.
double log_spectral_distance(const double* a, const double* b,
                             std::size_t frames, std::size_t bins, double eps);

namespace serial {
void scale(const double* x, double g, double* out, std::size_t n);
void axpby(double a, const double* x, double b, const double* y, double* out,
           std::size_t n);
void accumulate(double a, const double* x, double* y, std::size_t n);
double sum_squares(const double* x, std::size_t n);
double mean_squared_error(const double* a, const double* b, std::size_t n);
void covariance(const double* rows, std::size_t n, std::size_t d,
                const double* mean, double* cov);
void resample_sinc(const double* in, std::size_t n_in, double* out,
                   std::size_t n_out, double step, const SincKernel& k);
double log_spectral_distance(const double* a, const double* b,
                             std::size_t frames, std::size_t bins, double eps);
}  // namespace serial

}  // namespace kernels
}  // namespace scedit

#endif  // SCEDIT_KERNELS_H_
