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

#include "scedit/kernels.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "scedit/parallel.h"

namespace scedit {
namespace kernels {
namespace {

// Zeroth-order modified Bessel function, power series.
double bessel_i0(double x) {
  double sum = 1.0;
  double term = 1.0;
  const double q = 0.25 * x * x;
  for (int k = 1; k < 64; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum;
}

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  const double px = 3.141592653589793 * x;
  return std::sin(px) / px;
}

// One interpolated output sample at fractional input position pos.
double sinc_interp_at(const double* in, std::size_t n_in, double pos,
                      const SincKernel& k, double c, double inv_i0_beta) {
  const long long base = static_cast<long long>(std::floor(pos));
  const double frac = pos - static_cast<double>(base);
  const double inv_half = 1.0 / static_cast<double>(k.half_taps);
  double acc = 0.0;
  for (int j = -k.half_taps + 1; j <= k.half_taps; ++j) {
    const long long idx = base + j;
    if (idx < 0 || idx >= static_cast<long long>(n_in)) continue;
    const double t = static_cast<double>(j) - frac;
    const double u = t * inv_half;
    if (u <= -1.0 || u >= 1.0) continue;
    const double win = bessel_i0(k.kaiser_beta * std::sqrt(1.0 - u * u)) *
                       inv_i0_beta;
    acc += in[idx] * c * sinc(c * t) * win;
  }
  return acc;
}

double lsd_frame(const double* a, const double* b, std::size_t bins,
                 double eps) {
  double acc = 0.0;
  for (std::size_t f = 0; f < bins; ++f) {
    const double d = std::log10(a[f] + eps) - std::log10(b[f] + eps);
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(bins));
}

double cov_entry(const double* rows, std::size_t n, std::size_t d,
                 const double* mean, std::size_t i, std::size_t j) {
  double acc = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    acc += (rows[r * d + i] - mean[i]) * (rows[r * d + j] - mean[j]);
  }
  return acc / static_cast<double>(n - 1);
}

}  // namespace

void scale(const double* x, double g, double* out, std::size_t n) {
  parallel_for(static_cast<std::int64_t>(n),
               [&](std::int64_t i) { out[i] = g * x[i]; });
}

void axpby(double a, const double* x, double b, const double* y, double* out,
           std::size_t n) {
  parallel_for(static_cast<std::int64_t>(n),
               [&](std::int64_t i) { out[i] = a * x[i] + b * y[i]; });
}

void accumulate(double a, const double* x, double* y, std::size_t n) {
  parallel_for(static_cast<std::int64_t>(n),
               [&](std::int64_t i) { y[i] += a * x[i]; });
}

double sum_squares(const double* x, std::size_t n) {
  const std::size_t chunks = (n + kReduceChunk - 1) / kReduceChunk;
  std::vector<double> partial(chunks, 0.0);
  parallel_for(static_cast<std::int64_t>(chunks), [&](std::int64_t c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kReduceChunk;
    const std::size_t end = std::min(n, begin + kReduceChunk);
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += x[i] * x[i];
    partial[c] = s;
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

double mean_squared_error(const double* a, const double* b, std::size_t n) {
  const std::size_t chunks = (n + kReduceChunk - 1) / kReduceChunk;
  std::vector<double> partial(chunks, 0.0);
  parallel_for(static_cast<std::int64_t>(chunks), [&](std::int64_t c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kReduceChunk;
    const std::size_t end = std::min(n, begin + kReduceChunk);
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double d = a[i] - b[i];
      s += d * d;
    }
    partial[c] = s;
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total / static_cast<double>(n);
}

void covariance(const double* rows, std::size_t n, std::size_t d,
                const double* mean, double* cov) {
  // One task per upper-triangle entry; mirrored afterwards.
  const std::size_t entries = d * (d + 1) / 2;
  parallel_for(static_cast<std::int64_t>(entries), [&](std::int64_t e) {
    // Unrank e -> (i, j), i <= j.
    std::size_t i = 0;
    std::size_t rem = static_cast<std::size_t>(e);
    while (rem >= d - i) {
      rem -= d - i;
      ++i;
    }
    const std::size_t j = i + rem;
    const double v = cov_entry(rows, n, d, mean, i, j);
    cov[i * d + j] = v;
    cov[j * d + i] = v;
  });
}

void resample_sinc(const double* in, std::size_t n_in, double* out,
                   std::size_t n_out, double step, const SincKernel& k) {
  const double c = k.cutoff * std::min(1.0, 1.0 / step);
  const double inv_i0 = 1.0 / bessel_i0(k.kaiser_beta);
  parallel_for(static_cast<std::int64_t>(n_out), [&](std::int64_t i) {
    out[i] = sinc_interp_at(in, n_in, static_cast<double>(i) * step, k, c,
                            inv_i0);
  });
}

double log_spectral_distance(const double* a, const double* b,
                             std::size_t frames, std::size_t bins,
                             double eps) {
  std::vector<double> per_frame(frames, 0.0);
  parallel_for(static_cast<std::int64_t>(frames), [&](std::int64_t t) {
    per_frame[t] = lsd_frame(a + t * bins, b + t * bins, bins, eps);
  });
  double total = 0.0;
  for (double v : per_frame) total += v;
  return total / static_cast<double>(frames);
}

namespace serial {

void scale(const double* x, double g, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = g * x[i];
}

void axpby(double a, const double* x, double b, const double* y, double* out,
           std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void accumulate(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double sum_squares(const double* x, std::size_t n) {
  double total = 0.0;
  for (std::size_t begin = 0; begin < n; begin += kReduceChunk) {
    const std::size_t end = std::min(n, begin + kReduceChunk);
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += x[i] * x[i];
    total += s;
  }
  return total;
}

double mean_squared_error(const double* a, const double* b, std::size_t n) {
  double total = 0.0;
  for (std::size_t begin = 0; begin < n; begin += kReduceChunk) {
    const std::size_t end = std::min(n, begin + kReduceChunk);
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double d = a[i] - b[i];
      s += d * d;
    }
    total += s;
  }
  return total / static_cast<double>(n);
}

void covariance(const double* rows, std::size_t n, std::size_t d,
                const double* mean, double* cov) {
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const double v = cov_entry(rows, n, d, mean, i, j);
      cov[i * d + j] = v;
      cov[j * d + i] = v;
    }
  }
}

void resample_sinc(const double* in, std::size_t n_in, double* out,
                   std::size_t n_out, double step, const SincKernel& k) {
  const double c = k.cutoff * std::min(1.0, 1.0 / step);
  const double inv_i0 = 1.0 / bessel_i0(k.kaiser_beta);
  for (std::size_t i = 0; i < n_out; ++i) {
    out[i] = sinc_interp_at(in, n_in, static_cast<double>(i) * step, k, c,
                            inv_i0);
  }
}

double log_spectral_distance(const double* a, const double* b,
                             std::size_t frames, std::size_t bins,
                             double eps) {
  double total = 0.0;
  for (std::size_t t = 0; t < frames; ++t) {
    total += lsd_frame(a + t * bins, b + t * bins, bins, eps);
  }
  return total / static_cast<double>(frames);
}

}  // namespace serial
}  // namespace kernels
}  // namespace scedit
