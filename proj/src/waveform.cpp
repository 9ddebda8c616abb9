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

#include "scedit/waveform.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scedit/kernels.h"

namespace scedit {

double rms(const Waveform& w) {
  if (w.samples.empty()) {
    throw std::invalid_argument("rms: empty waveform");
  }
  const double ss = kernels::sum_squares(w.samples.data(), w.samples.size());
  return std::sqrt(ss / static_cast<double>(w.samples.size()));
}

Waveform apply_gain_db(const Waveform& w, GainDb g) {
  if (!std::isfinite(g.db)) {
    throw std::invalid_argument("apply_gain_db: non-finite gain");
  }
  Waveform out;
  out.sample_rate_hz = w.sample_rate_hz;
  out.samples.resize(w.samples.size());
  kernels::scale(w.samples.data(), db_to_linear(g.db), out.samples.data(),
                 w.samples.size());
  return out;
}

MixResult mix_at_snr(const Waveform& fg, const Waveform& bg, SnrDb snr,
                     double fg_onset_s) {
  if (fg.sample_rate_hz != bg.sample_rate_hz) {
    throw std::invalid_argument("mix_at_snr: sample rate mismatch");
  }
  if (fg_onset_s < 0.0) {
    throw std::invalid_argument("mix_at_snr: negative onset");
  }
  if (!std::isfinite(snr.db)) {
    throw std::invalid_argument("mix_at_snr: non-finite SNR");
  }
  const double bg_rms = rms(bg);
  if (bg_rms <= 0.0) {
    throw std::invalid_argument("mix_at_snr: silent background, SNR undefined");
  }

  MixResult r;
  r.onset_samples = static_cast<std::size_t>(
      std::llround(fg_onset_s * fg.sample_rate_hz));
  if (r.onset_samples >= bg.size()) {
    throw std::invalid_argument("mix_at_snr: onset beyond background end");
  }
  r.fg_samples_used = std::min(fg.size(), bg.size() - r.onset_samples);
  r.truncated = r.fg_samples_used < fg.size();

  Waveform fg_part;
  fg_part.sample_rate_hz = fg.sample_rate_hz;
  fg_part.samples.assign(fg.samples.begin(),
                         fg.samples.begin() + r.fg_samples_used);
  const double fg_rms = rms(fg_part);
  if (fg_rms <= 0.0) {
    throw std::invalid_argument("mix_at_snr: silent foreground");
  }

  r.fg_scale = bg_rms * db_to_linear(snr.db) / fg_rms;
  r.mix = bg;
  kernels::accumulate(r.fg_scale, fg_part.samples.data(),
                      r.mix.samples.data() + r.onset_samples,
                      r.fg_samples_used);
  return r;
}

}  // namespace scedit
