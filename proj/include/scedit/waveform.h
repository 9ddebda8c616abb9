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

#ifndef SCEDIT_WAVEFORM_H_
#define SCEDIT_WAVEFORM_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace scedit {

// Gain in decibels.
struct GainDb {
  double db = 0.0;
};

// Signal-to-noise ratio in decibels (20*log10 of RMS ratio).
struct SnrDb {
  double db = 0.0;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 20.0); }
inline double linear_to_db(double g) { return 20.0 * std::log10(g); }

// Mono sample buffer. Samples are nominally in [-1, 1]; everything internal
// runs in double precision so that gain/mix identities hold to ~1e-15.
struct Waveform {
  std::vector<double> samples;
  int sample_rate_hz = 16000;

  std::size_t size() const { return samples.size(); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

// sqrt(mean(x^2)). Throws on an empty waveform; returns 0 for silence.
double rms(const Waveform& w);

// Every sample multiplied by 10^(g/20).
Waveform apply_gain_db(const Waveform& w, GainDb g);

struct MixResult {
  Waveform mix;
  double fg_scale = 1.0;           // linear gain applied to the foreground
  std::size_t onset_samples = 0;
  std::size_t fg_samples_used = 0; // after truncation to the background end
  bool truncated = false;
};

// Scales fg so that 20*log10(rms(fg_scaled)/rms(bg)) == snr, then adds it to
// a copy of bg starting at round(fg_onset_s * rate). The foreground RMS is
// taken over its full (post-truncation) support. Background samples outside
// the overlap region are bit-identical to the input. Throws when either
// signal is silent (SNR undefined) or the rates differ.
MixResult mix_at_snr(const Waveform& fg, const Waveform& bg, SnrDb snr,
                     double fg_onset_s);

}  // namespace scedit

#endif  // SCEDIT_WAVEFORM_H_
