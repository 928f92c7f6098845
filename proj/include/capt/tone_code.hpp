#pragma once

// Offline stand-in for speech: each token becomes a fixed-length slot holding
// a pure tone whose frequency identifies the phoneme (EOW slots are silent).
// The stub synthesizer writes this code and the tone recognizer reads it, so
// the whole audio pipeline can run without a neural TTS or recognizer.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "capt/audio.hpp"
#include "capt/phoneme.hpp"

namespace capt::tone {

inline constexpr double kEdgeSeconds = 0.25;  // leading and trailing silence
inline constexpr double kSlotSeconds = 0.1;
inline constexpr double kBaseHz = 250.0;
inline constexpr double kStepHz = 50.0;

inline constexpr double frequency(TokenId phoneme) { return kBaseHz + kStepHz * phoneme; }

inline std::size_t slot_samples(int sample_rate) {
  return static_cast<std::size_t>(std::lround(kSlotSeconds * sample_rate));
}
inline std::size_t edge_samples(int sample_rate) {
  return static_cast<std::size_t>(std::lround(kEdgeSeconds * sample_rate));
}

/// Amplitude depends on the speaker so voices differ in level but decode
/// identically.
inline double speaker_amplitude(int speaker_id) { return 6000.0 + 900.0 * (speaker_id % 10); }

inline audio::AudioBuffer render(const PhonemeSequence& seq, int speaker_id,
                                 int sample_rate = audio::kCanonicalSampleRate) {
  audio::AudioBuffer out{{}, sample_rate};
  const auto slot = slot_samples(sample_rate);
  const auto edge = edge_samples(sample_rate);
  const double amp = speaker_amplitude(speaker_id);
  out.samples.assign(edge, 0);
  for (auto t : seq.tokens()) {
    if (t == kEos) break;
    const std::size_t start = out.samples.size();
    out.samples.resize(start + slot, 0);
    if (!is_phoneme_token(t)) continue;
    const double f = frequency(t);
    for (std::size_t i = 0; i < slot; ++i) {
      // Short linear ramps avoid clicks at slot edges.
      const double ramp = std::min({1.0, static_cast<double>(i) / 40.0, static_cast<double>(slot - 1 - i) / 40.0});
      const double v = amp * ramp * std::sin(2.0 * std::numbers::pi * f * static_cast<double>(i) / sample_rate);
      out.samples[start + i] = audio::saturate(v);
    }
  }
  out.samples.resize(out.samples.size() + edge, 0);
  return out;
}

/// Goertzel power of `x` at frequency `f`.
inline double tone_power(const std::int16_t* x, std::size_t n, double f, int sample_rate) {
  const double w = 2.0 * std::numbers::pi * f / sample_rate;
  const double coeff = 2.0 * std::cos(w);
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double s0 = x[i] + coeff * s1 - s2;
    s2 = s1;
    s1 = s0;
  }
  return s1 * s1 + s2 * s2 - coeff * s1 * s2;
}

}  // namespace capt::tone
