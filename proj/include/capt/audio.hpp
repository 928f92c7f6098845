#pragma once

// 16-bit mono PCM audio: WAV I/O, the gain and speed perturbations used for
// corpus augmentation, and log-mel spectrogram extraction.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "capt/error.hpp"
#include "capt/text.hpp"

namespace capt::audio {

inline constexpr int kCanonicalSampleRate = 8000;

struct AudioBuffer {
  std::vector<std::int16_t> samples;
  int sample_rate = kCanonicalSampleRate;

  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
  bool operator==(const AudioBuffer&) const = default;
};

// ---------------------------------------------------------------------------
// WAV

namespace detail {

inline std::uint32_t rd_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}
inline std::uint16_t rd_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}
inline void wr_u32(std::string& s, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) s += static_cast<char>((v >> (8 * i)) & 0xFF);
}
inline void wr_u16(std::string& s, std::uint16_t v) {
  s += static_cast<char>(v & 0xFF);
  s += static_cast<char>((v >> 8) & 0xFF);
}

}  // namespace detail

/// Parses a RIFF/WAVE PCM 16-bit mono file image. Any sample rate is accepted.
inline AudioBuffer parse_wav(std::string_view bytes) {
  const auto* p = reinterpret_cast<const std::uint8_t*>(bytes.data());
  const std::size_t size = bytes.size();
  if (size < 12 || std::memcmp(p, "RIFF", 4) != 0 || std::memcmp(p + 8, "WAVE", 4) != 0)
    throw Error(ErrorCode::MalformedWav, "missing RIFF/WAVE header");

  bool have_fmt = false;
  AudioBuffer out;
  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const std::uint32_t chunk_size = detail::rd_u32(p + pos + 4);
    const std::size_t body = pos + 8;
    if (chunk_size > size - body) throw Error(ErrorCode::MalformedWav, "chunk extends past end of file");
    if (std::memcmp(p + pos, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw Error(ErrorCode::MalformedWav, "fmt chunk too short");
      const auto format = detail::rd_u16(p + body);
      const auto channels = detail::rd_u16(p + body + 2);
      const auto rate = detail::rd_u32(p + body + 4);
      const auto bits = detail::rd_u16(p + body + 14);
      if (format != 1) throw Error(ErrorCode::UnsupportedWav, "format tag " + std::to_string(format) + " is not PCM");
      if (channels != 1) throw Error(ErrorCode::UnsupportedWav, std::to_string(channels) + " channels");
      if (bits != 16) throw Error(ErrorCode::UnsupportedWav, std::to_string(bits) + " bits per sample");
      if (rate == 0) throw Error(ErrorCode::MalformedWav, "zero sample rate");
      out.sample_rate = static_cast<int>(rate);
      have_fmt = true;
    } else if (std::memcmp(p + pos, "data", 4) == 0) {
      if (!have_fmt) throw Error(ErrorCode::MalformedWav, "data chunk before fmt chunk");
      const std::size_t n = chunk_size / 2;
      out.samples.resize(n);
      for (std::size_t i = 0; i < n; ++i)
        out.samples[i] = static_cast<std::int16_t>(detail::rd_u16(p + body + 2 * i));
      return out;
    }
    pos = body + chunk_size + (chunk_size & 1);
  }
  throw Error(ErrorCode::MalformedWav, have_fmt ? "no data chunk" : "no fmt chunk");
}

inline std::string serialize_wav(const AudioBuffer& b) {
  std::string s;
  const auto data_bytes = static_cast<std::uint32_t>(b.samples.size() * 2);
  s.reserve(44 + data_bytes);
  s += "RIFF";
  detail::wr_u32(s, 36 + data_bytes);
  s += "WAVEfmt ";
  detail::wr_u32(s, 16);
  detail::wr_u16(s, 1);
  detail::wr_u16(s, 1);
  detail::wr_u32(s, static_cast<std::uint32_t>(b.sample_rate));
  detail::wr_u32(s, static_cast<std::uint32_t>(b.sample_rate) * 2);
  detail::wr_u16(s, 2);
  detail::wr_u16(s, 16);
  s += "data";
  detail::wr_u32(s, data_bytes);
  for (auto v : b.samples) detail::wr_u16(s, static_cast<std::uint16_t>(v));
  return s;
}

inline AudioBuffer read_wav(const std::string& path) { return parse_wav(text::read_file(path)); }
inline void write_wav(const std::string& path, const AudioBuffer& b) { text::write_file(path, serialize_wav(b)); }

// ---------------------------------------------------------------------------
// Perturbations

inline std::int16_t saturate(double v, std::size_t* clipped = nullptr) {
  const double r = std::round(v);
  if (r > 32767.0) {
    if (clipped) ++*clipped;
    return 32767;
  }
  if (r < -32768.0) {
    if (clipped) ++*clipped;
    return -32768;
  }
  return static_cast<std::int16_t>(r);
}

struct GainResult {
  AudioBuffer audio;
  std::size_t clipped = 0;
};

/// Scales by 10^(gain_db/20), rounding half away from zero and saturating.
inline GainResult apply_gain_db(const AudioBuffer& b, double gain_db) {
  if (!(std::abs(gain_db) <= 24.0)) throw Error(ErrorCode::InvalidArgument, "gain must be within +-24 dB");
  GainResult r{{{}, b.sample_rate}, 0};
  const double scale = std::pow(10.0, gain_db / 20.0);
  r.audio.samples.reserve(b.samples.size());
  for (auto s : b.samples) r.audio.samples.push_back(saturate(s * scale, &r.clipped));
  return r;
}

/// Varispeed: output sample i is the linear interpolation of the input at
/// position i * factor; duration and pitch both scale by 1/factor.
inline AudioBuffer change_speed(const AudioBuffer& b, double factor) {
  if (!(factor >= 0.5 && factor <= 2.0)) throw Error(ErrorCode::InvalidArgument, "speed factor must be in [0.5, 2]");
  AudioBuffer out{{}, b.sample_rate};
  const std::size_t n = b.samples.size();
  if (n == 0) return out;
  const auto m = static_cast<std::size_t>(std::llround(static_cast<double>(n) / factor));
  out.samples.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double pos = static_cast<double>(i) * factor;
    const auto k = std::min(static_cast<std::size_t>(pos), n - 1);
    const double frac = pos - static_cast<double>(k);
    const double a = b.samples[k];
    const double c = k + 1 < n ? b.samples[k + 1] : a;
    out.samples.push_back(saturate(a + (c - a) * frac));
  }
  return out;
}

/// Linear-interpolation sample-rate conversion.
inline AudioBuffer resample(const AudioBuffer& b, int target_rate) {
  if (target_rate <= 0) throw Error(ErrorCode::InvalidArgument, "target rate must be positive");
  if (b.sample_rate == target_rate || b.samples.empty()) return {b.samples, target_rate};
  const double step = static_cast<double>(b.sample_rate) / target_rate;
  const std::size_t n = b.samples.size();
  const auto m = static_cast<std::size_t>(std::llround(static_cast<double>(n) / step));
  AudioBuffer out{{}, target_rate};
  out.samples.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double pos = static_cast<double>(i) * step;
    const auto k = std::min(static_cast<std::size_t>(pos), n - 1);
    const double frac = pos - static_cast<double>(k);
    const double a = b.samples[k];
    const double c = k + 1 < n ? b.samples[k + 1] : a;
    out.samples.push_back(saturate(a + (c - a) * frac));
  }
  return out;
}

/// Per-variant augmentation parameters: +-5 dB energy, +-10 % speed.
class AugmentSpec {
 public:
  static constexpr double kMaxGainDb = 5.0;
  static constexpr double kMinSpeed = 0.9;
  static constexpr double kMaxSpeed = 1.1;

  AugmentSpec(double gain_db, double speed_factor) : gain_db_(gain_db), speed_factor_(speed_factor) {
    if (!(gain_db >= -kMaxGainDb && gain_db <= kMaxGainDb))
      throw Error(ErrorCode::InvalidArgument, "gain_db outside [-5, 5]: " + std::to_string(gain_db));
    if (!(speed_factor >= kMinSpeed && speed_factor <= kMaxSpeed))
      throw Error(ErrorCode::InvalidArgument, "speed_factor outside [0.9, 1.1]: " + std::to_string(speed_factor));
  }

  double gain_db() const noexcept { return gain_db_; }
  double speed_factor() const noexcept { return speed_factor_; }

 private:
  double gain_db_;
  double speed_factor_;
};

inline AudioBuffer apply_augment(const AudioBuffer& b, const AugmentSpec& spec) {
  return change_speed(apply_gain_db(b, spec.gain_db()).audio, spec.speed_factor());
}

struct DurationCheck {
  AudioBuffer audio;
  bool truncated = false;
  bool rejected = false;
};

/// Corpus duration policy: hard cut at 8 s, reject below 0.5 s.
inline DurationCheck enforce_duration(AudioBuffer b, double max_seconds = 8.0, double min_seconds = 0.5) {
  DurationCheck r;
  const auto max_n = static_cast<std::size_t>(max_seconds * b.sample_rate);
  if (b.samples.size() > max_n) {
    b.samples.resize(max_n);
    r.truncated = true;
  }
  r.rejected = b.duration_seconds() < min_seconds;
  r.audio = std::move(b);
  return r;
}

// ---------------------------------------------------------------------------
// Spectral analysis

/// In-place iterative radix-2 FFT; size must be a power of two.
inline void fft(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto u = a[i + k];
        const auto v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

inline double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
inline double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

struct MelConfig {
  std::size_t win_length = 200;  // 25 ms at 8 kHz
  std::size_t hop_length = 80;   // 10 ms
  std::size_t n_mels = 64;
  double fmin = 0.0;
  double fmax = 4000.0;
  double epsilon = 1e-10;

  std::size_t n_fft() const {
    std::size_t n = 1;
    while (n < win_length) n <<= 1;
    return n;
  }
};

/// Triangular filters with unit peak, equally spaced on the HTK mel scale.
class MelFilterbank {
 public:
  MelFilterbank(const MelConfig& cfg, int sample_rate) : n_bins_(cfg.n_fft() / 2 + 1) {
    const double mlo = hz_to_mel(cfg.fmin);
    const double mhi = hz_to_mel(cfg.fmax);
    edges_.resize(cfg.n_mels + 2);
    for (std::size_t i = 0; i < edges_.size(); ++i)
      edges_[i] = mel_to_hz(mlo + (mhi - mlo) * static_cast<double>(i) / static_cast<double>(cfg.n_mels + 1));
    const double bin_hz = static_cast<double>(sample_rate) / static_cast<double>(cfg.n_fft());
    weights_.assign(cfg.n_mels, std::vector<double>(n_bins_, 0.0));
    for (std::size_t m = 0; m < cfg.n_mels; ++m) {
      const double lo = edges_[m], mid = edges_[m + 1], hi = edges_[m + 2];
      for (std::size_t k = 0; k < n_bins_; ++k) {
        const double f = static_cast<double>(k) * bin_hz;
        double w = 0.0;
        if (f > lo && f <= mid) w = (f - lo) / (mid - lo);
        else if (f > mid && f < hi) w = (hi - f) / (hi - mid);
        weights_[m][k] = w;
      }
    }
  }

  double center_hz(std::size_t m) const { return edges_[m + 1]; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<double>& weights(std::size_t m) const { return weights_[m]; }

 private:
  std::size_t n_bins_;
  std::vector<double> edges_;
  std::vector<std::vector<double>> weights_;
};

struct MelSpectrogram {
  std::vector<std::vector<double>> frames;  // [n_frames][n_mels]
  double frame_hop_seconds = 0.0;
  std::size_t n_mels = 0;

  std::size_t n_frames() const { return frames.size(); }
};

inline std::size_t frame_count(std::size_t n_samples, std::size_t win, std::size_t hop) {
  return n_samples < win ? 0 : 1 + (n_samples - win) / hop;
}

/// Log-mel power spectrogram with a periodic Hann window and no padding.
/// Audio shorter than one window yields zero frames.
inline MelSpectrogram mel_spectrogram(const AudioBuffer& b, const MelConfig& cfg = {}) {
  if (b.sample_rate != kCanonicalSampleRate)
    throw Error(ErrorCode::InvalidArgument, "mel_spectrogram expects 8 kHz audio");
  if (cfg.hop_length == 0 || cfg.win_length < cfg.hop_length)
    throw Error(ErrorCode::InvalidArgument, "need win_length >= hop_length > 0");
  if (cfg.fmax > b.sample_rate / 2.0 || cfg.fmin < 0.0 || cfg.fmin >= cfg.fmax || cfg.n_mels == 0)
    throw Error(ErrorCode::InvalidArgument, "bad mel frequency range");

  MelSpectrogram out;
  out.n_mels = cfg.n_mels;
  out.frame_hop_seconds = static_cast<double>(cfg.hop_length) / b.sample_rate;
  const std::size_t frames = frame_count(b.samples.size(), cfg.win_length, cfg.hop_length);
  if (frames == 0) return out;

  const std::size_t nfft = cfg.n_fft();
  const MelFilterbank bank(cfg, b.sample_rate);
  std::vector<double> window(cfg.win_length);
  for (std::size_t i = 0; i < cfg.win_length; ++i)
    window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / cfg.win_length);

  std::vector<std::complex<double>> buf(nfft);
  std::vector<double> power(nfft / 2 + 1);
  out.frames.reserve(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    const std::size_t off = f * cfg.hop_length;
    std::fill(buf.begin(), buf.end(), std::complex<double>{});
    for (std::size_t i = 0; i < cfg.win_length; ++i) buf[i] = b.samples[off + i] / 32768.0 * window[i];
    fft(buf);
    for (std::size_t k = 0; k < power.size(); ++k) power[k] = std::norm(buf[k]);
    auto& row = out.frames.emplace_back(cfg.n_mels);
    for (std::size_t m = 0; m < cfg.n_mels; ++m) {
      const auto& w = bank.weights(m);
      double e = 0.0;
      for (std::size_t k = 0; k < power.size(); ++k) e += w[k] * power[k];
      row[m] = std::log(e + cfg.epsilon);
    }
  }
  return out;
}

}  // namespace capt::audio
