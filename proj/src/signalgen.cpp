#include "ssoba/signalgen.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "ssoba/error.hpp"

namespace ssoba {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_spec(const SignalSpec& spec) {
  if (spec.sample_rate == 0) raise(Errc::InvalidSampleRate, "sample rate must be positive");
  if (spec.amplitude > 1.0)
    raise(Errc::ClippingAmplitude, "amplitude " + std::to_string(spec.amplitude) + " exceeds full scale");
  if (spec.amplitude < 0.0) raise(Errc::ClippingAmplitude, "amplitude must be non-negative");
  const double nyquist = spec.sample_rate / 2.0;
  for (double f : spec.frequencies_hz) {
    if (f < 0.0 || f >= nyquist)
      raise(Errc::AliasedTone, std::to_string(f) + " Hz is not below the Nyquist limit " +
                                   std::to_string(nyquist) + " Hz");
  }
  switch (spec.kind) {
    case SignalKind::Sine:
      if (spec.frequencies_hz.size() != 1) raise(Errc::InvalidParams, "Sine takes exactly one frequency");
      break;
    case SignalKind::MultiTone:
      if (spec.frequencies_hz.empty()) raise(Errc::InvalidParams, "MultiTone needs at least one frequency");
      break;
    case SignalKind::BandNoise:
      if (spec.frequencies_hz.size() != 2 || spec.frequencies_hz[0] >= spec.frequencies_hz[1])
        raise(Errc::InvalidParams, "BandNoise takes [low, high] band edges");
      break;
    case SignalKind::Ramp:
    case SignalKind::Constant:
      break;
  }
}

std::size_t sample_count(const SignalSpec& spec) {
  const double count = std::round(spec.duration_s * spec.sample_rate);
  if (count < 1.0) raise(Errc::EmptySignal, "duration too short for even one sample");
  return static_cast<std::size_t>(count);
}

}  // namespace

AudioObject generate(const SignalSpec& spec) {
  check_spec(spec);
  const std::size_t len = sample_count(spec);
  const double dt = 1.0 / spec.sample_rate;

  AudioObject out;
  out.sample_rate = spec.sample_rate;
  out.label = spec.label;
  out.samples.assign(len, 0.0);

  switch (spec.kind) {
    case SignalKind::Sine: {
      const double w = kTwoPi * spec.frequencies_hz.front();
      for (std::size_t t = 0; t < len; ++t) out.samples[t] = spec.amplitude * std::sin(w * t * dt);
      break;
    }
    case SignalKind::MultiTone: {
      // Even amplitude split keeps the peak under the requested bound; the
      // seed fixes each tone's phase.
      std::mt19937_64 rng(spec.seed);
      std::uniform_real_distribution<double> phase(0.0, kTwoPi);
      const double per_tone = spec.amplitude / static_cast<double>(spec.frequencies_hz.size());
      for (double f : spec.frequencies_hz) {
        const double w = kTwoPi * f;
        const double p = phase(rng);
        for (std::size_t t = 0; t < len; ++t) out.samples[t] += per_tone * std::sin(w * t * dt + p);
      }
      break;
    }
    case SignalKind::BandNoise: {
      // Spectral synthesis: many random in-band sinusoids, peak-normalized.
      // Deterministic for a given seed, unlike filtered white noise whose
      // shape would depend on the filter state.
      constexpr int kPartials = 64;
      std::mt19937_64 rng(spec.seed);
      std::uniform_real_distribution<double> freq(spec.frequencies_hz[0], spec.frequencies_hz[1]);
      std::uniform_real_distribution<double> phase(0.0, kTwoPi);
      for (int k = 0; k < kPartials; ++k) {
        const double w = kTwoPi * freq(rng);
        const double p = phase(rng);
        for (std::size_t t = 0; t < len; ++t) out.samples[t] += std::sin(w * t * dt + p);
      }
      double peak = 0.0;
      for (double v : out.samples) peak = std::max(peak, std::abs(v));
      if (peak > 0.0) {
        const double scale = spec.amplitude / peak;
        for (double& v : out.samples) v *= scale;
      }
      break;
    }
    case SignalKind::Ramp: {
      if (len == 1) {
        out.samples[0] = -spec.amplitude;
        break;
      }
      const double step = 2.0 * spec.amplitude / static_cast<double>(len - 1);
      for (std::size_t t = 0; t < len; ++t) out.samples[t] = -spec.amplitude + step * t;
      break;
    }
    case SignalKind::Constant: {
      std::fill(out.samples.begin(), out.samples.end(), spec.amplitude);
      break;
    }
  }
  return out;
}

namespace {

// Raised-cosine fade at both ends. Fixtures that start and stop at silence
// keep edge effects out of whole-signal quality measurements, the way real
// program material would.
void apply_edge_fades(AudioObject& obj) {
  const std::size_t fade = std::min<std::size_t>(obj.samples.size() / 4, obj.sample_rate / 200);
  for (std::size_t k = 0; k < fade; ++k) {
    const double gain = 0.5 - 0.5 * std::cos(std::numbers::pi * k / fade);
    obj.samples[k] *= gain;
    obj.samples[obj.samples.size() - 1 - k] *= gain;
  }
}

}  // namespace

ObjectSet standard_object_set(std::uint32_t n, std::uint32_t sample_rate, double duration_s,
                              std::uint64_t seed) {
  if (n == 0) raise(Errc::EmptyObjectSet, "need at least one object");
  if (n > ObjectSet::kMaxObjects)
    raise(Errc::TooManyObjects, "n " + std::to_string(n) + " exceeds limit " +
                                    std::to_string(ObjectSet::kMaxObjects));

  std::vector<AudioObject> objects;
  objects.reserve(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    SignalSpec spec;
    spec.kind = SignalKind::MultiTone;
    // Two non-harmonic tones per object, stepped so no two objects share a
    // frequency while the whole set stays within a narrow band.
    spec.frequencies_hz = {950.0 + 23.0 * k, 2600.0 + 17.0 * k};
    spec.amplitude = 0.9;
    spec.duration_s = duration_s;
    spec.sample_rate = sample_rate;
    spec.seed = 1000 + k + seed * 7919;
    spec.label = "obj" + std::to_string(k);
    objects.push_back(generate(spec));
    apply_edge_fades(objects.back());
  }
  return ObjectSet(std::move(objects));
}

}  // namespace ssoba
