#include "ssoba/anchors.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ssoba/error.hpp"

namespace ssoba {

namespace {

// Odd tap count so the group delay is an integer number of samples.
std::size_t tap_count_for_rate(std::uint32_t sample_rate) {
  const double scaled = 255.0 * sample_rate / 48000.0;
  auto taps = static_cast<std::size_t>(std::lround(scaled));
  if (taps % 2 == 0) ++taps;
  return std::max<std::size_t>(taps, 11);
}

std::vector<double> design_taps(double cutoff_hz, std::uint32_t sample_rate) {
  const std::size_t taps = tap_count_for_rate(sample_rate);
  const double mid = static_cast<double>(taps - 1) / 2.0;
  const double fc = cutoff_hz / sample_rate;

  std::vector<double> h(taps);
  double sum = 0.0;
  for (std::size_t k = 0; k < taps; ++k) {
    const double n = static_cast<double>(k) - mid;
    const double sinc = n == 0.0 ? 2.0 * fc : std::sin(2.0 * std::numbers::pi * fc * n) / (std::numbers::pi * n);
    const double hamming = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * k / (taps - 1));
    h[k] = sinc * hamming;
    sum += h[k];
  }
  // Unity DC gain.
  for (double& v : h) v /= sum;
  return h;
}

double rms(const std::vector<double>& v) {
  double acc = 0.0;
  for (double s : v) acc += s * s;
  return std::sqrt(acc / static_cast<double>(v.size()));
}

}  // namespace

AudioObject lowpass(const AudioObject& x, double cutoff_hz) {
  x.validate();
  if (!(cutoff_hz > 0.0) || cutoff_hz >= x.sample_rate / 2.0)
    raise(Errc::InvalidCutoff, std::to_string(cutoff_hz) + " Hz is outside (0, rate/2) for rate " +
                                   std::to_string(x.sample_rate));

  const std::vector<double> h = design_taps(cutoff_hz, x.sample_rate);
  const std::ptrdiff_t mid = static_cast<std::ptrdiff_t>(h.size() - 1) / 2;
  const std::ptrdiff_t len = static_cast<std::ptrdiff_t>(x.samples.size());

  AudioObject out;
  out.sample_rate = x.sample_rate;
  out.label = x.label;
  out.samples.assign(x.samples.size(), 0.0);

  // Zero-padded convolution, shifted by the group delay so out[t] lines up
  // with x[t].
  for (std::ptrdiff_t t = 0; t < len; ++t) {
    double acc = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) {
      const std::ptrdiff_t src = t + mid - static_cast<std::ptrdiff_t>(k);
      if (src >= 0 && src < len) acc += h[k] * x.samples[src];
    }
    out.samples[t] = acc;
  }
  return out;
}

AnchorPair make_anchors(const AudioObject& reference) {
  if (reference.sample_rate < 16000)
    raise(Errc::InvalidSampleRate, "anchors need at least 16 kHz, got " +
                                       std::to_string(reference.sample_rate) + " Hz");

  AnchorPair anchors{lowpass(reference, 3500.0), lowpass(reference, 7000.0)};

  // Filtering removes energy; match each anchor's RMS back to the
  // reference. Silence stays silence.
  const double reference_rms = rms(reference.samples);
  for (AudioObject* anchor : {&anchors.anchor_3_5k, &anchors.anchor_7k}) {
    const double anchor_rms = rms(anchor->samples);
    if (reference_rms > 0.0 && anchor_rms > 0.0) {
      const double gain = reference_rms / anchor_rms;
      for (double& v : anchor->samples) v *= gain;
    }
  }
  anchors.anchor_3_5k.label = reference.label.empty() ? "anchor_3_5k" : reference.label + "_anchor_3_5k";
  anchors.anchor_7k.label = reference.label.empty() ? "anchor_7k" : reference.label + "_anchor_7k";
  return anchors;
}

}  // namespace ssoba
