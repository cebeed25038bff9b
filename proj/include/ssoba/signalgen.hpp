#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssoba/audio.hpp"

namespace ssoba {

enum class SignalKind { Sine, MultiTone, BandNoise, Ramp, Constant };

// Recipe for deterministic synthetic test material. The same spec always
// generates the same samples, noise included.
struct SignalSpec {
  SignalKind kind = SignalKind::Sine;
  // Tone frequencies for Sine/MultiTone; the [low, high] band edges for
  // BandNoise. Unused by Ramp and Constant.
  std::vector<double> frequencies_hz;
  // Peak amplitude bound of the whole signal, <= 1.0. MultiTone splits it
  // evenly across tones.
  double amplitude = 1.0;
  double duration_s = 1.0;
  std::uint32_t sample_rate = 48000;
  std::uint64_t seed = 0;
  std::string label;
};

AudioObject generate(const SignalSpec& spec);

// Fixture factory: n objects with pairwise-distinct spectral content and
// labels "obj0".."obj{n-1}". Tone placement keeps every object below
// 15 kHz so the same set can be generated at any rate from 32 kHz up, and
// keeps objects of one set close enough in frequency to behave alike under
// reconstruction. The seed offsets every object's tone phases.
ObjectSet standard_object_set(std::uint32_t n, std::uint32_t sample_rate, double duration_s,
                              std::uint64_t seed = 0);

}  // namespace ssoba
