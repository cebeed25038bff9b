#pragma once

#include <cstdint>

#include "ssoba/audio.hpp"

namespace ssoba {

// Linear-phase FIR low-pass (windowed sinc, Hamming window, 255 taps at
// 48 kHz scaled proportionally with rate), applied with group-delay
// compensation so the output stays sample-aligned with the input. Length
// and rate are preserved.
AudioObject lowpass(const AudioObject& x, double cutoff_hz);

struct AnchorPair {
  AudioObject anchor_3_5k;
  AudioObject anchor_7k;
};

// Degraded listening-test stimuli: the reference low-passed at 3.5 kHz and
// 7 kHz, each RMS-matched back to the reference level. Needs a rate of at
// least 16 kHz so the 7 kHz edge sits below Nyquist.
AnchorPair make_anchors(const AudioObject& reference);

}  // namespace ssoba
