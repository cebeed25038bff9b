#pragma once

#include <cstdint>
#include <vector>

#include "ssoba/audio.hpp"

namespace ssoba {

struct DecodeResult {
  std::vector<SparseObject> sparse_objects;
  CodecParams params;
  std::uint32_t sample_rate = 0;
};

// Interleave N objects into C channels following the per-index circular
// shift schedule. A pure permutation with erasure: amplitudes are carried
// bit-identically, never dithered, clipped or normalized. When N < C the
// surplus channels are filled with silence.
EncodedStream encode(const ObjectSet& input, std::uint32_t c_channels);

// Reverse of encode: place every kept channel sample back at its object
// and index, and mark everything the schedule dropped as missing.
DecodeResult decode(const EncodedStream& stream);

// True iff the regime is lossless (N <= C) and decode(encode(input)) is
// bit-identical to the input at every index.
bool roundtrip_lossless_check(const ObjectSet& input, std::uint32_t c_channels);

}  // namespace ssoba
