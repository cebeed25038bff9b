#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "ssoba/audio.hpp"

namespace ssoba {

// Where one object's sample lands at one time index: a channel row, or
// dropped in the lossy regime.
using Placement = std::optional<std::uint32_t>;

// Circular shift amount for 0-based sample index t over n objects.
// Samples are numbered from 1, so the shift is (t + 1) mod n.
constexpr std::uint32_t schedule_shift(std::size_t t, std::uint32_t n) noexcept {
  return static_cast<std::uint32_t>((t + 1) % n);
}

// Rotate object row i downward by the shift for index t, then truncate to
// C rows: r = (i + K) mod N is the output row, kept when r < C. For fixed t
// the map i -> r is a rotation, so kept placements never collide.
constexpr Placement schedule_position(std::uint32_t i, std::size_t t, const CodecParams& params) noexcept {
  const std::uint32_t r = (i + schedule_shift(t, params.n_objects)) % params.n_objects;
  if (r < params.c_channels) return r;
  return std::nullopt;
}

}  // namespace ssoba
