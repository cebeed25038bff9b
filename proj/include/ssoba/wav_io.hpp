#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssoba/audio.hpp"

namespace ssoba {

enum class WavEncoding { IntegerPcm16, IntegerPcm24, Float32 };

struct WavFormat {
  WavEncoding encoding = WavEncoding::Float32;
  std::uint16_t channel_count = 0;
  std::uint32_t sample_rate = 0;
};

// Payload of the private "ssob" RIFF chunk (version 1): the codec params a
// decoder needs, carried inside the stream itself. Legacy players skip the
// unknown chunk, so the file stays an ordinary multichannel WAV.
struct SsobaInfo {
  std::uint32_t n_objects = 0;
  std::uint32_t c_channels = 0;
  std::uint32_t shift_base = 1;
  std::uint32_t original_rate = 0;

  CodecParams to_params() const { return CodecParams{n_objects, c_channels, shift_base}; }
  static SsobaInfo from_params(const CodecParams& params, std::uint32_t rate) {
    return SsobaInfo{params.n_objects, params.c_channels, params.shift_base, rate};
  }
};

struct WavContents {
  std::vector<std::vector<double>> channels;
  WavFormat format;
  std::optional<SsobaInfo> ssoba;
};

// Parse a RIFF/WAVE byte stream into de-interleaved channels. Integer PCM
// maps to [-1, 1] by division by 2^(bits-1); unknown chunks are skipped. A
// malformed "ssob" chunk reads as absent, not as an error.
WavContents read_wav(std::span<const std::byte> bytes);

// Serialize channels as a canonical little-endian RIFF/WAVE file. Integer
// encodings round to nearest even and saturate at full scale; Float32 is
// written untouched. When `ssoba` is present a private "ssob" chunk is
// appended after the data chunk.
std::vector<std::byte> write_wav(const std::vector<std::vector<double>>& channels, const WavFormat& format,
                                 const std::optional<SsobaInfo>& ssoba = std::nullopt);

WavContents read_wav_file(const std::filesystem::path& path);
void write_wav_file(const std::filesystem::path& path, const std::vector<std::vector<double>>& channels,
                    const WavFormat& format, const std::optional<SsobaInfo>& ssoba = std::nullopt);

// Sidecar with the same fields as the "ssob" chunk, for toolchains that
// strip private chunks. Lives next to the WAV as "<name>.json".
std::filesystem::path sidecar_path(const std::filesystem::path& wav_path);
void write_sidecar(const std::filesystem::path& wav_path, const SsobaInfo& info);
std::optional<SsobaInfo> read_sidecar(const std::filesystem::path& wav_path);

}  // namespace ssoba
