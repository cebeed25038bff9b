#include "ssoba/wav_io.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include "json.hpp"
#include "ssoba/error.hpp"

namespace ssoba {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint8_t kSsobaVersion = 1;

struct Reader {
  std::span<const std::byte> bytes;
  std::size_t pos = 0;

  std::size_t remaining() const { return bytes.size() - pos; }

  void need(std::size_t count, const char* what) const {
    if (remaining() < count)
      raise(Errc::TruncatedData, std::string(what) + " needs " + std::to_string(count) +
                                     " bytes at offset " + std::to_string(pos));
  }

  std::uint8_t u8() {
    need(1, "byte");
    return static_cast<std::uint8_t>(bytes[pos++]);
  }

  std::uint16_t u16() {
    need(2, "u16");
    const auto lo = static_cast<std::uint16_t>(bytes[pos]);
    const auto hi = static_cast<std::uint16_t>(bytes[pos + 1]);
    pos += 2;
    return static_cast<std::uint16_t>(lo | (hi << 8));
  }

  std::uint32_t u32() {
    need(4, "u32");
    std::uint32_t v = 0;
    for (int k = 3; k >= 0; --k) v = (v << 8) | static_cast<std::uint32_t>(bytes[pos + k]);
    pos += 4;
    return v;
  }

  std::string tag() {
    need(4, "chunk id");
    std::string id(4, '\0');
    for (int k = 0; k < 4; ++k) id[k] = static_cast<char>(bytes[pos + k]);
    pos += 4;
    return id;
  }
};

void append_u16(std::vector<std::byte>& out, std::uint16_t v) {
  out.push_back(static_cast<std::byte>(v & 0xff));
  out.push_back(static_cast<std::byte>((v >> 8) & 0xff));
}

void append_u32(std::vector<std::byte>& out, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<std::byte>((v >> (8 * k)) & 0xff));
}

void append_tag(std::vector<std::byte>& out, const char* id) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<std::byte>(id[k]));
}

std::uint16_t bits_per_sample(WavEncoding encoding) {
  switch (encoding) {
    case WavEncoding::IntegerPcm16: return 16;
    case WavEncoding::IntegerPcm24: return 24;
    case WavEncoding::Float32: return 32;
  }
  return 0;
}

// Round to nearest even, then saturate at the integer full-scale range.
std::int32_t quantize(double value, double scale, std::int32_t lo, std::int32_t hi) {
  const double scaled = std::nearbyint(value * scale);
  if (scaled <= static_cast<double>(lo)) return lo;
  if (scaled >= static_cast<double>(hi)) return hi;
  return static_cast<std::int32_t>(scaled);
}

std::optional<SsobaInfo> parse_ssob_chunk(std::span<const std::byte> body) {
  if (body.size() < 17) return std::nullopt;
  Reader r{body};
  if (r.u8() != kSsobaVersion) return std::nullopt;
  SsobaInfo info;
  info.n_objects = r.u32();
  info.c_channels = r.u32();
  info.shift_base = r.u32();
  info.original_rate = r.u32();
  if (info.n_objects == 0 || info.c_channels == 0 || info.original_rate == 0) return std::nullopt;
  return info;
}

}  // namespace

WavContents read_wav(std::span<const std::byte> bytes) {
  Reader r{bytes};
  if (r.remaining() < 12 || r.tag() != "RIFF") raise(Errc::NotRiff, "missing RIFF header at offset 0");
  r.u32();  // declared file size; the buffer is authoritative
  if (r.tag() != "WAVE") raise(Errc::NotRiff, "missing WAVE form type at offset 8");

  std::optional<WavFormat> format;
  std::uint16_t block_align = 0;
  std::span<const std::byte> data;
  std::size_t data_offset = 0;
  std::optional<SsobaInfo> ssoba;

  while (r.remaining() >= 8) {
    const std::string id = r.tag();
    const std::uint32_t size = r.u32();
    r.need(size, ("chunk '" + id + "'").c_str());
    const std::span<const std::byte> body = bytes.subspan(r.pos, size);

    if (id == "fmt ") {
      Reader f{body};
      f.need(16, "fmt chunk");
      const std::uint16_t code = f.u16();
      const std::uint16_t channels = f.u16();
      const std::uint32_t rate = f.u32();
      f.u32();  // byte rate
      block_align = f.u16();
      const std::uint16_t bits = f.u16();

      WavFormat fmt;
      fmt.channel_count = channels;
      fmt.sample_rate = rate;
      if (code == kFormatPcm && bits == 16) {
        fmt.encoding = WavEncoding::IntegerPcm16;
      } else if (code == kFormatPcm && bits == 24) {
        fmt.encoding = WavEncoding::IntegerPcm24;
      } else if (code == kFormatFloat && bits == 32) {
        fmt.encoding = WavEncoding::Float32;
      } else {
        raise(Errc::UnsupportedEncoding, "format code " + std::to_string(code) + " with " +
                                             std::to_string(bits) + " bits at offset " + std::to_string(r.pos));
      }
      if (channels == 0) raise(Errc::UnsupportedEncoding, "zero channels at offset " + std::to_string(r.pos));
      format = fmt;
    } else if (id == "data") {
      data = body;
      data_offset = r.pos;
    } else if (id == "ssob") {
      ssoba = parse_ssob_chunk(body);
    }
    // Anything else (LIST, fact, ...) is skipped.

    r.pos += size;
    if (size % 2 == 1 && r.remaining() >= 1) ++r.pos;  // chunk bodies are word-aligned
  }

  if (!format) raise(Errc::NotRiff, "no fmt chunk found");
  if (data.empty() && data_offset == 0) raise(Errc::NotRiff, "no data chunk found");

  const std::uint16_t bits = bits_per_sample(format->encoding);
  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t frame_size = block_align != 0 ? block_align : bytes_per_sample * format->channel_count;
  if (frame_size != bytes_per_sample * format->channel_count)
    raise(Errc::UnsupportedEncoding, "block align " + std::to_string(frame_size) +
                                         " does not match format at offset " + std::to_string(data_offset));
  if (data.size() % frame_size != 0)
    raise(Errc::TruncatedData, "data chunk of " + std::to_string(data.size()) +
                                   " bytes is not a whole number of frames at offset " +
                                   std::to_string(data_offset));

  const std::size_t frames = data.size() / frame_size;
  WavContents contents;
  contents.format = *format;
  contents.ssoba = ssoba;
  contents.channels.assign(format->channel_count, std::vector<double>(frames));

  const auto* raw = reinterpret_cast<const unsigned char*>(data.data());
  for (std::size_t frame = 0; frame < frames; ++frame) {
    for (std::uint16_t ch = 0; ch < format->channel_count; ++ch) {
      const unsigned char* p = raw + frame * frame_size + ch * bytes_per_sample;
      double value = 0.0;
      switch (format->encoding) {
        case WavEncoding::IntegerPcm16: {
          const auto v = static_cast<std::int16_t>(p[0] | (p[1] << 8));
          value = v / 32768.0;
          break;
        }
        case WavEncoding::IntegerPcm24: {
          std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
          if (v & 0x800000) v |= ~0xffffff;  // sign extend
          value = v / 8388608.0;
          break;
        }
        case WavEncoding::Float32: {
          float f;
          std::memcpy(&f, p, sizeof f);
          value = f;
          break;
        }
      }
      contents.channels[ch][frame] = value;
    }
  }
  return contents;
}

std::vector<std::byte> write_wav(const std::vector<std::vector<double>>& channels, const WavFormat& format,
                                 const std::optional<SsobaInfo>& ssoba) {
  if (channels.empty()) raise(Errc::ChannelLengthMismatch, "no channels to write");
  if (format.channel_count != channels.size())
    raise(Errc::ChannelLengthMismatch, "format says " + std::to_string(format.channel_count) +
                                           " channels, got " + std::to_string(channels.size()));
  if (format.sample_rate == 0) raise(Errc::InvalidSampleRate, "zero sample rate");
  const std::size_t frames = channels.front().size();
  for (std::size_t ch = 1; ch < channels.size(); ++ch) {
    if (channels[ch].size() != frames)
      raise(Errc::ChannelLengthMismatch, "channel " + std::to_string(ch) + " has " +
                                             std::to_string(channels[ch].size()) + " samples, channel 0 has " +
                                             std::to_string(frames));
  }

  const std::uint16_t bits = bits_per_sample(format.encoding);
  const std::uint16_t bytes_per_sample = bits / 8;
  const auto block_align = static_cast<std::uint16_t>(bytes_per_sample * format.channel_count);
  const std::uint32_t data_size = static_cast<std::uint32_t>(frames * block_align);
  const std::uint32_t data_pad = data_size % 2;
  const std::uint32_t ssob_total = ssoba ? 8 + 17 + 1 : 0;  // header + payload + pad
  const std::uint32_t riff_size = 4 + (8 + 16) + (8 + data_size + data_pad) + ssob_total;

  std::vector<std::byte> out;
  out.reserve(8 + riff_size);
  append_tag(out, "RIFF");
  append_u32(out, riff_size);
  append_tag(out, "WAVE");

  append_tag(out, "fmt ");
  append_u32(out, 16);
  append_u16(out, format.encoding == WavEncoding::Float32 ? kFormatFloat : kFormatPcm);
  append_u16(out, format.channel_count);
  append_u32(out, format.sample_rate);
  append_u32(out, format.sample_rate * block_align);
  append_u16(out, block_align);
  append_u16(out, bits);

  append_tag(out, "data");
  append_u32(out, data_size);
  for (std::size_t frame = 0; frame < frames; ++frame) {
    for (const auto& channel : channels) {
      const double value = channel[frame];
      switch (format.encoding) {
        case WavEncoding::IntegerPcm16: {
          const std::int32_t v = quantize(value, 32768.0, -32768, 32767);
          append_u16(out, static_cast<std::uint16_t>(v & 0xffff));
          break;
        }
        case WavEncoding::IntegerPcm24: {
          const std::int32_t v = quantize(value, 8388608.0, -8388608, 8388607);
          out.push_back(static_cast<std::byte>(v & 0xff));
          out.push_back(static_cast<std::byte>((v >> 8) & 0xff));
          out.push_back(static_cast<std::byte>((v >> 16) & 0xff));
          break;
        }
        case WavEncoding::Float32: {
          const auto f = static_cast<float>(value);
          std::uint32_t raw;
          std::memcpy(&raw, &f, sizeof raw);
          append_u32(out, raw);
          break;
        }
      }
    }
  }
  if (data_pad) out.push_back(std::byte{0});

  if (ssoba) {
    append_tag(out, "ssob");
    append_u32(out, 17);
    out.push_back(static_cast<std::byte>(kSsobaVersion));
    append_u32(out, ssoba->n_objects);
    append_u32(out, ssoba->c_channels);
    append_u32(out, ssoba->shift_base);
    append_u32(out, ssoba->original_rate);
    out.push_back(std::byte{0});  // pad to even
  }
  return out;
}

WavContents read_wav_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed on '" + path.string() + "'");
  return read_wav(std::as_bytes(std::span<const char>(raw)));
}

void write_wav_file(const std::filesystem::path& path, const std::vector<std::vector<double>>& channels,
                    const WavFormat& format, const std::optional<SsobaInfo>& ssoba) {
  const std::vector<std::byte> bytes = write_wav(channels, format, ssoba);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed on '" + path.string() + "'");
}

std::filesystem::path sidecar_path(const std::filesystem::path& wav_path) {
  std::filesystem::path p = wav_path;
  p += ".json";
  return p;
}

void write_sidecar(const std::filesystem::path& wav_path, const SsobaInfo& info) {
  nlohmann::json j{{"version", kSsobaVersion},
                   {"n_objects", info.n_objects},
                   {"c_channels", info.c_channels},
                   {"shift_base", info.shift_base},
                   {"original_rate", info.original_rate}};
  std::ofstream out(sidecar_path(wav_path), std::ios::trunc);
  if (!out) throw IoError("cannot open sidecar for '" + wav_path.string() + "'");
  out << j.dump(2) << "\n";
}

std::optional<SsobaInfo> read_sidecar(const std::filesystem::path& wav_path) {
  std::ifstream in(sidecar_path(wav_path));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    if (j.value("version", 0) != kSsobaVersion) return std::nullopt;
    SsobaInfo info;
    info.n_objects = j.at("n_objects").get<std::uint32_t>();
    info.c_channels = j.at("c_channels").get<std::uint32_t>();
    info.shift_base = j.at("shift_base").get<std::uint32_t>();
    info.original_rate = j.at("original_rate").get<std::uint32_t>();
    return info;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

}  // namespace ssoba
