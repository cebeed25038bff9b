#include "ssoba/codec.hpp"

#include <string>

#include "ssoba/error.hpp"
#include "ssoba/schedule.hpp"

namespace ssoba {

EncodedStream encode(const ObjectSet& input, std::uint32_t c_channels) {
  if (input.count() == 0) raise(Errc::EmptyObjectSet, "nothing to encode");
  CodecParams params{input.count(), c_channels, 1};
  params.validate();

  const std::size_t len = input.length();
  EncodedStream stream;
  stream.sample_rate = input.sample_rate();
  stream.params = params;
  stream.channels.assign(c_channels, std::vector<double>(len, 0.0));

  for (std::uint32_t i = 0; i < params.n_objects; ++i) {
    const std::vector<double>& samples = input.at(i).samples;
    for (std::size_t t = 0; t < len; ++t) {
      if (Placement p = schedule_position(i, t, params)) stream.channels[*p][t] = samples[t];
    }
  }
  return stream;
}

DecodeResult decode(const EncodedStream& stream) {
  const CodecParams& params = stream.params;
  params.validate();
  if (stream.channels.size() != params.c_channels)
    raise(Errc::ChannelCountMismatch, "stream has " + std::to_string(stream.channels.size()) +
                                          " channels, params say " + std::to_string(params.c_channels));
  const std::size_t len = stream.length();
  for (const auto& channel : stream.channels) {
    if (channel.size() != len)
      raise(Errc::ChannelLengthMismatch, "channel lengths differ within the stream");
  }

  DecodeResult result;
  result.params = params;
  result.sample_rate = stream.sample_rate;
  result.sparse_objects.reserve(params.n_objects);

  for (std::uint32_t i = 0; i < params.n_objects; ++i) {
    SparseObject sparse;
    sparse.object_index = i;
    sparse.values.assign(len, 0.0);
    sparse.known_mask.assign(len, false);
    for (std::size_t t = 0; t < len; ++t) {
      if (Placement p = schedule_position(i, t, params)) {
        sparse.values[t] = stream.channels[*p][t];
        sparse.known_mask[t] = true;
      }
    }
    result.sparse_objects.push_back(std::move(sparse));
  }
  return result;
}

bool roundtrip_lossless_check(const ObjectSet& input, std::uint32_t c_channels) {
  if (input.count() > c_channels) return false;
  const DecodeResult result = decode(encode(input, c_channels));
  for (std::uint32_t i = 0; i < input.count(); ++i) {
    const SparseObject& sparse = result.sparse_objects[i];
    const std::vector<double>& original = input.at(i).samples;
    for (std::size_t t = 0; t < original.size(); ++t) {
      if (!sparse.known_mask[t] || sparse.values[t] != original[t]) return false;
    }
  }
  return true;
}

}  // namespace ssoba
