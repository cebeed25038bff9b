#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ssoba {

// One mono source. Amplitudes are normalized full scale, nominally in
// [-1, +1]; the codec never rescales them.
struct AudioObject {
  std::vector<double> samples;
  std::uint32_t sample_rate = 0;
  std::string label;

  std::size_t length() const noexcept { return samples.size(); }

  // Throws Error on empty signal, non-finite sample or zero rate.
  void validate() const;
};

// Ordered collection of equal-length, equal-rate mono objects: the encoder
// input. Construction validates; instances are immutable afterwards.
class ObjectSet {
 public:
  ObjectSet() = default;
  explicit ObjectSet(std::vector<AudioObject> objects);

  const std::vector<AudioObject>& objects() const noexcept { return objects_; }
  const AudioObject& at(std::size_t i) const { return objects_.at(i); }

  std::uint32_t count() const noexcept { return static_cast<std::uint32_t>(objects_.size()); }
  std::size_t length() const noexcept { return objects_.empty() ? 0 : objects_.front().samples.size(); }
  std::uint32_t sample_rate() const noexcept { return objects_.empty() ? 0 : objects_.front().sample_rate; }

  static constexpr std::uint32_t kMaxObjects = 10;

 private:
  std::vector<AudioObject> objects_;
};

// (N, C, shift origin) fully determine the sample schedule. shift_base is
// the index origin of the modulus; 1 makes numeric shifts match 1-based
// sample numbering and is normative for the file format.
struct CodecParams {
  std::uint32_t n_objects = 0;
  std::uint32_t c_channels = 0;
  std::uint32_t shift_base = 1;

  bool lossless() const noexcept { return n_objects <= c_channels; }

  void validate() const;
};

// The broadcast signal: C channel vectors of plain PCM amplitudes, playable
// as an ordinary multichannel stream.
struct EncodedStream {
  std::vector<std::vector<double>> channels;
  std::uint32_t sample_rate = 0;
  CodecParams params;

  std::size_t length() const noexcept { return channels.empty() ? 0 : channels.front().size(); }
};

// One object's decoded samples with an explicit known/missing mask. Entries
// at masked-out positions are zero-filled and carry no information.
struct SparseObject {
  std::vector<double> values;
  std::vector<bool> known_mask;
  std::uint32_t object_index = 0;

  std::size_t length() const noexcept { return values.size(); }
  std::size_t known_count() const;
};

}  // namespace ssoba
