#include "ssoba/audio.hpp"

#include <cmath>

#include "ssoba/error.hpp"

namespace ssoba {

void AudioObject::validate() const {
  if (samples.empty()) raise(Errc::EmptySignal, "object '" + label + "' has no samples");
  if (sample_rate == 0) raise(Errc::InvalidSampleRate, "object '" + label + "' has zero sample rate");
  for (double v : samples) {
    if (!std::isfinite(v)) raise(Errc::NonFiniteSample, "object '" + label + "' contains a non-finite sample");
  }
}

ObjectSet::ObjectSet(std::vector<AudioObject> objects) : objects_(std::move(objects)) {
  if (objects_.empty()) raise(Errc::EmptyObjectSet, "object set is empty");
  if (objects_.size() > kMaxObjects)
    raise(Errc::TooManyObjects, "object set holds " + std::to_string(objects_.size()) +
                                    " objects, limit is " + std::to_string(kMaxObjects));
  const AudioObject& first = objects_.front();
  first.validate();
  for (std::size_t i = 1; i < objects_.size(); ++i) {
    const AudioObject& obj = objects_[i];
    obj.validate();
    if (obj.sample_rate != first.sample_rate)
      raise(Errc::MismatchedRates, "object '" + obj.label + "' rate " + std::to_string(obj.sample_rate) +
                                       " differs from '" + first.label + "' rate " +
                                       std::to_string(first.sample_rate));
    if (obj.samples.size() != first.samples.size())
      raise(Errc::MismatchedLengths, "object '" + obj.label + "' length " + std::to_string(obj.samples.size()) +
                                         " differs from '" + first.label + "' length " +
                                         std::to_string(first.samples.size()));
  }
}

void CodecParams::validate() const {
  if (n_objects == 0) raise(Errc::InvalidParams, "n_objects must be >= 1");
  if (c_channels == 0) raise(Errc::InvalidParams, "c_channels must be >= 1");
  if (n_objects > ObjectSet::kMaxObjects)
    raise(Errc::TooManyObjects, "n_objects " + std::to_string(n_objects) + " exceeds limit " +
                                    std::to_string(ObjectSet::kMaxObjects));
  if (shift_base != 1) raise(Errc::InvalidParams, "unsupported shift_base " + std::to_string(shift_base));
}

std::size_t SparseObject::known_count() const {
  std::size_t count = 0;
  for (bool known : known_mask)
    if (known) ++count;
  return count;
}

}  // namespace ssoba
