#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssoba {

// Every failure the library reports, one code per named condition.
enum class Errc {
  // object model
  EmptyObjectSet,
  TooManyObjects,
  MismatchedLengths,
  MismatchedRates,
  EmptySignal,
  NonFiniteSample,
  InvalidSampleRate,
  InvalidParams,
  // codec
  ChannelCountMismatch,
  // interpolation
  TooFewKnots,
  NonMonotonicKnots,
  AllMissing,
  // metrics
  EmptyVector,
  LengthMismatch,
  RateMismatch,
  // signal generation
  AliasedTone,
  ClippingAmplitude,
  // anchors
  InvalidCutoff,
  // wav container
  NotRiff,
  UnsupportedEncoding,
  TruncatedData,
  ChannelLengthMismatch,
  MissingParams,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

// Filesystem-level failure (open/read/write), distinct from validation
// errors so callers can map it to a different exit code.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ssoba
