#include "ssoba/error.hpp"

namespace ssoba {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::EmptyObjectSet: return "EmptyObjectSet";
    case Errc::TooManyObjects: return "TooManyObjects";
    case Errc::MismatchedLengths: return "MismatchedLengths";
    case Errc::MismatchedRates: return "MismatchedRates";
    case Errc::EmptySignal: return "EmptySignal";
    case Errc::NonFiniteSample: return "NonFiniteSample";
    case Errc::InvalidSampleRate: return "InvalidSampleRate";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::ChannelCountMismatch: return "ChannelCountMismatch";
    case Errc::TooFewKnots: return "TooFewKnots";
    case Errc::NonMonotonicKnots: return "NonMonotonicKnots";
    case Errc::AllMissing: return "AllMissing";
    case Errc::EmptyVector: return "EmptyVector";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::RateMismatch: return "RateMismatch";
    case Errc::AliasedTone: return "AliasedTone";
    case Errc::ClippingAmplitude: return "ClippingAmplitude";
    case Errc::InvalidCutoff: return "InvalidCutoff";
    case Errc::NotRiff: return "NotRiff";
    case Errc::UnsupportedEncoding: return "UnsupportedEncoding";
    case Errc::TruncatedData: return "TruncatedData";
    case Errc::ChannelLengthMismatch: return "ChannelLengthMismatch";
    case Errc::MissingParams: return "MissingParams";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace ssoba
