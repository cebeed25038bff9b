#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ssoba/audio.hpp"

namespace ssoba {

// Population (divide-by-N) standard deviation about the mean.
double population_std(std::span<const double> values);

// Which signal's spread goes in the numerator of the SNR ratio. The default
// follows the evaluation protocol verbatim: the reconstructed signal, not
// the reference. ReferenceOverError is the conventional variant, exposed
// for comparison only.
enum class SnrConvention { ReconstructedOverError, ReferenceOverError };

// 20 * log10(std(y) / std(y - x)) with y the reconstructed signal and x the
// original. Returns +infinity when the error signal has zero spread (exact
// recovery, or recovery up to a DC offset).
double snr_db(const AudioObject& reconstructed, const AudioObject& original,
              SnrConvention convention = SnrConvention::ReconstructedOverError);

enum class QualityBand { Clean, BarelyImpaired, Impaired };

// >= 30 dB is effectively clean; impairment is barely noticeable from
// 20 dB up. Boundaries are inclusive.
QualityBand quality_band(double snr_db_value);

std::string_view quality_band_name(QualityBand band);

struct SnrReport {
  std::vector<double> per_object_db;
  double mean_db = 0.0;
  CodecParams params;
  std::uint32_t sample_rate = 0;
};

SnrReport measure_set(const std::vector<AudioObject>& reconstructed,
                      const std::vector<AudioObject>& originals, const CodecParams& params);

// Fixed-point decibel text for reports; infinities render as "inf"/"-inf".
std::string format_db(double db);

}  // namespace ssoba
