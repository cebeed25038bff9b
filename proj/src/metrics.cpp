#include "ssoba/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "ssoba/error.hpp"

namespace ssoba {

double population_std(std::span<const double> values) {
  if (values.empty()) raise(Errc::EmptyVector, "standard deviation of an empty vector");
  // Welford's recurrence; numerically stable for long audio vectors.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t count = 0;
  for (double v : values) {
    ++count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (v - mean);
  }
  return std::sqrt(m2 / static_cast<double>(count));
}

double snr_db(const AudioObject& reconstructed, const AudioObject& original, SnrConvention convention) {
  if (reconstructed.samples.size() != original.samples.size())
    raise(Errc::LengthMismatch, "'" + reconstructed.label + "' has " +
                                    std::to_string(reconstructed.samples.size()) + " samples, '" +
                                    original.label + "' has " + std::to_string(original.samples.size()));
  if (reconstructed.sample_rate != original.sample_rate)
    raise(Errc::RateMismatch, "'" + reconstructed.label + "' at " + std::to_string(reconstructed.sample_rate) +
                                  " Hz, '" + original.label + "' at " + std::to_string(original.sample_rate) +
                                  " Hz");

  std::vector<double> error(reconstructed.samples.size());
  for (std::size_t t = 0; t < error.size(); ++t) error[t] = reconstructed.samples[t] - original.samples[t];

  const double error_std = population_std(error);
  if (error_std == 0.0) return std::numeric_limits<double>::infinity();

  const AudioObject& numerator =
      convention == SnrConvention::ReconstructedOverError ? reconstructed : original;
  return 20.0 * std::log10(population_std(numerator.samples) / error_std);
}

QualityBand quality_band(double snr_db_value) {
  if (snr_db_value >= 30.0) return QualityBand::Clean;
  if (snr_db_value >= 20.0) return QualityBand::BarelyImpaired;
  return QualityBand::Impaired;
}

std::string_view quality_band_name(QualityBand band) {
  switch (band) {
    case QualityBand::Clean: return "clean";
    case QualityBand::BarelyImpaired: return "barely_impaired";
    case QualityBand::Impaired: return "impaired";
  }
  return "unknown";
}

SnrReport measure_set(const std::vector<AudioObject>& reconstructed,
                      const std::vector<AudioObject>& originals, const CodecParams& params) {
  if (reconstructed.size() != originals.size())
    raise(Errc::LengthMismatch, "reconstructed set has " + std::to_string(reconstructed.size()) +
                                    " objects, original set has " + std::to_string(originals.size()));
  if (originals.empty()) raise(Errc::EmptyObjectSet, "nothing to measure");

  SnrReport report;
  report.params = params;
  report.sample_rate = originals.front().sample_rate;
  report.per_object_db.reserve(originals.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < originals.size(); ++i) {
    const double db = snr_db(reconstructed[i], originals[i]);
    report.per_object_db.push_back(db);
    sum += db;
  }
  report.mean_db = sum / static_cast<double>(originals.size());
  return report;
}

std::string format_db(double db) {
  if (std::isinf(db)) return db > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", db);
  return buffer;
}

}  // namespace ssoba
