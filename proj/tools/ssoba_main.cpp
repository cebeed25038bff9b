// Command-line front end: encode/decode WAV stems through the sample
// interleaving codec, measure recovery quality, and run the sampling-rate
// sweep harness.
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ssoba/anchors.hpp"
#include "ssoba/codec.hpp"
#include "ssoba/error.hpp"
#include "ssoba/interpolation.hpp"
#include "ssoba/metrics.hpp"
#include "ssoba/signalgen.hpp"
#include "ssoba/wav_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

constexpr double kSweepFixtureSeconds = 0.5;

ssoba::SplineOrder parse_order(const std::string& name) {
  if (name == "linear") return ssoba::SplineOrder::Linear;
  if (name == "quadratic") return ssoba::SplineOrder::Quadratic;
  if (name == "cubic") return ssoba::SplineOrder::Cubic;
  ssoba::raise(ssoba::Errc::InvalidParams, "unknown spline order '" + name + "'");
}

// Finite values serialize as numbers; infinities as the "inf" sentinel text.
json json_db(double db) {
  if (std::isinf(db)) return db > 0 ? "inf" : "-inf";
  return db;
}

ssoba::AudioObject load_mono(const fs::path& path) {
  const ssoba::WavContents contents = ssoba::read_wav_file(path);
  if (contents.channels.size() != 1)
    ssoba::raise(ssoba::Errc::InvalidParams,
                 "'" + path.string() + "' has " + std::to_string(contents.channels.size()) +
                     " channels, expected mono");
  ssoba::AudioObject obj;
  obj.samples = contents.channels.front();
  obj.sample_rate = contents.format.sample_rate;
  obj.label = path.filename().string();
  return obj;
}

std::vector<fs::path> sorted_wavs(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw ssoba::IoError("'" + dir.string() + "' is not a directory");
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".wav") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

int cmd_encode(const std::vector<std::string>& inputs, std::uint32_t channels, const fs::path& out) {
  std::vector<ssoba::AudioObject> objects;
  objects.reserve(inputs.size());
  for (const auto& input : inputs) objects.push_back(load_mono(input));
  const ssoba::ObjectSet set(std::move(objects));

  const ssoba::EncodedStream stream = ssoba::encode(set, channels);
  const ssoba::SsobaInfo info = ssoba::SsobaInfo::from_params(stream.params, stream.sample_rate);
  ssoba::write_wav_file(out, stream.channels, ssoba::WavFormat{ssoba::WavEncoding::Float32,
                                                               static_cast<std::uint16_t>(channels),
                                                               stream.sample_rate},
                        info);
  ssoba::write_sidecar(out, info);

  std::cerr << "objects: " << stream.params.n_objects << "\n"
            << "channels: " << stream.params.c_channels << "\n"
            << "rate: " << stream.sample_rate << "\n";
  if (stream.params.lossless()) {
    std::cerr << "regime: lossless\n";
  } else {
    std::cerr << "regime: lossy (keep " << stream.params.c_channels << "/" << stream.params.n_objects
              << " samples per object)\n";
  }
  std::cerr << "wrote " << out.string() << " and sidecar " << ssoba::sidecar_path(out).string() << "\n";
  return kExitOk;
}

int cmd_decode(const fs::path& input, const fs::path& out_dir, const std::string& spline) {
  const ssoba::SplineOrder order = parse_order(spline);
  const ssoba::WavContents contents = ssoba::read_wav_file(input);

  std::optional<ssoba::SsobaInfo> info = contents.ssoba;
  if (!info) info = ssoba::read_sidecar(input);
  if (!info)
    ssoba::raise(ssoba::Errc::MissingParams,
                 "'" + input.string() + "' carries no ssob chunk and no readable sidecar");

  ssoba::EncodedStream stream;
  stream.channels = contents.channels;
  stream.sample_rate = contents.format.sample_rate;
  stream.params = info->to_params();

  const ssoba::DecodeResult decoded = ssoba::decode(stream);
  fs::create_directories(out_dir);
  for (const ssoba::SparseObject& sparse : decoded.sparse_objects) {
    const ssoba::ReconstructionResult result = ssoba::reconstruct(sparse, order, decoded.sample_rate);
    const fs::path out = out_dir / (result.audio.label + ".wav");
    ssoba::write_wav_file(out, {result.audio.samples},
                          ssoba::WavFormat{ssoba::WavEncoding::Float32, 1, decoded.sample_rate});
  }
  std::cerr << "decoded " << decoded.sparse_objects.size() << " objects ("
            << ssoba::spline_order_name(order) << " reconstruction) into " << out_dir.string() << "\n";
  return kExitOk;
}

int cmd_snr(const fs::path& original_dir, const fs::path& decoded_dir, const std::string& format) {
  const std::vector<fs::path> original_paths = sorted_wavs(original_dir);
  const std::vector<fs::path> decoded_paths = sorted_wavs(decoded_dir);
  if (original_paths.size() != decoded_paths.size())
    ssoba::raise(ssoba::Errc::LengthMismatch,
                 "object counts differ: " + std::to_string(original_paths.size()) + " originals vs " +
                     std::to_string(decoded_paths.size()) + " decoded");
  if (original_paths.empty()) ssoba::raise(ssoba::Errc::EmptyObjectSet, "no .wav files found");

  std::vector<ssoba::AudioObject> originals, decoded;
  for (std::size_t i = 0; i < original_paths.size(); ++i) {
    originals.push_back(load_mono(original_paths[i]));
    decoded.push_back(load_mono(decoded_paths[i]));
  }

  const ssoba::CodecParams params{static_cast<std::uint32_t>(originals.size()), 0, 1};
  const ssoba::SnrReport report = ssoba::measure_set(decoded, originals, params);

  if (format == "csv") {
    std::cout << "object,snr_db,quality\n";
    for (std::size_t i = 0; i < report.per_object_db.size(); ++i) {
      const double db = report.per_object_db[i];
      std::cout << i << "," << ssoba::format_db(db) << "," << ssoba::quality_band_name(ssoba::quality_band(db))
                << "\n";
    }
  } else {
    json objects = json::array();
    for (std::size_t i = 0; i < report.per_object_db.size(); ++i) {
      const double db = report.per_object_db[i];
      objects.push_back(json{{"object", i},
                             {"label", originals[i].label},
                             {"snr_db", json_db(db)},
                             {"quality", ssoba::quality_band_name(ssoba::quality_band(db))}});
    }
    const json out{{"count", report.per_object_db.size()},
                   {"sample_rate", report.sample_rate},
                   {"mean_db", json_db(report.mean_db)},
                   {"objects", objects}};
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

struct SweepCell {
  std::uint32_t n = 0;
  std::uint32_t rate = 0;
  std::vector<double> per_object_db;
};

int cmd_sweep(std::vector<std::uint32_t> n_list, std::uint32_t channels, std::vector<std::uint32_t> rates,
              const std::string& spline, std::uint64_t seed, const std::string& out_path) {
  const ssoba::SplineOrder order = parse_order(spline);
  std::sort(n_list.begin(), n_list.end());
  std::sort(rates.begin(), rates.end());

  std::vector<SweepCell> grid;
  for (std::uint32_t n : n_list) {
    for (std::uint32_t rate : rates) grid.push_back(SweepCell{n, rate, {}});
  }

  // Grid points are independent; a small worker pool fills slots in place,
  // so output order never depends on completion order.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t slot = next.fetch_add(1); slot < grid.size(); slot = next.fetch_add(1)) {
      SweepCell& cell = grid[slot];
      const ssoba::ObjectSet fixtures =
          ssoba::standard_object_set(cell.n, cell.rate, kSweepFixtureSeconds, seed);
      const ssoba::DecodeResult decoded = ssoba::decode(ssoba::encode(fixtures, channels));
      cell.per_object_db.resize(cell.n);
      for (std::uint32_t i = 0; i < cell.n; ++i) {
        const ssoba::ReconstructionResult result =
            ssoba::reconstruct(decoded.sparse_objects[i], order, cell.rate);
        cell.per_object_db[i] = ssoba::snr_db(result.audio, fixtures.at(i));
      }
    }
  };

  const std::size_t worker_count =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), grid.size());
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < worker_count; ++w) workers.emplace_back(worker);
  for (std::thread& w : workers) w.join();

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path, std::ios::trunc);
    if (!file) throw ssoba::IoError("cannot open '" + out_path + "' for writing");
    out = &file;
  }
  *out << "n,rate_hz,object,snr_db\n";
  for (const SweepCell& cell : grid) {
    for (std::size_t i = 0; i < cell.per_object_db.size(); ++i) {
      *out << cell.n << "," << cell.rate << "," << i << "," << ssoba::format_db(cell.per_object_db[i])
           << "\n";
    }
  }
  if (file.is_open() && !file) throw ssoba::IoError("write failed on '" + out_path + "'");
  return kExitOk;
}

int cmd_anchors(const fs::path& reference_path, const fs::path& out_dir) {
  const ssoba::AudioObject reference = load_mono(reference_path);
  const ssoba::AnchorPair anchors = ssoba::make_anchors(reference);
  fs::create_directories(out_dir);
  const ssoba::WavFormat format{ssoba::WavEncoding::Float32, 1, reference.sample_rate};
  ssoba::write_wav_file(out_dir / "anchor_3_5k.wav", {anchors.anchor_3_5k.samples}, format);
  ssoba::write_wav_file(out_dir / "anchor_7k.wav", {anchors.anchor_7k.samples}, format);
  std::cerr << "wrote anchor_3_5k.wav and anchor_7k.wav into " << out_dir.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sample-by-sample object audio codec and evaluation harness"};
  app.require_subcommand(1);

  // encode
  auto* encode = app.add_subcommand("encode", "Interleave mono WAV objects into one multichannel WAV");
  std::vector<std::string> encode_inputs;
  std::uint32_t encode_channels = 2;
  std::string encode_out;
  encode->add_option("inputs", encode_inputs, "Mono WAV files, one per object")->required();
  encode->add_option("--channels", encode_channels, "Output channel count")->capture_default_str();
  encode->add_option("--out", encode_out, "Output WAV path")->required();

  // decode
  auto* decode = app.add_subcommand("decode", "Split an encoded WAV back into reconstructed objects");
  std::string decode_input;
  std::string decode_out_dir;
  std::string decode_spline = "cubic";
  decode->add_option("input", decode_input, "Encoded WAV (with ssob chunk or sidecar)")->required();
  decode->add_option("--out-dir", decode_out_dir, "Directory for obj*.wav outputs")->required();
  decode->add_option("--spline", decode_spline, "linear|quadratic|cubic")
      ->capture_default_str()
      ->check(CLI::IsMember({"linear", "quadratic", "cubic"}));

  // snr
  auto* snr = app.add_subcommand("snr", "Per-object recovery quality of decoded vs original stems");
  std::string snr_original_dir, snr_decoded_dir;
  std::string snr_format = "json";
  snr->add_option("original_dir", snr_original_dir, "Directory of original mono WAVs")->required();
  snr->add_option("decoded_dir", snr_decoded_dir, "Directory of decoded mono WAVs")->required();
  snr->add_option("--format", snr_format, "json|csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Object-count x sampling-rate grid on synthetic fixtures");
  std::vector<std::uint32_t> sweep_objects{3, 4, 5, 6, 7, 8, 9, 10};
  std::uint32_t sweep_channels = 2;
  std::vector<std::uint32_t> sweep_rates{32000, 44100, 48000, 64000, 88200, 96000};
  std::string sweep_spline = "cubic";
  std::uint64_t sweep_seed = 0;
  std::string sweep_out;
  sweep->add_option("--objects", sweep_objects, "Object counts to sweep")->capture_default_str();
  sweep->add_option("--channels", sweep_channels, "Output channel count")->capture_default_str();
  sweep->add_option("--rates", sweep_rates, "Sampling rates in Hz")->capture_default_str();
  sweep->add_option("--spline", sweep_spline, "linear|quadratic|cubic")
      ->capture_default_str()
      ->check(CLI::IsMember({"linear", "quadratic", "cubic"}));
  sweep->add_option("--seed", sweep_seed, "Fixture seed")->capture_default_str();
  sweep->add_option("--out", sweep_out, "CSV output path (default stdout)");

  // anchors
  auto* anchors = app.add_subcommand("anchors", "Low-pass anchor stimuli from a reference WAV");
  std::string anchors_reference, anchors_out_dir;
  anchors->add_option("reference", anchors_reference, "Reference mono WAV")->required();
  anchors->add_option("--out-dir", anchors_out_dir, "Directory for the two anchors")->required();

  try {
    app.parse(argc, argv);
    if (encode->parsed()) return cmd_encode(encode_inputs, encode_channels, encode_out);
    if (decode->parsed()) return cmd_decode(decode_input, decode_out_dir, decode_spline);
    if (snr->parsed()) return cmd_snr(snr_original_dir, snr_decoded_dir, snr_format);
    if (sweep->parsed())
      return cmd_sweep(sweep_objects, sweep_channels, sweep_rates, sweep_spline, sweep_seed, sweep_out);
    if (anchors->parsed()) return cmd_anchors(anchors_reference, anchors_out_dir);
    return kExitValidation;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  } catch (const ssoba::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ssoba::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
