#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ssoba/codec.hpp"
#include "ssoba/error.hpp"
#include "ssoba/schedule.hpp"
#include "support/oracles.hpp"

using namespace ssoba;

namespace {

AudioObject object_from(std::vector<double> samples, const char* label, std::uint32_t rate = 48000) {
  AudioObject obj;
  obj.samples = std::move(samples);
  obj.sample_rate = rate;
  obj.label = label;
  return obj;
}

ObjectSet random_set(std::mt19937_64& rng, std::uint32_t n, std::size_t len, bool quantized = false) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::vector<AudioObject> objects;
  for (std::uint32_t i = 0; i < n; ++i) {
    AudioObject obj;
    obj.sample_rate = 48000;
    obj.label = "obj" + std::to_string(i);
    obj.samples.resize(len);
    for (double& v : obj.samples) {
      v = amp(rng);
      if (quantized) v = std::round(v * 32767.0) / 32768.0;
    }
    objects.push_back(std::move(obj));
  }
  return ObjectSet(std::move(objects));
}

}  // namespace

TEST_CASE("encode hand-rotated 2x2 example") {
  const double a0 = 0.1, a1 = 0.2, b0 = -0.3, b1 = -0.4;
  const ObjectSet input({object_from({a0, a1}, "a"), object_from({b0, b1}, "b")});
  const EncodedStream stream = encode(input, 2);

  REQUIRE(stream.channels.size() == 2);
  CHECK(stream.channels[0] == std::vector<double>{b0, a1});
  CHECK(stream.channels[1] == std::vector<double>{a0, b1});
  CHECK(stream.sample_rate == 48000);
  CHECK(stream.params.n_objects == 2);
  CHECK(stream.params.c_channels == 2);
}

TEST_CASE("encode single object to single channel is the identity") {
  const std::vector<double> signal{0.5, -0.25, 0.125, 0.0, 1.0};
  const ObjectSet input({object_from(signal, "solo")});
  const EncodedStream stream = encode(input, 1);
  REQUIRE(stream.channels.size() == 1);
  CHECK(stream.channels[0] == signal);
}

TEST_CASE("lossy 3-into-2: object 1's first sample is absent from both channels") {
  const ObjectSet input({object_from({0.11, 0.12}, "a"), object_from({0.21, 0.22}, "b"),
                         object_from({0.31, 0.32}, "c")});
  const EncodedStream stream = encode(input, 2);
  REQUIRE(stream.channels.size() == 2);
  CHECK(stream.channels[0][0] != 0.21);
  CHECK(stream.channels[1][0] != 0.21);
}

TEST_CASE("encode matches the per-index rotate-and-truncate oracle") {
  std::mt19937_64 rng(7701);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = std::uniform_int_distribution<std::uint32_t>(1, 10)(rng);
    const auto c = std::uniform_int_distribution<std::uint32_t>(1, 10)(rng);
    const auto len = std::uniform_int_distribution<std::size_t>(1, 300)(rng);
    const ObjectSet input = random_set(rng, n, len);
    CHECK(encode(input, c).channels == testing::oracle_encode(input, c));
  }
}

TEST_CASE("surplus channels carry silence when N < C") {
  const ObjectSet input({object_from({0.5, 0.5, 0.5}, "a"), object_from({-0.5, -0.5, -0.5}, "b")});
  const EncodedStream stream = encode(input, 4);
  REQUIRE(stream.channels.size() == 4);
  CHECK(stream.channels[2] == std::vector<double>(3, 0.0));
  CHECK(stream.channels[3] == std::vector<double>(3, 0.0));
}

TEST_CASE("encoder output is a pure permutation-with-erasure of input samples") {
  std::mt19937_64 rng(99);
  const ObjectSet input = random_set(rng, 7, 200);
  const EncodedStream stream = encode(input, 3);

  for (std::size_t t = 0; t < 200; ++t) {
    std::multiset<double> inputs_at_t;
    for (std::uint32_t i = 0; i < 7; ++i) inputs_at_t.insert(input.at(i).samples[t]);
    for (const auto& channel : stream.channels) {
      // Every output value is one of the input samples at the same index,
      // never an arithmetic blend.
      CHECK(inputs_at_t.count(channel[t]) > 0);
    }
  }
}

TEST_CASE("decode round trip is bit-exact in the lossless regime") {
  std::mt19937_64 rng(424242);
  for (std::uint32_t n = 1; n <= 10; ++n) {
    for (std::uint32_t c = n; c <= 10; c += 3) {
      const auto len = std::uniform_int_distribution<std::size_t>(1, 1000)(rng);
      const bool quantized = (n + c) % 2 == 0;
      const ObjectSet input = random_set(rng, n, len, quantized);

      const DecodeResult result = decode(encode(input, c));
      REQUIRE(result.sparse_objects.size() == n);
      for (std::uint32_t i = 0; i < n; ++i) {
        const SparseObject& sparse = result.sparse_objects[i];
        CHECK(sparse.known_count() == len);
        CHECK(sparse.values == input.at(i).samples);
      }
    }
  }
}

TEST_CASE("lossy decode: known samples exact, known fraction C/N up to boundary") {
  std::mt19937_64 rng(5150);
  for (std::uint32_t n = 2; n <= 10; ++n) {
    for (std::uint32_t c = 1; c < n; ++c) {
      const std::size_t len = 997;  // deliberately not a multiple of any n
      const ObjectSet input = random_set(rng, n, len);
      const DecodeResult result = decode(encode(input, c));

      for (std::uint32_t i = 0; i < n; ++i) {
        const SparseObject& sparse = result.sparse_objects[i];
        std::size_t known = 0;
        for (std::size_t t = 0; t < len; ++t) {
          if (sparse.known_mask[t]) {
            ++known;
            CHECK(sparse.values[t] == input.at(i).samples[t]);
          }
        }
        // Whole periods contribute exactly C knowns; the final partial
        // period contributes between 0 and C more.
        const std::size_t full_periods = len / n;
        CHECK(known >= full_periods * c);
        CHECK(known <= full_periods * c + c);
      }
    }
  }
}

TEST_CASE("decode of N=5 C=2 masks: exactly 2 known per 5 consecutive indices") {
  std::mt19937_64 rng(31);
  const ObjectSet input = random_set(rng, 5, 500);
  const DecodeResult result = decode(encode(input, 2));
  for (const SparseObject& sparse : result.sparse_objects) {
    for (std::size_t start = 0; start + 5 <= 500; ++start) {
      int known = 0;
      for (std::size_t k = 0; k < 5; ++k) known += sparse.known_mask[start + k] ? 1 : 0;
      CHECK(known == 2);
    }
  }
}

TEST_CASE("single-sample signals round-trip") {
  const ObjectSet input({object_from({0.75}, "a"), object_from({-0.75}, "b")});
  const DecodeResult result = decode(encode(input, 2));
  CHECK(result.sparse_objects[0].values == std::vector<double>{0.75});
  CHECK(result.sparse_objects[1].values == std::vector<double>{-0.75});
  CHECK(result.sparse_objects[0].known_mask[0]);
  CHECK(result.sparse_objects[1].known_mask[0]);
}

TEST_CASE("roundtrip_lossless_check reflects the regime") {
  std::mt19937_64 rng(8);
  CHECK(roundtrip_lossless_check(random_set(rng, 2, 64), 2));
  CHECK(roundtrip_lossless_check(random_set(rng, 2, 64), 4));
  CHECK_FALSE(roundtrip_lossless_check(random_set(rng, 3, 64), 2));
}

TEST_CASE("codec error paths") {
  const ObjectSet input({object_from({0.1, 0.2}, "a")});
  CHECK_THROWS_AS(encode(input, 0), Error);

  EncodedStream stream = encode(input, 2);
  stream.channels.pop_back();
  try {
    decode(stream);
    FAIL("expected ChannelCountMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ChannelCountMismatch);
  }

  EncodedStream ragged = encode(input, 2);
  ragged.channels[1].pop_back();
  CHECK_THROWS_AS(decode(ragged), Error);
}
