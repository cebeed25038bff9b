#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ssoba/audio.hpp"
#include "ssoba/error.hpp"
#include "ssoba/schedule.hpp"
#include "support/oracles.hpp"

using namespace ssoba;

TEST_CASE("schedule_shift follows 1-based sample numbering") {
  // First samples shift by mod(1, N), so 0-based index t shifts by (t+1) mod N.
  CHECK(schedule_shift(0, 5) == 1);
  CHECK(schedule_shift(1, 5) == 2);
  CHECK(schedule_shift(4, 5) == 0);  // fifth sample: no shift
  CHECK(schedule_shift(7, 1) == 0);  // single object never shifts
  CHECK(schedule_shift(9, 10) == 0);
  CHECK(schedule_shift(10, 10) == 1);
}

TEST_CASE("schedule_position worked examples") {
  const CodecParams stereo_two{2, 2, 1};
  const Placement p0 = schedule_position(0, 0, stereo_two);
  REQUIRE(p0.has_value());
  CHECK(*p0 == 1);

  const CodecParams three_into_two{3, 2, 1};
  CHECK_FALSE(schedule_position(1, 0, three_into_two).has_value());  // (1+1) mod 3 = 2 >= C

  // N == C keeps everything.
  for (std::uint32_t n = 1; n <= 10; ++n) {
    const CodecParams square{n, n, 1};
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < 25; ++t) {
        CHECK(schedule_position(i, t, square).has_value());
      }
    }
  }
}

TEST_CASE("kept placements form a bijection onto channels at every index") {
  for (std::uint32_t n = 1; n <= 10; ++n) {
    for (std::uint32_t c = 1; c <= n; ++c) {
      const CodecParams params{n, c, 1};
      for (std::size_t t = 0; t < 50; ++t) {
        std::set<std::uint32_t> used_channels;
        std::uint32_t kept = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
          if (const Placement p = schedule_position(i, t, params)) {
            ++kept;
            CHECK(*p < c);
            CHECK(used_channels.insert(*p).second);  // no collision
          }
        }
        CHECK(kept == c);  // every channel occupied
      }
    }
  }
}

TEST_CASE("per-object kept samples come in contiguous runs of length C, C per window of N") {
  for (std::uint32_t n = 1; n <= 10; ++n) {
    for (std::uint32_t c = 1; c <= n; ++c) {
      const CodecParams params{n, c, 1};
      constexpr std::size_t kLen = 400;
      for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<bool> kept(kLen);
        for (std::size_t t = 0; t < kLen; ++t) kept[t] = schedule_position(i, t, params).has_value();

        // Sliding window of N consecutive indices holds exactly C kept samples.
        for (std::size_t start = 0; start + n <= kLen; ++start) {
          std::uint32_t in_window = 0;
          for (std::size_t k = 0; k < n; ++k) in_window += kept[start + k] ? 1 : 0;
          CHECK(in_window == c);
        }

        // Interior runs of kept indices have length exactly C. Only
        // meaningful in the lossy regime; with C == N everything is one run.
        if (c == n) continue;
        std::vector<std::size_t> run_lengths;
        std::size_t run = 0;
        for (std::size_t t = 0; t < kLen; ++t) {
          if (kept[t]) {
            ++run;
          } else if (run > 0) {
            run_lengths.push_back(run);
            run = 0;
          }
        }
        if (run > 0) run_lengths.push_back(run);
        for (std::size_t r = 0; r < run_lengths.size(); ++r) {
          const bool boundary = (r == 0) || (r + 1 == run_lengths.size());
          if (boundary) {
            CHECK(run_lengths[r] <= c);
          } else {
            CHECK(run_lengths[r] == c);
          }
        }
      }
    }
  }
}

TEST_CASE("schedule_position agrees with the rotate-and-truncate oracle on random tuples") {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<std::uint32_t> pick_n(1, 10);
  std::uniform_int_distribution<std::size_t> pick_t(0, 9999);

  for (int trial = 0; trial < 10000; ++trial) {
    const std::uint32_t n = pick_n(rng);
    const std::uint32_t c = std::uniform_int_distribution<std::uint32_t>(1, n)(rng);
    const std::uint32_t i = std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng);
    const std::size_t t = pick_t(rng);

    const CodecParams params{n, c, 1};
    const Placement got = schedule_position(i, t, params);
    const auto expected = testing::oracle_schedule_position(i, t, n, c);
    REQUIRE(got.has_value() == expected.has_value());
    if (got) CHECK(*got == *expected);
  }
}

TEST_CASE("AudioObject validation") {
  AudioObject ok{{0.0, 0.5, -0.5}, 48000, "ok"};
  CHECK_NOTHROW(ok.validate());

  AudioObject empty{{}, 48000, "empty"};
  CHECK_THROWS_AS(empty.validate(), Error);

  AudioObject bad_rate{{0.1}, 0, "bad_rate"};
  CHECK_THROWS_AS(bad_rate.validate(), Error);

  AudioObject nan_sample{{0.1, std::nan("")}, 48000, "nan"};
  CHECK_THROWS_AS(nan_sample.validate(), Error);
}

TEST_CASE("ObjectSet enforces shared rate, shared length and the object cap") {
  auto tone = [](std::size_t len, std::uint32_t rate, const char* label) {
    AudioObject obj;
    obj.sample_rate = rate;
    obj.label = label;
    obj.samples.assign(len, 0.25);
    return obj;
  };

  CHECK_NOTHROW(ObjectSet({tone(100, 48000, "a"), tone(100, 48000, "b")}));
  CHECK_THROWS_AS(ObjectSet(std::vector<AudioObject>{}), Error);

  try {
    ObjectSet({tone(100, 48000, "a"), tone(99, 48000, "short")});
    FAIL("expected MismatchedLengths");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MismatchedLengths);
    CHECK(std::string(e.what()).find("short") != std::string::npos);
  }

  try {
    ObjectSet({tone(100, 48000, "a"), tone(100, 44100, "slow")});
    FAIL("expected MismatchedRates");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MismatchedRates);
    CHECK(std::string(e.what()).find("slow") != std::string::npos);
  }

  std::vector<AudioObject> eleven;
  for (int i = 0; i < 11; ++i) eleven.push_back(tone(10, 48000, "x"));
  CHECK_THROWS_AS(ObjectSet(std::move(eleven)), Error);
}

TEST_CASE("CodecParams validation and lossless flag") {
  CHECK((CodecParams{2, 2, 1}.lossless()));
  CHECK((CodecParams{2, 4, 1}.lossless()));
  CHECK_FALSE((CodecParams{5, 2, 1}.lossless()));

  CHECK_THROWS_AS((CodecParams{0, 2, 1}.validate()), Error);
  CHECK_THROWS_AS((CodecParams{2, 0, 1}.validate()), Error);
  CHECK_THROWS_AS((CodecParams{2, 2, 0}.validate()), Error);
  CHECK_NOTHROW((CodecParams{10, 2, 1}.validate()));
}
