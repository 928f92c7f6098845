#include <catch_amalgamated.hpp>

#include <set>

#include "capt/parallel.hpp"
#include "capt/rng.hpp"
#include "capt/text.hpp"

using namespace capt;

TEST_CASE("utf8 decode reports byte spans") {
  const std::string s = "a\xE0\xA4\x95";  // a + क
  const auto cps = text::decode_utf8(s);
  REQUIRE(cps.size() == 2);
  CHECK(cps[1].value == 0x0915);
  CHECK(cps[1].byte_start == 1);
  CHECK(cps[1].byte_end == 4);
  CHECK(text::encode_utf8(0x0915) == "\xE0\xA4\x95");
}

TEST_CASE("utf8 decode flags invalid bytes") {
  std::optional<std::size_t> bad;
  text::decode_utf8("ab\xFF", &bad);
  REQUIRE(bad);
  CHECK(*bad == 2);
}

TEST_CASE("split and trim") {
  CHECK(text::split("a\tb\t", '\t') == std::vector<std::string>{"a", "b", ""});
  CHECK(text::split_ws("  x  y ") == std::vector<std::string>{"x", "y"});
  CHECK(text::trim("  z \r\n") == "z");
}

TEST_CASE("data lines skip comments and blanks") {
  std::vector<std::pair<std::string, std::size_t>> seen;
  text::for_each_data_line("# c\n\nx\r\ny\n", [&](std::string_view l, std::size_t n) { seen.emplace_back(l, n); });
  REQUIRE(seen.size() == 2);
  CHECK(seen[0] == std::pair<std::string, std::size_t>{"x", 3});
  CHECK(seen[1].first == "y");
}

TEST_CASE("counter rng is reproducible and stream-separated") {
  CounterRng a(42, 0), b(42, 0), c(42, 1);
  for (int i = 0; i < 100; ++i) {
    const auto x = a(), y = b();
    CHECK(x == y);
  }
  CounterRng a2(42, 0);
  int same = 0;
  for (int i = 0; i < 100; ++i) same += a2() == c();
  CHECK(same == 0);
}

TEST_CASE("below stays in range and covers it") {
  CounterRng r(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = r.below(13);
    REQUIRE(v < 13);
    seen.insert(v);
  }
  CHECK(seen.size() == 13);
}

TEST_CASE("uniform01 mean is near one half") {
  CounterRng r(9);
  double s = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = r.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    s += u;
  }
  CHECK(s / 100000 == Catch::Approx(0.5).margin(0.01));
}

TEST_CASE("parallel_for visits every index once and rethrows") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10, 3,
                               [](std::size_t i) {
                                 if (i == 5) throw std::runtime_error("x");
                               }),
                  std::runtime_error);
}
