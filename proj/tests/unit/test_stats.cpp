#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <random>

#include "capt/rng.hpp"
#include "capt/stats.hpp"
#include "support/oracles.hpp"

using namespace capt;
using namespace capt::stats;

namespace {

std::vector<bool> bits(std::initializer_list<int> v) {
  std::vector<bool> out;
  for (int x : v) out.push_back(x != 0);
  return out;
}

std::vector<double> random_diffs(CounterRng& r, std::size_t n, int lo, int hi) {
  std::vector<double> d(n);
  for (auto& x : d) x = lo + static_cast<int>(r.below(static_cast<std::uint64_t>(hi - lo + 1)));
  return d;
}

}  // namespace

TEST_CASE("metric examples") {
  const auto perfect = compute_metrics(bits({1, 0, 1, 0}), bits({1, 0, 1, 0}));
  CHECK(perfect.f1 == 1.0);
  const auto m = metrics_from_counts({2, 1, 1, 5});
  CHECK(m.precision == Catch::Approx(2.0 / 3.0));
  CHECK(m.recall == Catch::Approx(2.0 / 3.0));
  CHECK(m.f1 == Catch::Approx(2.0 / 3.0));
  const auto none = compute_metrics(bits({1, 0, 1}), bits({0, 0, 0}));
  CHECK(none.precision == 0.0);
  CHECK(none.recall == 0.0);
  CHECK(none.f1 == 0.0);
  CHECK_THROWS_AS(compute_metrics(bits({1}), bits({1, 0})), Error);
}

TEST_CASE("metrics are invariant under joint permutation") {
  CounterRng r(3);
  std::mt19937_64 shuffle_rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<bool, bool>> rows(1 + r.below(40));
    for (auto& [g, p] : rows) g = r.bernoulli(0.4), p = r.bernoulli(0.4);
    auto split = [](const std::vector<std::pair<bool, bool>>& v) {
      std::vector<bool> g, p;
      for (auto [a, b] : v) g.push_back(a), p.push_back(b);
      return compute_metrics(g, p);
    };
    const auto before = split(rows);
    std::shuffle(rows.begin(), rows.end(), shuffle_rng);
    const auto after = split(rows);
    REQUIRE(before.counts == after.counts);
    REQUIRE(before.f1 == after.f1);
    if (before.precision + before.recall > 0) {
      REQUIRE(before.f1 >= std::min(before.precision, before.recall) - 1e-12);
      REQUIRE(before.f1 <= std::max(before.precision, before.recall) + 1e-12);
    }
  }
}

TEST_CASE("pratt ranks include zeros") {
  const std::vector<double> d{0, 2, -2, 1, 0};
  CHECK(pratt_ranks(d) == std::vector<double>{1.5, 4.5, 4.5, 3, 1.5});
  CHECK(pratt_ranks(d) == oracle::naive_ranks(d));
}

TEST_CASE("five uniform improvements") {
  const auto r = wilcoxon_pratt(std::vector<double>{1, 1, 1, 1, 1});
  CHECK(r.method == Method::exact);
  CHECK(r.w_statistic == 15.0);
  CHECK(r.p_value == Catch::Approx(0.0625).margin(1e-12));
  CHECK(wilcoxon_pratt(std::vector<double>{1, 1, 1, 1, 1}, Alternative::greater).p_value ==
        Catch::Approx(0.03125).margin(1e-12));
}

TEST_CASE("all zero differences are degenerate") {
  const auto r = wilcoxon_pratt(std::vector<double>{0, 0, 0});
  CHECK(r.degenerate);
  CHECK(r.p_value == 1.0);
  CHECK(r.n_nonzero == 0);
  const auto big = wilcoxon_pratt(std::vector<double>(30, 0.0));
  CHECK(big.degenerate);
  CHECK(big.p_value == 1.0);
  CHECK_THROWS_AS(wilcoxon_pratt(std::vector<double>{}), Error);
}

TEST_CASE("ten pair textbook example matches enumeration") {
  // blood-pressure style pairs (125,110) (115,122) (130,125) (140,120) (140,140)
  // (115,124) (140,123) (125,137) (140,135) (135,145)
  const std::vector<double> d{15, -7, 5, 20, 0, -9, 17, -12, 5, -10};
  const auto ref = oracle::sign_enumeration(d);
  const auto r = wilcoxon_pratt(d);
  CHECK(r.w_statistic == Catch::Approx(ref.w));
  CHECK(r.n_nonzero == 9);
  CHECK(r.p_value == Catch::Approx(ref.p_two_sided).margin(1e-6));
  CHECK(wilcoxon_pratt(d, Alternative::greater).p_value == Catch::Approx(ref.p_greater).margin(1e-6));
}

TEST_CASE("exact path equals sign enumeration for n up to 12") {
  CounterRng r(2024);
  for (std::size_t n = 1; n <= 12; ++n)
    for (int trial = 0; trial < 60; ++trial) {
      const auto d = random_diffs(r, n, -4, 4);
      const auto ref = oracle::sign_enumeration(d);
      const auto two = wilcoxon_pratt(d);
      if (two.degenerate) continue;
      REQUIRE(two.method == Method::exact);
      REQUIRE(two.w_statistic == Catch::Approx(ref.w).margin(1e-12));
      REQUIRE(std::fabs(two.p_value - ref.p_two_sided) <= 1e-9);
      REQUIRE(std::fabs(wilcoxon_pratt(d, Alternative::greater).p_value - ref.p_greater) <= 1e-9);
    }
}

TEST_CASE("normal approximation tracks the exact p at n = 20") {
  // Differences drawn from a wide range keep ties rare; with heavy ties the
  // continuity-corrected normal p drifts further from the exact value.
  CounterRng r(77);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random_diffs(r, 20, -60, 80);
    const auto exact = wilcoxon_pratt(d);
    REQUIRE(exact.method == Method::exact);
    if (exact.degenerate) continue;
    const auto ranks = pratt_ranks(d);
    std::vector<double> nz;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] != 0) nz.push_back(ranks[i]);
    worst = std::max(worst, std::fabs(exact.p_value - detail::normal_p(nz, exact.w_statistic, Alternative::two_sided)));
  }
  CHECK(worst < 0.02);
}

TEST_CASE("more than 20 differences use the normal approximation") {
  CounterRng r(8);
  const auto d = random_diffs(r, 25, -3, 5);
  const auto res = wilcoxon_pratt(d);
  CHECK(res.method == Method::normal_approx);
  CHECK(res.p_value >= 0.0);
  CHECK(res.p_value <= 1.0);
  const auto big = wilcoxon_pratt(std::vector<double>(30, 1.0));
  CHECK(big.p_value < 1e-5);
}

TEST_CASE("paired samples validate the Likert range") {
  CHECK_THROWS_AS(wilcoxon_pratt(std::vector<PairedSample>{{"p1", "ʈ", 0, 3}}), Error);
  CHECK_THROWS_AS(wilcoxon_pratt(std::vector<PairedSample>{{"p1", "ʈ", 2, 6}}), Error);
  const std::vector<PairedSample> s{{"a", "x", 2, 3}, {"b", "x", 2, 3}, {"c", "x", 1, 2}, {"d", "y", 3, 4}, {"e", "y", 4, 5}};
  CHECK(wilcoxon_pratt(s).p_value == Catch::Approx(0.0625));
}

TEST_CASE("likert summaries") {
  CHECK(summarize({4, 4, 4}).formatted == "4.00 ± 0.00");
  CHECK(summarize({3, 4, 5}).formatted == "4.00 ± 1.00");
  CHECK(summarize({5}).sd == 0.0);
  CHECK(format_mean_sd(4.24, 0.61) == "4.24 ± 0.61");
  CHECK_THROWS_AS(summarize({}), Error);

  std::vector<std::string> warnings;
  const auto g = summarize_groups({{"a", {1, 2}}, {"b", {}}}, [&](const std::string& w) { warnings.push_back(w); });
  CHECK(g.size() == 1);
  CHECK(warnings.size() == 1);

  const std::vector<PairedSample> s{{"a", "ʈ", 2, 4}, {"b", "ʈ", 3, 4}, {"c", "ɖ", 1, 5}};
  const auto l = summarize_likert(s);
  CHECK(l.pre.formatted == "2.00 ± 1.00");
  CHECK(l.per_phoneme.at("ʈ").mean_delta == Catch::Approx(1.5));
  CHECK(l.per_phoneme.at("ɖ").post.sd == 0.0);
  const auto j = to_json(l);
  CHECK(j["post"]["formatted"] == "4.33 ± 0.58");
}

TEST_CASE("survey csv parsing") {
  const auto s = parse_survey_csv("\xEF\xBB\xBFparticipant_id,phoneme,pre,post\r\np1,ʈ,2,4\r\n\r\np2, ɖ ,3,3\n");
  REQUIRE(s.size() == 2);
  CHECK(s[1].phoneme == "ɖ");
  CHECK(s[0].post == 4);
  CHECK_THROWS_AS(parse_survey_csv("id,phoneme,pre,post\n"), Error);
  CHECK_THROWS_AS(parse_survey_csv("participant_id,phoneme,pre,post\np1,x,2\n"), Error);
  CHECK_THROWS_AS(parse_survey_csv("participant_id,phoneme,pre,post\np1,x,2,9\n"), Error);
  CHECK_THROWS_AS(parse_survey_csv("participant_id,phoneme,pre,post\np1,x,2,3.5\n"), Error);
  CHECK_THROWS_AS(parse_survey_csv(""), Error);
}

TEST_CASE("study survey fixture when supplied") {
  // Drop the raw 22-participant CSV at tests/fixtures/survey.csv (or point
  // CAPT_SURVEY_CSV at it) to check the published p-value.
  const char* env = std::getenv("CAPT_SURVEY_CSV");
  const std::string path = env ? env : CAPT_GOLDEN_DIR "/../fixtures/survey.csv";
  if (!std::filesystem::exists(path)) SKIP("no survey fixture");
  const auto samples = parse_survey_csv(text::read_file(path));
  const auto two = wilcoxon_pratt(samples, Alternative::two_sided).p_value;
  const auto greater = wilcoxon_pratt(samples, Alternative::greater).p_value;
  CHECK((std::fabs(two - 0.0022) < 5e-4 || std::fabs(greater - 0.0022) < 5e-4));
}
