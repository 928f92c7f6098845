#include <catch_amalgamated.hpp>

#include "capt/corpus.hpp"
#include "capt/detect.hpp"
#include "support/oracles.hpp"
#include "support/tempdir.hpp"

using namespace capt;
using namespace capt::detect;

namespace {

const PhonemeInventory& inv() { return PhonemeInventory::builtin(); }

std::vector<std::string> sentences() {
  std::vector<std::string> out;
  text::for_each_data_line(text::read_file(CAPT_DATA_DIR "/sentences.txt"),
                           [&](std::string_view l, std::size_t) { out.emplace_back(l); });
  return out;
}

corpus::CorpusManifest make_corpus(std::size_t n, double p, std::uint64_t seed) {
  corpus::BuildOptions o;
  o.n_pairs = n;
  o.p_error = p;
  o.seed = seed;
  o.warn = [](const std::string&) {};
  return corpus::build_corpus(sentences(), o);
}

corpus::CorpusManifest sparse_only(corpus::CorpusManifest m) {
  std::erase_if(m.entries, [](const corpus::UtterancePair& e) { return !corpus::is_sparse(e.ops); });
  m.metadata.n_pairs = m.entries.size();
  return m;
}

/// Recognizer output with a flat posterior except `mass` on the emitted token.
RecognizerOutput flat_output(const PhonemeSequence& seq, double mass) {
  RecognizerOutput r;
  r.phonemes = seq;
  for (auto t : seq.phonemes()) {
    Posterior row;
    row.fill((1.0 - mass) / (kNumTokens - 1));
    row[static_cast<std::size_t>(t)] = mass;
    r.posteriors.push_back(row);
  }
  return r;
}

}  // namespace

TEST_CASE("identical sequences align with zero cost") {
  const auto s = parse_ipa(inv(), "k ə m ə l | ʈ aː");
  const auto a = align(s, s);
  CHECK(a.total_cost == 0.0);
  CHECK(a.edit_count() == 0);
  CHECK(a.ops.size() == 7);
}

TEST_CASE("single deletion example") {
  const auto a = align(parse_ipa(inv(), "k ə m ə l"), parse_ipa(inv(), "k ə m l"));
  CHECK(a.total_cost == Catch::Approx(1.0));
  REQUIRE(a.edit_count() == 1);
  const auto it = std::find_if(a.ops.begin(), a.ops.end(), [](const AlignmentOp& o) { return o.kind != OpKind::match; });
  CHECK(it->kind == OpKind::deletion);
  CHECK(it->canonical_index == 3u);
}

TEST_CASE("substitution cost lies in [0.5, 1]") {
  const Aligner al;
  for (TokenId a = 0; a < kNumPhonemes; ++a)
    for (TokenId b = 0; b < kNumPhonemes; ++b) {
      const double c = al.substitution_cost(a, b);
      if (a == b) REQUIRE(c == 0.0);
      else {
        REQUIRE(c >= 0.5);
        REQUIRE(c <= 1.0);
      }
    }
  CHECK(al.substitution_cost(inv().id_of("ʈ"), inv().id_of("t̪")) == Catch::Approx(0.625));
}

TEST_CASE("aligner cost equals exhaustive enumeration over random costs") {
  CounterRng rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const int alphabet = 2 + static_cast<int>(rng.below(5));
    std::vector<std::vector<double>> d(alphabet, std::vector<double>(alphabet, 0.0));
    for (int a = 0; a < alphabet; ++a)
      for (int b = 0; b < alphabet; ++b)
        if (a != b) d[a][b] = rng.uniform01();
    const AlignCosts costs{0.5 + rng.uniform01(), 0.5 + rng.uniform01(), 0.5, 0.5};
    const Aligner al([&](TokenId a, TokenId b) { return a < alphabet && b < alphabet ? d[a][b] : 1.0; }, costs);
    std::vector<TokenId> x(rng.below(7)), y(rng.below(7));
    for (auto& t : x) t = static_cast<TokenId>(rng.below(alphabet));
    for (auto& t : y) t = static_cast<TokenId>(rng.below(alphabet));
    const double want = oracle::alignment_cost(
        x, y, [&](int a, int b) { return al.substitution_cost(a, b); }, costs.insertion, costs.deletion);
    const auto got = al.align(x, y);
    REQUIRE(got.total_cost == Catch::Approx(want).margin(1e-9));
    double summed = 0.0;
    for (const auto& op : got.ops) summed += op.cost;
    REQUIRE(summed == Catch::Approx(got.total_cost).margin(1e-9));
  }
}

TEST_CASE("swapping sequences turns deletions into insertions at equal cost") {
  CounterRng rng(5);
  const Aligner al;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<TokenId> x(1 + rng.below(9)), y(1 + rng.below(9));
    for (auto& t : x) t = static_cast<TokenId>(rng.below(12));
    for (auto& t : y) t = static_cast<TokenId>(rng.below(12));
    const auto ab = al.align(x, y), ba = al.align(y, x);
    REQUIRE(ab.total_cost == Catch::Approx(ba.total_cost).margin(1e-9));
    const auto count = [](const Alignment& a, OpKind k) {
      return std::count_if(a.ops.begin(), a.ops.end(), [&](const AlignmentOp& o) { return o.kind == k; });
    };
    if (x.size() > y.size()) REQUIRE(count(ab, OpKind::deletion) >= static_cast<long>(x.size() - y.size()));
    REQUIRE(count(ab, OpKind::deletion) - count(ab, OpKind::insertion) ==
            count(ba, OpKind::insertion) - count(ba, OpKind::deletion));
  }
}

TEST_CASE("backtrace tie-break prefers substitution over indels") {
  // substitution cost 1 ties with a deletion plus an insertion at 0.5 each
  const Aligner al([](TokenId, TokenId) { return 1.0; }, AlignCosts{0.5, 0.5, 0.5, 0.5});
  const auto a = al.align(std::vector<TokenId>{1, 2}, std::vector<TokenId>{3, 4});
  CHECK(a.total_cost == Catch::Approx(2.0));
  REQUIRE(a.ops.size() == 2);
  for (const auto& op : a.ops) CHECK(op.kind == OpKind::substitution);
  // deletion is preferred over insertion when those two tie
  const auto b = al.align(std::vector<TokenId>{1}, std::vector<TokenId>{});
  CHECK(b.ops[0].kind == OpKind::deletion);
}

TEST_CASE("word attribution") {
  const auto canon = parse_ipa(inv(), "k ə m ə l | ʈ aː l | s ə b");
  SECTION("all match") {
    const auto an = analyze(canon, canon);
    for (const auto& r : an.reports) {
      CHECK_FALSE(r.mispronounced);
      CHECK(r.severity == 0.0);
      CHECK(r.severity_bin == SeverityBin::none);
    }
  }
  SECTION("deletion inside word 2 flags only word 2") {
    const auto an = analyze(canon, parse_ipa(inv(), "k ə m ə l | ʈ l | s ə b"));
    CHECK(word_flags(an.reports) == std::vector<bool>{false, true, false});
    CHECK(an.reports[1].pairs[0].expected == inv().id_of("aː"));
    CHECK_FALSE(an.reports[1].pairs[0].produced);
  }
  SECTION("an insertion between words goes to the left word on a tie") {
    const auto a = Aligner().align(std::vector<TokenId>{1, 2}, std::vector<TokenId>{1, 9, 2});
    const auto reports = detect_word_errors(a, {1, 2}, {{0, 1}, {1, 2}}, {1, 9, 2});
    CHECK(word_flags(reports) == std::vector<bool>{true, false});
    CHECK_FALSE(reports[0].pairs[0].expected);
  }
  SECTION("a leading insertion goes to the first word") {
    const auto a = Aligner().align(std::vector<TokenId>{1, 2}, std::vector<TokenId>{9, 1, 2});
    const auto reports = detect_word_errors(a, {1, 2}, {{0, 1}, {1, 2}}, {9, 1, 2});
    CHECK(word_flags(reports) == std::vector<bool>{true, false});
  }
}

TEST_CASE("severity from posteriors") {
  const auto canon = parse_ipa(inv(), "k ə m ə l");
  const auto pred = parse_ipa(inv(), "k ə n ə l");
  const auto m = static_cast<std::size_t>(inv().id_of("m"));
  const auto n = inv().id_of("n");
  auto rec = flat_output(pred, 0.05);
  rec.posteriors[2].fill(0.0);
  rec.posteriors[2][static_cast<std::size_t>(n)] = 0.91;
  rec.posteriors[2][m] = 0.09;
  SECTION("posterior of the canonical phoneme drives severity") {
    auto r2 = rec;
    r2.posteriors[2].fill(0.0);
    r2.posteriors[2][static_cast<std::size_t>(n)] = 0.1 + 1e-12;  // argmax need not matter for severity
    r2.posteriors[2][m] = 0.9 - 1e-12;
    const auto an = analyze(canon, pred, &r2);
    CHECK(an.reports[0].severity == Catch::Approx(0.1));
    CHECK(an.reports[0].severity_bin == SeverityBin::minor);
  }
  SECTION("low canonical posterior is severe") {
    const auto an = analyze(canon, pred, &rec);
    CHECK(an.reports[0].severity == Catch::Approx(0.91));
    CHECK(an.reports[0].severity_bin == SeverityBin::severe);
  }
  SECTION("deletion is fully severe") {
    const auto p2 = parse_ipa(inv(), "k ə ə l");
    const auto r2 = flat_output(p2, 0.9);
    const auto an = analyze(canon, p2, &r2);
    CHECK(an.reports[0].severity == 1.0);
  }
  SECTION("without a recognizer severity is the op cost") {
    const auto an = analyze(canon, pred);
    CHECK(an.reports[0].severity == Catch::Approx(Aligner().substitution_cost(inv().id_of("m"), n)));
  }
}

TEST_CASE("lowering the canonical posterior never lowers severity") {
  const auto canon = parse_ipa(inv(), "k ə m ə l");
  const auto pred = parse_ipa(inv(), "k ə n ə l");
  const auto m = static_cast<std::size_t>(inv().id_of("m"));
  const auto n = static_cast<std::size_t>(inv().id_of("n"));
  double last = -1.0;
  for (int step = 40; step >= 0; --step) {
    auto rec = flat_output(pred, 0.5);
    rec.posteriors[2].fill(0.0);
    rec.posteriors[2][m] = step / 100.0;
    rec.posteriors[2][n] = 1.0 - step / 100.0;
    const auto s = analyze(canon, pred, &rec).reports[0].severity;
    REQUIRE(s >= last);
    last = s;
  }
}

TEST_CASE("bins and overrides") {
  CHECK(bin_severity(0.39, true) == SeverityBin::minor);
  CHECK(bin_severity(0.4, true) == SeverityBin::moderate);
  CHECK(bin_severity(0.75, true) == SeverityBin::severe);
  CHECK(bin_severity(0.0, true) == SeverityBin::minor);
  CHECK(bin_severity(0.9, false) == SeverityBin::none);
  CHECK(bin_severity(0.5, true, {0.6, 0.9}) == SeverityBin::minor);
}

TEST_CASE("mismatched spans and alignments are rejected") {
  const auto a = Aligner().align(std::vector<TokenId>{1, 2}, std::vector<TokenId>{1, 2});
  CHECK_THROWS_AS(detect_word_errors(a, {1, 2}, {{0, 1}}, {1, 2}), Error);
  CHECK_THROWS_AS(detect_word_errors(a, {1, 2}, {{0, 1}, {1, 2}}, {1, 2, 3}), Error);
  CHECK_THROWS_AS(detect_word_errors(a, {1, 2, 3}, {{0, 3}}, {1, 2}), Error);
  const auto rec = flat_output(PhonemeSequence::from_tokens({1, kEos}), 0.9);
  CHECK_THROWS_AS(detect_word_errors(a, {1, 2}, {{0, 2}}, {1, 2}, &rec), Error);
}

TEST_CASE("perfect mock reproduces the corrupted sequence and the edit script") {
  const auto m = make_corpus(300, 0.1, 17);
  const corpus::ConfusionTable table(inv());
  std::size_t sparse = 0;
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    const auto& e = m.entries[i];
    const auto rec = mock_recognize(e, 1.0, i, table);
    REQUIRE(rec.phonemes == e.corrupted);
    REQUIRE_NOTHROW(rec.validate());
    for (std::size_t k = 0; k < rec.posteriors.size(); ++k) {
      const double peak = rec.posteriors[k][static_cast<std::size_t>(rec.phonemes.phonemes()[k])];
      REQUIRE(peak >= 0.75);
      REQUIRE(peak <= 0.99);
    }
    if (!corpus::is_sparse(e.ops)) continue;
    ++sparse;
    const auto a = align(e.canonical, rec.phonemes);
    REQUIRE(alignment_to_error_ops(a, rec.phonemes.phonemes()) == e.ops);
  }
  CHECK(sparse > 200);
}

TEST_CASE("mock output is deterministic per seed") {
  const auto m = make_corpus(5, 0.2, 3);
  const auto a = mock_recognize(m.entries[0], 0.5, 11);
  const auto b = mock_recognize(m.entries[0], 0.5, 11);
  CHECK(a.phonemes == b.phonemes);
  CHECK(a.posteriors == b.posteriors);
  CHECK_THROWS_AS(mock_recognize(m.entries[0], 1.5, 1), Error);
}

TEST_CASE("lower fidelity raises the word false-positive rate") {
  const auto m = make_corpus(1000, 0.05, 8);
  auto fp_rate = [&](double fidelity) {
    BatchOptions o;
    o.fidelity = fidelity;
    o.seed = 4;
    const auto c = detect_manifest(m, o).metrics.counts;
    return stats::safe_ratio(static_cast<double>(c.fp), static_cast<double>(c.fp + c.tn));
  };
  const double hi = fp_rate(1.0), lo = fp_rate(0.0);
  CHECK(hi == 0.0);
  CHECK(lo > hi);
}

TEST_CASE("end to end detection on a sparse corpus is exact") {
  const auto m = sparse_only(make_corpus(1000, 0.05, 21));
  BatchOptions o;
  o.fidelity = 1.0;
  o.jobs = 4;
  const auto r = detect_manifest(m, o);
  CHECK(r.metrics.precision == 1.0);
  CHECK(r.metrics.recall == 1.0);
  CHECK(r.metrics.f1 == 1.0);
}

TEST_CASE("fidelity 0.8 F1 stays in the frozen interval") {
  const auto g = json::parse(text::read_file(CAPT_GOLDEN_DIR "/detect_f1.json"));
  const auto m = make_corpus(g["n_pairs"], g["p_error"], g["corpus_seed"]);
  BatchOptions o;
  o.fidelity = g["fidelity"];
  o.seed = g["detect_seed"];
  o.jobs = 3;
  const auto r = detect_manifest(m, o);
  CHECK(r.metrics.f1 >= g["f1_interval"][0].get<double>());
  CHECK(r.metrics.f1 <= g["f1_interval"][1].get<double>());
  CHECK(r.metrics.f1 == Catch::Approx(g["f1"].get<double>()).margin(1e-6));
}

TEST_CASE("batch results do not depend on job count") {
  const auto m = make_corpus(200, 0.1, 2);
  BatchOptions o;
  o.fidelity = 0.7;
  o.seed = 9;
  const auto one = to_json(detect_manifest(m, o), m);
  o.jobs = 5;
  CHECK(to_json(detect_manifest(m, o), m) == one);
  CHECK_THROWS_AS(detect_manifest(corpus::CorpusManifest{}, o), Error);
}

TEST_CASE("phoneme error rate") {
  const auto a = align(parse_ipa(inv(), "k ə m ə l"), parse_ipa(inv(), "k ə m l"));
  const auto b = align(parse_ipa(inv(), "ʈ aː"), parse_ipa(inv(), "ʈ aː"));
  CHECK(phoneme_error_rate({a, b}) == Catch::Approx(1.0 / 7.0));
  CHECK(phoneme_error_rate({}) == 0.0);
}

TEST_CASE("recognizer output json round trip") {
  const auto m = make_corpus(3, 0.2, 1);
  const auto rec = mock_recognize(m.entries[1], 0.6, 2);
  const auto j = to_json(rec, "u1");
  CHECK(j["utterance_id"] == "u1");
  const auto back = recognizer_output_from_json(json::parse(j.dump()));
  CHECK(back.phonemes == rec.phonemes);
  for (std::size_t i = 0; i < rec.posteriors.size(); ++i)
    for (std::size_t k = 0; k < kNumTokens; ++k) REQUIRE(back.posteriors[i][k] == Catch::Approx(rec.posteriors[i][k]).margin(1e-12));
  auto bad = j;
  bad["posteriors"][0][0] = 0.5;
  CHECK_THROWS_AS(recognizer_output_from_json(bad), Error);
  bad = j;
  bad["posteriors"].erase(0);
  CHECK_THROWS_AS(recognizer_output_from_json(bad), Error);
}

TEST_CASE("tone recognizer decodes stub audio") {
  const auto m = make_corpus(30, 0.1, 6);
  ToneRecognizer rec;
  for (const auto& e : m.entries) {
    const auto out = rec.recognize(tone::render(e.corrupted, e.speaker_id));
    REQUIRE(out.phonemes == e.corrupted);
    REQUIRE_NOTHROW(out.validate());
  }
  const auto up = audio::resample(tone::render(m.entries[0].canonical, 1), 16000);
  CHECK(rec.recognize(up).phonemes == m.entries[0].canonical);
  CHECK_THROWS_AS(rec.recognize(audio::AudioBuffer{{0, 0, 0}, 8000}), Error);
}

TEST_CASE("audio batch path through the tone recognizer") {
  testing_support::TempDir dir;
  corpus::StubTtsClient tts;
  corpus::BuildOptions o;
  o.n_pairs = 40;
  o.p_error = 0.05;
  o.seed = 12;
  o.tts = &tts;
  o.out_dir = dir.str();
  o.warn = [](const std::string&) {};
  const auto m = sparse_only(corpus::build_corpus(sentences(), o));
  ToneRecognizer rec;
  BatchOptions b;
  b.recognizer = &rec;
  b.manifest_dir = dir.str();
  const auto r = detect_manifest(m, b);
  CHECK(r.metrics.f1 == 1.0);
}
