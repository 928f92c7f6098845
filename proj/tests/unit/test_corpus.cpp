#include <catch_amalgamated.hpp>

#include "capt/corpus.hpp"
#include "support/tempdir.hpp"

using namespace capt;
using namespace capt::corpus;
using testing_support::TempDir;

namespace {

const PhonemeInventory& inv() { return PhonemeInventory::builtin(); }

std::vector<std::string> sentences() {
  std::vector<std::string> out;
  text::for_each_data_line(text::read_file(CAPT_DATA_DIR "/sentences.txt"),
                           [&](std::string_view l, std::size_t) { out.emplace_back(l); });
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

void quiet(const std::string&) {}

}  // namespace

TEST_CASE("injection for a fixed seed matches the frozen op list") {
  const auto gold = json::parse(text::read_file(CAPT_GOLDEN_DIR "/inject_seed42.json"));
  const auto canonical = parse_ipa(inv(), gold["canonical"].get<std::string>());
  REQUIRE(canonical.phoneme_count() == 10);
  const auto inj = inject_errors(canonical, gold["p"].get<double>(), gold["seed"].get<std::uint64_t>(), inv());
  CHECK(ops_to_json(inj.ops) == gold["ops"]);
  CHECK(format_ipa(inv(), inj.corrupted) == gold["corrupted"].get<std::string>());
}

TEST_CASE("injection invariants hold across seeds") {
  const ConfusionTable table(inv());
  const auto canonical = g2p::to_phonemes("हमारी भाषा सुंदर है और घर में घड़ी है").sequence;
  const auto n = canonical.phoneme_count();
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inj = inject_errors(canonical, 0.3, seed, table);
    REQUIRE(replay_ops(canonical, inj.ops) == inj.corrupted);
    REQUIRE(inj.error_vector.bits.size() == n);
    REQUIRE(inj.error_vector.count() == inj.ops.size());
    REQUIRE(inj.corrupted.word_count() == canonical.word_count());
    for (const auto& op : inj.ops) {
      const auto orig = canonical.phonemes()[static_cast<std::size_t>(op.canonical_index)];
      if (op.kind == ErrorKind::substitution) {
        const auto& c = table.confusable(orig);
        REQUIRE(std::find(c.begin(), c.end(), *op.inserted_or_replacement) != c.end());
      }
      if (op.kind == ErrorKind::addition) REQUIRE(*op.inserted_or_replacement != orig);
    }
  }
}

TEST_CASE("injection is deterministic and p = 0 is the identity") {
  const auto canonical = g2p::to_phonemes("तोता ताज़ा फल खाता है").sequence;
  const auto a = inject_errors(canonical, 0.2, 7, inv());
  const auto b = inject_errors(canonical, 0.2, 7, inv());
  CHECK(a.ops == b.ops);
  CHECK(a.corrupted == b.corrupted);
  const auto z = inject_errors(canonical, 0.0, 7, inv());
  CHECK(z.ops.empty());
  CHECK(z.corrupted == canonical);
}

TEST_CASE("injection rate tracks p") {
  const ConfusionTable table(inv());
  const auto canonical = g2p::to_phonemes("छोटा बच्चा छत पर है").sequence;
  for (double p : {0.05, 0.2}) {
    std::size_t flagged = 0, total = 0;
    for (std::uint64_t seed = 0; seed < 4000; ++seed) {
      const auto inj = inject_errors(canonical, p, derive_seed(99, seed), table);
      flagged += inj.error_vector.count();
      total += canonical.phoneme_count();
    }
    CHECK(static_cast<double>(flagged) / static_cast<double>(total) == Catch::Approx(p).margin(0.01));
  }
}

TEST_CASE("invalid probability and empty input are rejected") {
  const auto canonical = g2p::to_phonemes("घर").sequence;
  CHECK(code_of([&] { inject_errors(canonical, 0.9, 1, inv()); }) == ErrorCode::InvalidProbability);
  CHECK(code_of([&] { inject_errors(canonical, -0.1, 1, inv()); }) == ErrorCode::InvalidProbability);
  CHECK(code_of([&] { inject_errors(PhonemeSequence{}, 0.1, 1, inv()); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("replay rejects inconsistent ops") {
  const auto canonical = parse_ipa(inv(), "k ə m ə l");
  const auto m = inv().id_of("m");
  CHECK(code_of([&] { replay_ops(canonical, {{ErrorKind::deletion, 9, {}}}); }) == ErrorCode::InconsistentInput);
  CHECK(code_of([&] { replay_ops(canonical, {{ErrorKind::deletion, 1, {}}, {ErrorKind::deletion, 1, {}}}); }) ==
        ErrorCode::InconsistentInput);
  CHECK(code_of([&] { replay_ops(canonical, {{ErrorKind::substitution, 2, m}}); }) == ErrorCode::InconsistentInput);
  CHECK(code_of([&] { replay_ops(canonical, {{ErrorKind::addition, 2, {}}}); }) == ErrorCode::InconsistentInput);
  const auto r = replay_ops(canonical, {{ErrorKind::deletion, 3, {}}, {ErrorKind::addition, 0, inv().id_of("j")}});
  CHECK(format_ipa(inv(), r) == "k j ə m l");
}

TEST_CASE("error vectors and word flags") {
  const auto canonical = parse_ipa(inv(), "k ə m ə l | ʈ aː");
  const std::vector<ErrorOp> ops{{ErrorKind::deletion, 1, {}}};
  const auto ev = error_vector_from_ops(7, ops);
  CHECK(ev.bits == std::vector<std::uint8_t>{0, 1, 0, 0, 0, 0, 0});
  CHECK(word_flags(canonical, ev) == std::vector<bool>{true, false});
}

TEST_CASE("sparsity uses doubled coordinates") {
  using K = ErrorKind;
  CHECK(is_sparse({}));
  CHECK(is_sparse({{K::deletion, 0, {}}, {K::deletion, 4, {}}}));       // 1, 9
  CHECK_FALSE(is_sparse({{K::deletion, 0, {}}, {K::deletion, 3, {}}}));  // 1, 7
  CHECK(is_sparse({{K::addition, 0, 5}, {K::deletion, 4, {}}}));         // 2, 9
  CHECK_FALSE(is_sparse({{K::addition, 1, 5}, {K::deletion, 4, {}}}));   // 4, 9
}

TEST_CASE("manifest jsonl round trip") {
  BuildOptions opt;
  opt.n_pairs = 40;
  opt.p_error = 0.2;
  opt.seed = 5;
  opt.warn = quiet;
  auto m = build_corpus(sentences(), opt);
  m.entries[3].audio_paths = AudioPaths{"audio/a.wav", "audio/b.wav"};
  m.entries[4].augmentation = Augmentation{1.5, 0.95, 3};
  const auto text = manifest_jsonl(m);
  CHECK(std::count(text.begin(), text.end(), '\n') == 40);
  auto back = parse_manifest_jsonl(text);
  back.metadata = m.metadata;
  CHECK(back == m);

  TempDir dir;
  write_manifest(dir / "c.jsonl", m);
  CHECK(std::filesystem::exists(metadata_path_for(dir / "c.jsonl")));
  CHECK(read_manifest(dir / "c.jsonl") == m);
}

TEST_CASE("malformed manifest lines report the line number") {
  BuildOptions opt;
  opt.n_pairs = 2;
  opt.warn = quiet;
  auto text = manifest_jsonl(build_corpus(sentences(), opt));
  text += "{\"sentence_id\": 1}\n";
  try {
    parse_manifest_jsonl(text);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedManifest);
    CHECK_THAT(e.detail(), Catch::Matchers::ContainsSubstring("line 3"));
  }
  auto j = to_json(build_corpus(sentences(), opt).entries[0]);
  j["error_vector"].push_back(0);
  CHECK(code_of([&] { parse_manifest_jsonl(j.dump() + "\n"); }) == ErrorCode::MalformedManifest);
}

TEST_CASE("corpus layout pairs sentences with speakers") {
  const std::vector<std::string> s{"घर", "कमल", "पानी"};
  BuildOptions opt;
  opt.n_pairs = 12;
  opt.speaker_count = 4;
  opt.warn = quiet;
  const auto m = build_corpus(s, opt);
  std::set<std::pair<std::string, int>> combos;
  for (std::size_t k = 0; k < m.entries.size(); ++k) {
    CHECK(m.entries[k].text == s[k % 3]);
    CHECK(m.entries[k].speaker_id == static_cast<int>((k / 3 + k % 3) % 4));
    CHECK(m.entries[k].seed == derive_seed(0, k));
    combos.insert({m.entries[k].sentence_id, m.entries[k].speaker_id});
  }
  CHECK(combos.size() == 12);
  opt.n_pairs = 13;
  CHECK(code_of([&] { build_corpus(s, opt); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("unconvertible sentences are skipped with a warning") {
  std::vector<std::string> warnings;
  BuildOptions opt;
  opt.n_pairs = 2;
  opt.speaker_count = 1;
  opt.warn = [&](const std::string& w) { warnings.push_back(w); };
  const auto m = build_corpus({"घर", "hello", "कमल"}, opt);
  CHECK(m.entries.size() == 2);
  CHECK(m.entries[1].text == "कमल");
  CHECK(warnings.size() == 1);
}

TEST_CASE("corpus is identical for any job count") {
  BuildOptions opt;
  opt.n_pairs = 200;
  opt.seed = 77;
  opt.warn = quiet;
  const auto one = build_corpus(sentences(), opt);
  opt.jobs = 4;
  CHECK(build_corpus(sentences(), opt) == one);
}

TEST_CASE("stub synthesis writes 8 kHz wav files") {
  TempDir dir;
  StubTtsClient tts;
  BuildOptions opt;
  opt.n_pairs = 3;
  opt.p_error = 0.3;
  opt.tts = &tts;
  opt.out_dir = dir.str();
  opt.warn = quiet;
  const auto m = build_corpus(sentences(), opt);
  for (const auto& e : m.entries) {
    REQUIRE(e.audio_paths);
    const auto a = audio::read_wav(dir / e.audio_paths->correct);
    CHECK(a.sample_rate == 8000);
    CHECK(a == tone::render(e.canonical, e.speaker_id));
    CHECK(audio::read_wav(dir / e.audio_paths->mispronounced) == tone::render(e.corrupted, e.speaker_id));
  }
}

TEST_CASE("failing synthesis is retried once and then leaves the row without audio") {
  struct Flaky : TtsClient {
    int calls = 0;
    audio::AudioBuffer synthesize(const TtsRequest& r) override {
      if (++calls % 2 == 1) throw std::runtime_error("busy");
      return tone::render(r.sequence, r.speaker_id);
    }
  };
  struct Dead : TtsClient {
    audio::AudioBuffer synthesize(const TtsRequest&) override { throw std::runtime_error("down"); }
  };
  TempDir dir;
  BuildOptions opt;
  opt.n_pairs = 1;
  opt.out_dir = dir.str();
  opt.warn = quiet;
  Flaky flaky;
  opt.tts = &flaky;
  CHECK(build_corpus({"घर"}, opt).entries[0].audio_paths);
  CHECK(flaky.calls == 4);
  Dead dead;
  opt.tts = &dead;
  CHECK_FALSE(build_corpus({"घर"}, opt).entries[0].audio_paths);
}

TEST_CASE("augmentation appends variants with copied labels") {
  TempDir src, out;
  StubTtsClient tts;
  BuildOptions opt;
  opt.n_pairs = 2;
  opt.p_error = 0.3;
  opt.tts = &tts;
  opt.out_dir = src.str();
  opt.warn = quiet;
  auto m = build_corpus(sentences(), opt);
  m.entries.push_back(m.entries[0]);
  m.entries.back().audio_paths.reset();

  std::vector<std::string> warnings;
  const auto r = augment_corpus(m, 2, 9, src.str(), out.str(), [&](const std::string& w) { warnings.push_back(w); });
  CHECK(r.skipped_rows == std::vector<std::size_t>{2});
  CHECK(warnings.size() == 1);
  REQUIRE(r.manifest.entries.size() == 3 + 4);
  CHECK(r.manifest.metadata.n_pairs == 7);
  for (std::size_t i = 3; i < 7; ++i) {
    const auto& v = r.manifest.entries[i];
    REQUIRE(v.augmentation);
    const auto& orig = m.entries[v.augmentation->source_row];
    CHECK(v.ops == orig.ops);
    CHECK(v.error_vector == orig.error_vector);
    CHECK(std::abs(v.augmentation->gain_db) <= 5.0);
    CHECK(v.augmentation->speed_factor >= 0.9);
    CHECK(v.augmentation->speed_factor <= 1.1);
    const auto a = audio::read_wav(out / v.audio_paths->correct);
    const auto base = audio::read_wav(src / orig.audio_paths->correct);
    CHECK(a.samples.size() ==
          static_cast<std::size_t>(std::llround(static_cast<double>(base.samples.size()) / v.augmentation->speed_factor)));
  }
  // original rows are still readable relative to the new manifest
  CHECK(audio::read_wav(out / r.manifest.entries[0].audio_paths->correct) ==
        audio::read_wav(src / m.entries[0].audio_paths->correct));
  const auto again = augment_corpus(m, 2, 9, src.str(), out.str(), quiet);
  CHECK(again.manifest == r.manifest);
}
