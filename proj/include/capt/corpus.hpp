#pragma once

// Mispronounced-utterance corpus synthesis: seeded phoneme-level error
// injection, paired-corpus construction with binary error vectors, TTS
// clients, augmentation, and the JSON-lines manifest.

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "capt/audio.hpp"
#include "capt/error.hpp"
#include "capt/g2p.hpp"
#include "capt/log.hpp"
#include "capt/parallel.hpp"
#include "capt/phoneme.hpp"
#include "capt/rng.hpp"
#include "capt/tone_code.hpp"

namespace capt::corpus {

using json = nlohmann::json;

enum class ErrorKind { addition, deletion, substitution };

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::addition: return "addition";
    case ErrorKind::deletion: return "deletion";
    case ErrorKind::substitution: return "substitution";
  }
  return "?";
}

inline ErrorKind parse_error_kind(std::string_view s) {
  if (s == "addition") return ErrorKind::addition;
  if (s == "deletion") return ErrorKind::deletion;
  if (s == "substitution") return ErrorKind::substitution;
  throw Error(ErrorCode::MalformedManifest, "unknown error kind '" + std::string(s) + "'");
}

/// One injected edit. `canonical_index` is a phoneme position (EOW/EOS not
/// counted); for additions it is the position the new phoneme follows, -1
/// for a prefix.
struct ErrorOp {
  ErrorKind kind = ErrorKind::substitution;
  int canonical_index = 0;
  std::optional<TokenId> inserted_or_replacement;

  bool operator==(const ErrorOp&) const = default;
};

struct ErrorVector {
  std::vector<std::uint8_t> bits;
  bool operator==(const ErrorVector&) const = default;
  std::size_t count() const { return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1)); }
};

inline ErrorVector error_vector_from_ops(std::size_t n_phonemes, const std::vector<ErrorOp>& ops) {
  ErrorVector ev{std::vector<std::uint8_t>(n_phonemes, 0)};
  for (const auto& op : ops)
    if (op.canonical_index >= 0 && static_cast<std::size_t>(op.canonical_index) < n_phonemes)
      ev.bits[static_cast<std::size_t>(op.canonical_index)] = 1;
  return ev;
}

/// Word-level ground truth: a word is mispronounced iff any of its positions
/// is marked.
inline std::vector<bool> word_flags(const PhonemeSequence& canonical, const ErrorVector& ev) {
  std::vector<bool> flags;
  for (const auto& span : canonical.word_spans()) {
    bool any = false;
    for (auto i = span.start; i < span.end && i < ev.bits.size(); ++i) any = any || ev.bits[i];
    flags.push_back(any);
  }
  return flags;
}

/// Applies ops (at most one per canonical position) to the canonical
/// sequence. Word structure is preserved: insertions stay in the word of
/// their anchor.
inline PhonemeSequence replay_ops(const PhonemeSequence& canonical, const std::vector<ErrorOp>& ops) {
  const auto n = canonical.phoneme_count();
  std::vector<const ErrorOp*> at(n, nullptr);
  std::vector<TokenId> prefix;
  const auto flat = canonical.phonemes();
  for (const auto& op : ops) {
    const bool anchored_prefix = op.kind == ErrorKind::addition && op.canonical_index == -1;
    if (!anchored_prefix && (op.canonical_index < 0 || static_cast<std::size_t>(op.canonical_index) >= n))
      throw Error(ErrorCode::InconsistentInput, "op index out of range: " + std::to_string(op.canonical_index));
    if (op.kind != ErrorKind::deletion && (!op.inserted_or_replacement || !is_phoneme_token(*op.inserted_or_replacement)))
      throw Error(ErrorCode::InconsistentInput, "op needs a phoneme");
    if (anchored_prefix) {
      prefix.push_back(*op.inserted_or_replacement);
      continue;
    }
    const auto i = static_cast<std::size_t>(op.canonical_index);
    if (at[i]) throw Error(ErrorCode::InconsistentInput, "two ops at position " + std::to_string(i));
    if (op.kind == ErrorKind::substitution && *op.inserted_or_replacement == flat[i])
      throw Error(ErrorCode::InconsistentInput, "substitution keeps the original phoneme");
    at[i] = &op;
  }
  std::vector<TokenId> out(prefix);
  std::size_t pos = 0;
  for (auto t : canonical.tokens()) {
    if (!is_phoneme_token(t)) {
      out.push_back(t);
      continue;
    }
    const ErrorOp* op = at[pos++];
    if (!op) {
      out.push_back(t);
    } else if (op->kind == ErrorKind::substitution) {
      out.push_back(*op->inserted_or_replacement);
    } else if (op->kind == ErrorKind::addition) {
      out.push_back(t);
      out.push_back(*op->inserted_or_replacement);
    }
  }
  return PhonemeSequence::from_tokens(std::move(out));
}

/// True when every pair of edits is separated by at least three untouched
/// canonical phonemes (an insertion sits between its anchor and the next
/// phoneme). Under that separation the optimal alignment is unique and
/// reproduces the edit script.
inline bool is_sparse(const std::vector<ErrorOp>& ops) {
  std::vector<long> pos;
  for (const auto& op : ops)
    pos.push_back(op.kind == ErrorKind::addition ? 2L * (op.canonical_index + 1) : 2L * op.canonical_index + 1);
  std::sort(pos.begin(), pos.end());
  for (std::size_t i = 1; i < pos.size(); ++i)
    if (pos[i] - pos[i - 1] < 7) return false;
  return true;
}

enum class ConfusionPolicy { confusable, uniform };

inline constexpr double kConfusableDistance = 0.35;

/// Per-phoneme substitution candidates: phonemes within feature distance
/// 0.35 (same category, one or two features apart).
class ConfusionTable {
 public:
  explicit ConfusionTable(const PhonemeInventory& inv, const FeatureWeights& w = {}) {
    for (const auto& a : inv.phonemes()) {
      auto& row = confusable_[static_cast<std::size_t>(a.id)];
      for (const auto& b : inv.phonemes()) {
        const double d = feature_distance(a, b, w);
        distance_[static_cast<std::size_t>(a.id)][static_cast<std::size_t>(b.id)] = d;
        if (a.id != b.id && d <= kConfusableDistance + 1e-12) row.push_back(b.id);
      }
    }
  }

  const std::vector<TokenId>& confusable(TokenId id) const { return confusable_.at(static_cast<std::size_t>(id)); }
  double distance(TokenId a, TokenId b) const {
    return distance_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
  }

 private:
  std::array<std::vector<TokenId>, kNumPhonemes> confusable_{};
  std::array<std::array<double, kNumPhonemes>, kNumPhonemes> distance_{};
};

struct Injection {
  PhonemeSequence corrupted;
  std::vector<ErrorOp> ops;
  ErrorVector error_vector;
};

/// Visits each canonical phoneme once; with probability p it receives one
/// edit whose kind is uniform over the kinds admissible at that position.
/// Deletion is inadmissible when it would empty a word or when a flat
/// neighbour is the same phoneme (the result would not identify the
/// position); an inserted phoneme never equals the phonemes it lands
/// between, for the same reason.
inline Injection inject_errors(const PhonemeSequence& canonical, double p, std::uint64_t seed,
                               const ConfusionTable& table,
                               ConfusionPolicy policy = ConfusionPolicy::confusable) {
  if (!(p >= 0.0 && p <= 0.5)) throw Error(ErrorCode::InvalidProbability, std::to_string(p) + " not in [0, 0.5]");
  const auto flat = canonical.phonemes();
  if (flat.empty()) throw Error(ErrorCode::InvalidArgument, "canonical sequence has no phonemes");
  const auto spans = canonical.word_spans();

  CounterRng rng(seed);
  std::vector<ErrorOp> ops;
  std::vector<std::size_t> remaining;
  std::vector<std::size_t> word_of(flat.size());
  for (std::size_t w = 0; w < spans.size(); ++w) {
    remaining.push_back(spans[w].end - spans[w].start);
    for (auto i = spans[w].start; i < spans[w].end; ++i) word_of[i] = w;
  }

  auto all_others = [](TokenId except) {
    std::vector<TokenId> v;
    for (TokenId t = 0; t < kNumPhonemes; ++t)
      if (t != except) v.push_back(t);
    return v;
  };

  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (!rng.bernoulli(p)) continue;
    const auto w = word_of[i];
    const TokenId cur = flat[i];
    const TokenId next = i + 1 < flat.size() ? flat[i + 1] : -1;

    std::vector<TokenId> insert_candidates;
    if (policy == ConfusionPolicy::confusable) {
      std::set<TokenId> pool;
      for (auto k = spans[w].start; k < spans[w].end; ++k)
        for (auto c : table.confusable(flat[k])) pool.insert(c);
      insert_candidates.assign(pool.begin(), pool.end());
    } else {
      insert_candidates = all_others(-1);
    }
    std::erase_if(insert_candidates, [&](TokenId t) { return t == cur || t == next; });

    const bool can_delete = remaining[w] >= 2 && !(i > 0 && flat[i - 1] == cur) && next != cur;

    std::vector<ErrorKind> kinds;
    if (!insert_candidates.empty()) kinds.push_back(ErrorKind::addition);
    if (can_delete) kinds.push_back(ErrorKind::deletion);
    kinds.push_back(ErrorKind::substitution);
    const auto kind = kinds[rng.below(kinds.size())];

    ErrorOp op{kind, static_cast<int>(i), std::nullopt};
    switch (kind) {
      case ErrorKind::addition:
        op.inserted_or_replacement = insert_candidates[rng.below(insert_candidates.size())];
        break;
      case ErrorKind::deletion:
        --remaining[w];
        break;
      case ErrorKind::substitution: {
        auto cands = policy == ConfusionPolicy::confusable ? table.confusable(cur) : std::vector<TokenId>{};
        if (cands.empty()) cands = all_others(cur);
        op.inserted_or_replacement = cands[rng.below(cands.size())];
        break;
      }
    }
    ops.push_back(op);
  }
  auto corrupted = replay_ops(canonical, ops);
  auto ev = error_vector_from_ops(flat.size(), ops);
  return {std::move(corrupted), std::move(ops), std::move(ev)};
}

inline Injection inject_errors(const PhonemeSequence& canonical, double p, std::uint64_t seed,
                               const PhonemeInventory& inv,
                               ConfusionPolicy policy = ConfusionPolicy::confusable) {
  return inject_errors(canonical, p, seed, ConfusionTable(inv), policy);
}

// ---------------------------------------------------------------------------
// Corpus records

struct AudioPaths {
  std::string correct;
  std::string mispronounced;
  bool operator==(const AudioPaths&) const = default;
};

struct Augmentation {
  double gain_db = 0.0;
  double speed_factor = 1.0;
  std::size_t source_row = 0;
  bool operator==(const Augmentation&) const = default;
};

struct UtterancePair {
  std::string sentence_id;
  std::string text;
  PhonemeSequence canonical;
  PhonemeSequence corrupted;
  std::vector<ErrorOp> ops;
  ErrorVector error_vector;
  int speaker_id = 0;
  std::uint64_t seed = 0;
  std::optional<AudioPaths> audio_paths;
  std::optional<Augmentation> augmentation;  // set on rows produced by augment_corpus

  bool operator==(const UtterancePair&) const = default;
};

struct CorpusMetadata {
  double p_error = 0.05;
  std::size_t n_pairs = 0;
  std::uint64_t seed = 0;
  int speaker_count = 10;
  int sample_rate = audio::kCanonicalSampleRate;
  bool operator==(const CorpusMetadata&) const = default;
};

struct CorpusManifest {
  std::vector<UtterancePair> entries;
  CorpusMetadata metadata;
  bool operator==(const CorpusManifest&) const = default;
};

inline json ops_to_json(const std::vector<ErrorOp>& ops) {
  json arr = json::array();
  for (const auto& op : ops) {
    json o;
    o["kind"] = to_string(op.kind);
    o["canonical_index"] = op.canonical_index;
    o["inserted_or_replacement"] = op.inserted_or_replacement ? json(*op.inserted_or_replacement) : json(nullptr);
    arr.push_back(std::move(o));
  }
  return arr;
}

inline std::vector<ErrorOp> ops_from_json(const json& arr) {
  std::vector<ErrorOp> ops;
  for (const auto& o : arr) {
    ErrorOp op;
    op.kind = parse_error_kind(o.at("kind").get<std::string>());
    op.canonical_index = o.at("canonical_index").get<int>();
    if (const auto& r = o.at("inserted_or_replacement"); !r.is_null()) op.inserted_or_replacement = r.get<TokenId>();
    ops.push_back(op);
  }
  return ops;
}

inline json to_json(const UtterancePair& u) {
  json j;
  j["sentence_id"] = u.sentence_id;
  j["text"] = u.text;
  j["canonical"] = u.canonical.tokens();
  j["corrupted"] = u.corrupted.tokens();
  j["ops"] = ops_to_json(u.ops);
  j["error_vector"] = u.error_vector.bits;
  j["speaker_id"] = u.speaker_id;
  j["seed"] = u.seed;
  if (u.audio_paths)
    j["audio_paths"] = {{"correct", u.audio_paths->correct}, {"mispronounced", u.audio_paths->mispronounced}};
  else
    j["audio_paths"] = nullptr;
  if (u.augmentation)
    j["augmentation"] = {{"gain_db", u.augmentation->gain_db},
                         {"speed_factor", u.augmentation->speed_factor},
                         {"source_row", u.augmentation->source_row}};
  return j;
}

inline UtterancePair pair_from_json(const json& j) {
  UtterancePair u;
  u.sentence_id = j.at("sentence_id").get<std::string>();
  u.text = j.at("text").get<std::string>();
  u.canonical = PhonemeSequence::from_tokens(j.at("canonical").get<std::vector<TokenId>>());
  u.corrupted = PhonemeSequence::from_tokens(j.at("corrupted").get<std::vector<TokenId>>());
  u.ops = ops_from_json(j.at("ops"));
  u.error_vector.bits = j.at("error_vector").get<std::vector<std::uint8_t>>();
  u.speaker_id = j.at("speaker_id").get<int>();
  u.seed = j.at("seed").get<std::uint64_t>();
  if (const auto& a = j.at("audio_paths"); !a.is_null())
    u.audio_paths = AudioPaths{a.at("correct").get<std::string>(), a.at("mispronounced").get<std::string>()};
  if (j.contains("augmentation")) {
    const auto& a = j["augmentation"];
    u.augmentation = Augmentation{a.at("gain_db").get<double>(), a.at("speed_factor").get<double>(),
                                  a.at("source_row").get<std::size_t>()};
  }
  if (u.error_vector.bits.size() != u.canonical.phoneme_count())
    throw Error(ErrorCode::MalformedManifest, "error_vector length differs from canonical phoneme count");
  return u;
}

inline json to_json(const CorpusMetadata& m) {
  return {{"p_error", m.p_error},
          {"n_pairs", m.n_pairs},
          {"seed", m.seed},
          {"speaker_count", m.speaker_count},
          {"sample_rate", m.sample_rate}};
}

inline CorpusMetadata metadata_from_json(const json& j) {
  CorpusMetadata m;
  m.p_error = j.at("p_error").get<double>();
  m.n_pairs = j.at("n_pairs").get<std::size_t>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.speaker_count = j.at("speaker_count").get<int>();
  m.sample_rate = j.at("sample_rate").get<int>();
  return m;
}

/// JSON-lines body: one UtterancePair per line.
inline std::string manifest_jsonl(const CorpusManifest& m) {
  std::string out;
  for (const auto& e : m.entries) {
    out += to_json(e).dump();
    out += '\n';
  }
  return out;
}

inline std::string metadata_path_for(const std::string& manifest_path) {
  auto p = std::filesystem::path(manifest_path);
  return (p.parent_path() / (p.stem().string() + ".meta.json")).string();
}

/// Writes `<name>.jsonl` plus the `<name>.meta.json` sidecar holding metadata.
inline void write_manifest(const std::string& path, const CorpusManifest& m) {
  text::write_file(path, manifest_jsonl(m));
  text::write_file(metadata_path_for(path), to_json(m.metadata).dump(2) + "\n");
}

inline CorpusManifest parse_manifest_jsonl(std::string_view content) {
  CorpusManifest m;
  std::size_t line_no = 0;
  for (const auto& line : text::split(content, '\n')) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      m.entries.push_back(pair_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::MalformedManifest, "line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedManifest, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  m.metadata.n_pairs = m.entries.size();
  return m;
}

inline CorpusManifest read_manifest(const std::string& path) {
  auto m = parse_manifest_jsonl(text::read_file(path));
  if (const auto meta = metadata_path_for(path); std::filesystem::exists(meta)) {
    try {
      m.metadata = metadata_from_json(json::parse(text::read_file(meta)));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::MalformedManifest, meta + ": " + e.what());
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Speech synthesis clients

struct TtsRequest {
  std::string text;      // Devanagari prompt
  std::string phonemes;  // space-separated IPA with `|` word breaks
  PhonemeSequence sequence;
  int speaker_id = 0;
};

/// Synthesis may be stochastic: equal requests can yield different audio.
class TtsClient {
 public:
  virtual ~TtsClient() = default;
  virtual audio::AudioBuffer synthesize(const TtsRequest& request) = 0;
};

/// Deterministic offline synthesizer writing the tone code.
class StubTtsClient final : public TtsClient {
 public:
  audio::AudioBuffer synthesize(const TtsRequest& request) override {
    return tone::render(request.sequence, request.speaker_id);
  }
};

/// POSTs {text, phonemes, speaker_id} as JSON and expects WAV bytes back.
class HttpTtsClient final : public TtsClient {
 public:
  explicit HttpTtsClient(std::string url, int timeout_seconds = 60) : timeout_(timeout_seconds) {
    const auto scheme_end = url.find("://");
    const auto path_start = url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    base_ = path_start == std::string::npos ? url : url.substr(0, path_start);
    path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
  }

  audio::AudioBuffer synthesize(const TtsRequest& request) override {
    httplib::Client cli(base_);
    cli.set_connection_timeout(timeout_);
    cli.set_read_timeout(timeout_);
    const json body = {{"text", request.text}, {"phonemes", request.phonemes}, {"speaker_id", request.speaker_id}};
    auto res = cli.Post(path_, body.dump(), "application/json");
    if (!res) throw Error(ErrorCode::TtsFailure, "no response from " + base_ + path_);
    if (res->status != 200) throw Error(ErrorCode::TtsFailure, "HTTP " + std::to_string(res->status));
    try {
      return audio::parse_wav(res->body);
    } catch (const Error& e) {
      throw Error(ErrorCode::TtsFailure, std::string("bad WAV from TTS: ") + e.what());
    }
  }

 private:
  std::string base_;
  std::string path_;
  int timeout_;
};

// ---------------------------------------------------------------------------
// Corpus construction

struct BuildOptions {
  std::size_t n_pairs = 1000;
  double p_error = 0.05;
  std::uint64_t seed = 0;
  int speaker_count = 10;
  ConfusionPolicy policy = ConfusionPolicy::confusable;
  TtsClient* tts = nullptr;
  std::string out_dir;  // audio is written under out_dir/audio when tts is set
  unsigned jobs = 1;
  const PhonemeInventory* inventory = nullptr;
  WarningSink warn = stderr_warning;
};

namespace detail {

inline std::optional<audio::AudioBuffer> synthesize_once_retry(TtsClient& tts, const TtsRequest& req,
                                                               const WarningSink& warn, const std::string& what) {
  for (int attempt = 0; attempt < 2; ++attempt) {
    try {
      auto buf = audio::resample(tts.synthesize(req), audio::kCanonicalSampleRate);
      auto checked = audio::enforce_duration(std::move(buf));
      if (checked.truncated) warn(what + ": audio truncated to 8 s");
      if (checked.rejected) {
        warn(what + ": audio shorter than 0.5 s rejected");
        return std::nullopt;
      }
      return std::move(checked.audio);
    } catch (const std::exception& e) {
      warn(what + ": synthesis failed (" + e.what() + ")" + (attempt == 0 ? ", retrying" : ""));
    }
  }
  return std::nullopt;
}

inline std::string entry_stem(std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%06zu", k);
  return buf;
}

}  // namespace detail

/// Pairs entry k with sentence k mod S and speaker (k / S + k mod S) mod speakers,
/// so (sentence, speaker) combinations do not repeat while n <= S * speakers.
/// Entry k draws from substream derive_seed(seed, k).
inline CorpusManifest build_corpus(const std::vector<std::string>& sentences, const BuildOptions& opt) {
  const auto& inv = opt.inventory ? *opt.inventory : PhonemeInventory::builtin();
  if (!(opt.p_error >= 0.0 && opt.p_error <= 0.5))
    throw Error(ErrorCode::InvalidProbability, std::to_string(opt.p_error) + " not in [0, 0.5]");
  if (opt.speaker_count <= 0) throw Error(ErrorCode::InvalidArgument, "speaker_count must be positive");

  struct Prepared {
    std::size_t source_index;
    std::string text;
    PhonemeSequence canonical;
  };
  std::vector<Prepared> usable;
  g2p::Options gopt;
  gopt.inventory = &inv;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    try {
      auto r = g2p::to_phonemes(sentences[i], gopt);
      if (r.sequence.phoneme_count() == 0) {
        opt.warn("sentence " + std::to_string(i) + " has no phonemes; skipped");
        continue;
      }
      usable.push_back({i, sentences[i], std::move(r.sequence)});
    } catch (const Error& e) {
      opt.warn("sentence " + std::to_string(i) + " skipped: " + e.what());
    }
  }
  const std::size_t speakers = static_cast<std::size_t>(opt.speaker_count);
  if (opt.n_pairs > usable.size() * speakers)
    throw Error(ErrorCode::InvalidArgument, "n_pairs " + std::to_string(opt.n_pairs) + " exceeds " +
                                                std::to_string(usable.size()) + " usable sentences x " +
                                                std::to_string(speakers) + " speakers");

  if (opt.tts) std::filesystem::create_directories(std::filesystem::path(opt.out_dir) / "audio");

  const ConfusionTable table(inv);
  CorpusManifest m;
  m.metadata = {opt.p_error, opt.n_pairs, opt.seed, opt.speaker_count, audio::kCanonicalSampleRate};
  m.entries.resize(opt.n_pairs);

  parallel_for(opt.n_pairs, opt.jobs, [&](std::size_t k) {
    const auto& s = usable[k % usable.size()];
    auto& e = m.entries[k];
    char id[32];
    std::snprintf(id, sizeof id, "s%04zu", s.source_index);
    e.sentence_id = id;
    e.text = s.text;
    e.canonical = s.canonical;
    e.speaker_id = static_cast<int>((k / usable.size() + k % usable.size()) % speakers);
    e.seed = derive_seed(opt.seed, k);
    auto inj = inject_errors(e.canonical, opt.p_error, e.seed, table, opt.policy);
    e.corrupted = std::move(inj.corrupted);
    e.ops = std::move(inj.ops);
    e.error_vector = std::move(inj.error_vector);

    if (!opt.tts) return;
    const auto stem = detail::entry_stem(k);
    TtsRequest good{e.text, format_ipa(inv, e.canonical), e.canonical, e.speaker_id};
    TtsRequest bad{g2p::to_devanagari(inv, e.corrupted), format_ipa(inv, e.corrupted), e.corrupted, e.speaker_id};
    auto a = detail::synthesize_once_retry(*opt.tts, good, opt.warn, "entry " + stem + " correct");
    auto b = a ? detail::synthesize_once_retry(*opt.tts, bad, opt.warn, "entry " + stem + " mispronounced")
               : std::nullopt;
    if (!a || !b) return;
    AudioPaths paths{"audio/" + stem + "_correct.wav", "audio/" + stem + "_mispronounced.wav"};
    audio::write_wav((std::filesystem::path(opt.out_dir) / paths.correct).string(), *a);
    audio::write_wav((std::filesystem::path(opt.out_dir) / paths.mispronounced).string(), *b);
    e.audio_paths = std::move(paths);
  });
  return m;
}

// ---------------------------------------------------------------------------
// Augmentation

/// Gain uniform in [-5, 5] dB, speed uniform in [0.9, 1.1].
inline audio::AugmentSpec draw_augment_spec(CounterRng& rng) {
  const double gain = rng.uniform(-audio::AugmentSpec::kMaxGainDb, audio::AugmentSpec::kMaxGainDb);
  const double speed = rng.uniform(audio::AugmentSpec::kMinSpeed, audio::AugmentSpec::kMaxSpeed);
  return {gain, speed};
}

struct AugmentResult {
  CorpusManifest manifest;
  std::vector<std::size_t> skipped_rows;  // rows without audio
};

/// Appends augmented copies of every audio-bearing row. `specs_for_row`
/// returns the variants for a row; error vectors and ops are copied as is.
template <typename SpecSource>
AugmentResult augment_rows(const CorpusManifest& in, const std::string& manifest_dir, const std::string& out_dir,
                           SpecSource&& specs_for_row, const WarningSink& warn = stderr_warning) {
  AugmentResult r{in, {}};
  const auto base = std::filesystem::path(manifest_dir);
  const auto out = std::filesystem::path(out_dir);
  bool made_dir = false;
  for (std::size_t row = 0; row < in.entries.size(); ++row) {
    const auto specs = specs_for_row(row);
    if (specs.empty()) continue;
    const auto& e = in.entries[row];
    if (!e.audio_paths) {
      r.skipped_rows.push_back(row);
      warn("EntrySkipped: row " + std::to_string(row) + " has no audio");
      continue;
    }
    if (!made_dir) {
      std::filesystem::create_directories(out / "audio");
      made_dir = true;
    }
    const auto correct = audio::read_wav((base / e.audio_paths->correct).string());
    const auto wrong = audio::read_wav((base / e.audio_paths->mispronounced).string());
    for (std::size_t v = 0; v < specs.size(); ++v) {
      const auto& spec = specs[v];
      auto variant = e;
      const auto stem = detail::entry_stem(row) + "_aug" + std::to_string(v);
      AudioPaths paths{"audio/" + stem + "_correct.wav", "audio/" + stem + "_mispronounced.wav"};
      audio::write_wav((out / paths.correct).string(), audio::apply_augment(correct, spec));
      audio::write_wav((out / paths.mispronounced).string(), audio::apply_augment(wrong, spec));
      variant.audio_paths = paths;
      variant.augmentation = Augmentation{spec.gain_db(), spec.speed_factor(), row};
      r.manifest.entries.push_back(std::move(variant));
    }
  }
  // Original rows keep paths relative to the source manifest directory.
  if (std::filesystem::weakly_canonical(base) != std::filesystem::weakly_canonical(out)) {
    for (std::size_t row = 0; row < in.entries.size(); ++row) {
      auto& e = r.manifest.entries[row];
      if (!e.audio_paths) continue;
      e.audio_paths->correct = std::filesystem::relative(base / e.audio_paths->correct, out).string();
      e.audio_paths->mispronounced = std::filesystem::relative(base / e.audio_paths->mispronounced, out).string();
    }
  }
  r.manifest.metadata.n_pairs = r.manifest.entries.size();
  return r;
}

/// Applies the same fixed specs to every row.
inline AugmentResult augment_corpus(const CorpusManifest& in, const std::vector<audio::AugmentSpec>& specs,
                                    const std::string& manifest_dir, const std::string& out_dir,
                                    const WarningSink& warn = stderr_warning) {
  return augment_rows(in, manifest_dir, out_dir, [&](std::size_t) { return specs; }, warn);
}

/// Draws `variants` random specs per row from substream (seed, row).
inline AugmentResult augment_corpus(const CorpusManifest& in, std::size_t variants, std::uint64_t seed,
                                    const std::string& manifest_dir, const std::string& out_dir,
                                    const WarningSink& warn = stderr_warning) {
  return augment_rows(
      in, manifest_dir, out_dir,
      [&](std::size_t row) {
        CounterRng rng(seed, row);
        std::vector<audio::AugmentSpec> specs;
        for (std::size_t v = 0; v < variants; ++v) specs.push_back(draw_augment_spec(rng));
        return specs;
      },
      warn);
}

}  // namespace capt::corpus
