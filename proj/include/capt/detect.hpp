#pragma once

// Alignment-based mispronunciation detection: weighted global alignment of
// predicted against canonical phonemes, word-level flagging, severity from
// recognizer confidence, and recognizers (calibrated mock, tone decoder,
// HTTP).

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "capt/audio.hpp"
#include "capt/corpus.hpp"
#include "capt/error.hpp"
#include "capt/parallel.hpp"
#include "capt/phoneme.hpp"
#include "capt/rng.hpp"
#include "capt/stats.hpp"
#include "capt/tone_code.hpp"

namespace capt::detect {

using json = nlohmann::json;
using Posterior = std::array<double, kNumTokens>;

// ---------------------------------------------------------------------------
// Recognizer output

struct RecognizerOutput {
  PhonemeSequence phonemes;         // predicted
  std::vector<Posterior> posteriors;  // one row per predicted phoneme

  /// Each row sums to 1 within 1e-6 and peaks at the emitted token.
  void validate() const {
    const auto flat = phonemes.phonemes();
    if (flat.size() != posteriors.size())
      throw Error(ErrorCode::InconsistentInput, std::to_string(flat.size()) + " phonemes but " +
                                                    std::to_string(posteriors.size()) + " posterior rows");
    for (std::size_t i = 0; i < flat.size(); ++i) {
      const auto& row = posteriors[i];
      double sum = 0.0;
      for (double p : row) {
        if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InconsistentInput, "posterior outside [0, 1]");
        sum += p;
      }
      if (std::fabs(sum - 1.0) > 1e-6)
        throw Error(ErrorCode::InconsistentInput, "posterior row " + std::to_string(i) + " sums to " + std::to_string(sum));
      const auto arg = static_cast<TokenId>(std::max_element(row.begin(), row.end()) - row.begin());
      if (row[static_cast<std::size_t>(arg)] != row[static_cast<std::size_t>(flat[i])])
        throw Error(ErrorCode::InconsistentInput, "posterior row " + std::to_string(i) + " does not peak at the emitted token");
    }
  }
};

/// Builds a distribution from integer units of 1/10000 so rows sum to one
/// exactly after 4-decimal serialization.
inline Posterior posterior_from_units(const std::array<long, kNumTokens>& units) {
  Posterior p{};
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = static_cast<double>(units[k]) / 10000.0;
  return p;
}

/// Converts non-negative scores into a unit-quantized distribution peaking at
/// `winner`; rounding residue goes to the winner.
inline Posterior posterior_from_scores(const Posterior& scores, TokenId winner) {
  double total = 0.0;
  for (double s : scores) total += std::max(0.0, s);
  std::array<long, kNumTokens> units{};
  long used = 0;
  for (std::size_t k = 0; k < units.size(); ++k) {
    if (static_cast<TokenId>(k) == winner || total <= 0.0) continue;
    units[k] = static_cast<long>(std::floor(10000.0 * std::max(0.0, scores[k]) / total));
    used += units[k];
  }
  units[static_cast<std::size_t>(winner)] = 10000 - used;
  // Keep the winner strictly on top.
  for (std::size_t k = 0; k < units.size(); ++k) {
    if (static_cast<TokenId>(k) == winner) continue;
    while (units[k] >= units[static_cast<std::size_t>(winner)] && units[k] > 0) {
      --units[k];
      ++units[static_cast<std::size_t>(winner)];
    }
  }
  return posterior_from_units(units);
}

inline double round4(double x) { return std::round(x * 10000.0) / 10000.0; }

inline json to_json(const RecognizerOutput& r, const std::string& utterance_id = {}) {
  json j;
  if (!utterance_id.empty()) j["utterance_id"] = utterance_id;
  j["tokens"] = r.phonemes.tokens();
  json rows = json::array();
  for (const auto& row : r.posteriors) {
    json jr = json::array();
    for (double p : row) jr.push_back(round4(p));
    rows.push_back(std::move(jr));
  }
  j["posteriors"] = std::move(rows);
  return j;
}

/// Rows are renormalized on read when 4-decimal rounding left them within
/// 5e-3 of one; anything further off is rejected.
inline RecognizerOutput recognizer_output_from_json(const json& j) {
  RecognizerOutput r;
  try {
    r.phonemes = PhonemeSequence::from_tokens(j.at("tokens").get<std::vector<TokenId>>());
    for (const auto& jr : j.at("posteriors")) {
      const auto v = jr.get<std::vector<double>>();
      if (v.size() != static_cast<std::size_t>(kNumTokens))
        throw Error(ErrorCode::InconsistentInput, "posterior rows must have 67 entries");
      Posterior row{};
      double sum = 0.0;
      for (std::size_t k = 0; k < row.size(); ++k) sum += (row[k] = v[k]);
      if (std::fabs(sum - 1.0) > 5e-3) throw Error(ErrorCode::InconsistentInput, "posterior row sums to " + std::to_string(sum));
      for (auto& p : row) p /= sum;
      r.posteriors.push_back(row);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InconsistentInput, std::string("recognizer output: ") + e.what());
  }
  r.validate();
  return r;
}

// ---------------------------------------------------------------------------
// Alignment

enum class OpKind { match, substitution, insertion, deletion };

constexpr std::string_view to_string(OpKind k) {
  switch (k) {
    case OpKind::match: return "match";
    case OpKind::substitution: return "substitution";
    case OpKind::insertion: return "insertion";
    case OpKind::deletion: return "deletion";
  }
  return "?";
}

struct AlignmentOp {
  OpKind kind = OpKind::match;
  std::optional<std::size_t> canonical_index;
  std::optional<std::size_t> predicted_index;
  double cost = 0.0;

  bool operator==(const AlignmentOp&) const = default;
};

struct Alignment {
  std::vector<AlignmentOp> ops;
  double total_cost = 0.0;

  std::size_t edit_count() const {
    return static_cast<std::size_t>(
        std::count_if(ops.begin(), ops.end(), [](const AlignmentOp& o) { return o.kind != OpKind::match; }));
  }
};

inline json to_json(const AlignmentOp& op) {
  json j;
  j["kind"] = to_string(op.kind);
  j["canonical_index"] = op.canonical_index ? json(*op.canonical_index) : json(nullptr);
  j["predicted_index"] = op.predicted_index ? json(*op.predicted_index) : json(nullptr);
  j["cost"] = op.cost;
  return j;
}

struct AlignCosts {
  double insertion = 1.0;
  double deletion = 1.0;
  double sub_base = 0.5;   // substitution = sub_base + sub_scale * feature distance
  double sub_scale = 0.5;
};

/// Global weighted edit distance with a precomputed substitution table.
class Aligner {
 public:
  using Distance = std::function<double(TokenId, TokenId)>;

  explicit Aligner(const PhonemeInventory& inv = PhonemeInventory::builtin(), const FeatureWeights& w = {},
                   AlignCosts costs = {})
      : costs_(costs) {
    for (const auto& a : inv.phonemes())
      for (const auto& b : inv.phonemes()) set(a.id, b.id, feature_distance(a, b, w));
  }

  /// Arbitrary distance in [0, 1] with d(a, a) = 0; used to test the DP over
  /// random cost structures.
  Aligner(const Distance& distance, AlignCosts costs) : costs_(costs) {
    for (TokenId a = 0; a < kNumPhonemes; ++a)
      for (TokenId b = 0; b < kNumPhonemes; ++b) set(a, b, distance(a, b));
  }

  const AlignCosts& costs() const noexcept { return costs_; }
  double substitution_cost(TokenId a, TokenId b) const {
    return sub_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  /// Backtrace prefers diagonal over deletion over insertion when costs tie.
  Alignment align(const std::vector<TokenId>& canonical, const std::vector<TokenId>& predicted) const {
    const std::size_t n = canonical.size(), m = predicted.size();
    std::vector<double> D((n + 1) * (m + 1));
    auto at = [&](std::size_t i, std::size_t j) -> double& { return D[i * (m + 1) + j]; };
    for (std::size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<double>(i) * costs_.deletion;
    for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<double>(j) * costs_.insertion;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= m; ++j)
        at(i, j) = std::min({at(i - 1, j - 1) + substitution_cost(canonical[i - 1], predicted[j - 1]),
                             at(i - 1, j) + costs_.deletion, at(i, j - 1) + costs_.insertion});

    Alignment a;
    a.total_cost = at(n, m);
    constexpr double eps = 1e-9;
    std::size_t i = n, j = m;
    while (i > 0 || j > 0) {
      if (i > 0 && j > 0) {
        const double c = substitution_cost(canonical[i - 1], predicted[j - 1]);
        if (std::fabs(at(i, j) - (at(i - 1, j - 1) + c)) < eps) {
          const bool same = canonical[i - 1] == predicted[j - 1];
          a.ops.push_back({same ? OpKind::match : OpKind::substitution, i - 1, j - 1, c});
          --i, --j;
          continue;
        }
      }
      if (i > 0 && std::fabs(at(i, j) - (at(i - 1, j) + costs_.deletion)) < eps) {
        a.ops.push_back({OpKind::deletion, i - 1, std::nullopt, costs_.deletion});
        --i;
        continue;
      }
      a.ops.push_back({OpKind::insertion, std::nullopt, j - 1, costs_.insertion});
      --j;
    }
    std::reverse(a.ops.begin(), a.ops.end());
    return a;
  }

  Alignment align(const PhonemeSequence& canonical, const PhonemeSequence& predicted) const {
    return align(canonical.phonemes(), predicted.phonemes());
  }

 private:
  void set(TokenId a, TokenId b, double d) {
    sub_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a == b ? 0.0 : costs_.sub_base + costs_.sub_scale * d;
  }

  AlignCosts costs_;
  std::array<std::array<double, kNumPhonemes>, kNumPhonemes> sub_{};
};

inline Alignment align(const PhonemeSequence& canonical, const PhonemeSequence& predicted) {
  static const Aligner aligner;
  return aligner.align(canonical, predicted);
}

/// Converts an alignment into corpus edit ops; an insertion is anchored after
/// the last canonical position consumed before it (-1 at the start).
inline std::vector<corpus::ErrorOp> alignment_to_error_ops(const Alignment& a, const std::vector<TokenId>& predicted) {
  std::vector<corpus::ErrorOp> ops;
  int last = -1;
  for (const auto& op : a.ops) {
    switch (op.kind) {
      case OpKind::match:
        last = static_cast<int>(*op.canonical_index);
        break;
      case OpKind::substitution:
        last = static_cast<int>(*op.canonical_index);
        ops.push_back({corpus::ErrorKind::substitution, last, predicted[*op.predicted_index]});
        break;
      case OpKind::deletion:
        last = static_cast<int>(*op.canonical_index);
        ops.push_back({corpus::ErrorKind::deletion, last, std::nullopt});
        break;
      case OpKind::insertion:
        ops.push_back({corpus::ErrorKind::addition, last, predicted[*op.predicted_index]});
        break;
    }
  }
  return ops;
}

// ---------------------------------------------------------------------------
// Word-level reports

enum class SeverityBin { none, minor, moderate, severe };

constexpr std::string_view to_string(SeverityBin b) {
  switch (b) {
    case SeverityBin::none: return "none";
    case SeverityBin::minor: return "minor";
    case SeverityBin::moderate: return "moderate";
    case SeverityBin::severe: return "severe";
  }
  return "?";
}

struct SeverityBins {
  double moderate = 0.4;
  double severe = 0.75;
};

inline SeverityBin bin_severity(double s, bool mispronounced, const SeverityBins& bins = {}) {
  if (!mispronounced) return SeverityBin::none;
  if (s >= bins.severe) return SeverityBin::severe;
  if (s >= bins.moderate) return SeverityBin::moderate;
  return SeverityBin::minor;
}

struct PhonemePair {
  std::optional<TokenId> expected;  // none for an insertion
  std::optional<TokenId> produced;  // none for a deletion
  bool operator==(const PhonemePair&) const = default;
};

struct WordErrorReport {
  std::size_t word_index = 0;
  bool mispronounced = false;
  double severity = 0.0;
  SeverityBin severity_bin = SeverityBin::none;
  std::vector<AlignmentOp> offending_ops;
  std::vector<PhonemePair> pairs;
};

using WordSpan = PhonemeSequence::WordSpan;

/// Flags each canonical word touched by a non-match op. Insertions belong to
/// the nearest op carrying a canonical index (ties go left). Severity per
/// offending op is 1 - posterior of the canonical phoneme on the predicted
/// frame when a recognizer output is given (a deletion has no frame, so 1),
/// else the op cost.
inline std::vector<WordErrorReport> detect_word_errors(const Alignment& alignment,
                                                       const std::vector<TokenId>& canonical,
                                                       const std::vector<WordSpan>& spans,
                                                       const std::vector<TokenId>& predicted,
                                                       const RecognizerOutput* rec = nullptr,
                                                       const SeverityBins& bins = {}) {
  std::size_t expect = 0;
  for (const auto& s : spans) {
    if (s.start != expect || s.end <= s.start)
      throw Error(ErrorCode::InconsistentInput, "word spans do not partition the canonical positions");
    expect = s.end;
  }
  if (expect != canonical.size())
    throw Error(ErrorCode::InconsistentInput, "word spans cover " + std::to_string(expect) + " of " +
                                                  std::to_string(canonical.size()) + " positions");
  std::size_t next_c = 0, next_p = 0;
  for (const auto& op : alignment.ops) {
    const bool wants_c = op.kind != OpKind::insertion, wants_p = op.kind != OpKind::deletion;
    if (wants_c != op.canonical_index.has_value() || wants_p != op.predicted_index.has_value())
      throw Error(ErrorCode::InconsistentInput, "alignment op carries the wrong indices");
    if (wants_c && *op.canonical_index != next_c++) throw Error(ErrorCode::InconsistentInput, "alignment skips canonical positions");
    if (wants_p && *op.predicted_index != next_p++) throw Error(ErrorCode::InconsistentInput, "alignment skips predicted positions");
    if (op.kind == OpKind::match && canonical[*op.canonical_index] != predicted[*op.predicted_index])
      throw Error(ErrorCode::InconsistentInput, "match op pairs different phonemes");
  }
  if (next_c != canonical.size() || next_p != predicted.size())
    throw Error(ErrorCode::InconsistentInput, "alignment does not cover both sequences");
  if (rec && rec->posteriors.size() != predicted.size())
    throw Error(ErrorCode::InconsistentInput, "recognizer output does not match the predicted sequence");

  std::vector<std::size_t> word_of(canonical.size());
  for (std::size_t w = 0; w < spans.size(); ++w)
    for (auto i = spans[w].start; i < spans[w].end; ++i) word_of[i] = w;

  std::vector<WordErrorReport> reports(spans.size());
  for (std::size_t w = 0; w < spans.size(); ++w) reports[w].word_index = w;

  const auto& ops = alignment.ops;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const auto& op = ops[k];
    if (op.kind == OpKind::match) continue;
    std::size_t pos = 0;
    if (op.canonical_index) {
      pos = *op.canonical_index;
    } else {
      std::optional<std::size_t> left, right;
      std::size_t dl = 0, dr = 0;
      for (std::size_t b = k; b-- > 0;)
        if (ops[b].canonical_index) {
          left = ops[b].canonical_index;
          dl = k - b;
          break;
        }
      for (std::size_t f = k + 1; f < ops.size(); ++f)
        if (ops[f].canonical_index) {
          right = ops[f].canonical_index;
          dr = f - k;
          break;
        }
      if (!left && !right) continue;  // empty canonical: no word to blame
      pos = (left && (!right || dl <= dr)) ? *left : *right;
    }
    double sev = op.cost;  // default costs already lie in [0.5, 1]
    if (rec) {
      sev = op.predicted_index
                ? 1.0 - rec->posteriors[*op.predicted_index][static_cast<std::size_t>(canonical[pos])]
                : 1.0;
    }
    sev = std::clamp(sev, 0.0, 1.0);
    auto& r = reports[word_of[pos]];
    r.mispronounced = true;
    r.severity = std::max(r.severity, sev);
    r.offending_ops.push_back(op);
    PhonemePair pair;
    if (op.canonical_index) pair.expected = canonical[*op.canonical_index];
    if (op.predicted_index) pair.produced = predicted[*op.predicted_index];
    r.pairs.push_back(pair);
  }
  for (auto& r : reports) r.severity_bin = bin_severity(r.severity, r.mispronounced, bins);
  return reports;
}

inline json to_json(const WordErrorReport& r) {
  json ops = json::array();
  for (const auto& op : r.offending_ops) ops.push_back(to_json(op));
  json pairs = json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"expected", p.expected ? json(*p.expected) : json(nullptr)},
                     {"produced", p.produced ? json(*p.produced) : json(nullptr)}});
  return {{"word_index", r.word_index},        {"mispronounced", r.mispronounced},
          {"severity", r.severity},            {"severity_bin", to_string(r.severity_bin)},
          {"offending_ops", std::move(ops)},   {"pairs", std::move(pairs)}};
}

inline json to_json(const std::vector<WordErrorReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

inline std::vector<bool> word_flags(const std::vector<WordErrorReport>& reports) {
  std::vector<bool> flags;
  for (const auto& r : reports) flags.push_back(r.mispronounced);
  return flags;
}

struct Analysis {
  Alignment alignment;
  std::vector<WordErrorReport> reports;
};

/// Align + detect in one step; the service and the CLI both go through here.
inline Analysis analyze(const PhonemeSequence& canonical, const PhonemeSequence& predicted,
                        const RecognizerOutput* rec = nullptr, const Aligner* aligner = nullptr,
                        const SeverityBins& bins = {}) {
  static const Aligner default_aligner;
  const auto& al = aligner ? *aligner : default_aligner;
  const auto c = canonical.phonemes(), p = predicted.phonemes();
  Analysis a;
  a.alignment = al.align(c, p);
  a.reports = detect_word_errors(a.alignment, c, canonical.word_spans(), p, rec, bins);
  return a;
}

inline json analysis_json(const Analysis& a) {
  json ops = json::array();
  for (const auto& op : a.alignment.ops) ops.push_back(to_json(op));
  return {{"alignment", {{"ops", std::move(ops)}, {"total_cost", a.alignment.total_cost}}},
          {"reports", to_json(a.reports)}};
}

/// Phoneme error rate: edit ops over canonical phonemes, summed over
/// utterances (0 when there are no canonical phonemes).
inline double phoneme_error_rate(const std::vector<Alignment>& alignments) {
  std::size_t edits = 0, canon = 0;
  for (const auto& a : alignments) {
    edits += a.edit_count();
    for (const auto& op : a.ops) canon += op.canonical_index.has_value();
  }
  return stats::safe_ratio(static_cast<double>(edits), static_cast<double>(canon));
}

// ---------------------------------------------------------------------------
// Recognizers

/// Stand-in recognizer: emits the corrupted sequence, confusing each phoneme
/// again with probability 1 - fidelity. The emitted token gets posterior
/// mass in [0.75, 0.99]; the token it replaced (when known) takes a share of
/// the rest.
inline RecognizerOutput mock_recognize(const corpus::UtterancePair& pair, double fidelity, std::uint64_t seed,
                                       const corpus::ConfusionTable& table) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0))
    throw Error(ErrorCode::InvalidProbability, "fidelity " + std::to_string(fidelity) + " not in [0, 1]");
  // Origin of each corrupted phoneme: the canonical token it replaced, if any.
  std::vector<std::optional<TokenId>> origin;
  {
    const auto canon = pair.canonical.phonemes();
    std::vector<const corpus::ErrorOp*> at(canon.size(), nullptr);
    for (const auto& op : pair.ops)
      if (op.canonical_index >= 0 && static_cast<std::size_t>(op.canonical_index) < canon.size())
        at[static_cast<std::size_t>(op.canonical_index)] = &op;
    for (const auto& op : pair.ops)
      if (op.kind == corpus::ErrorKind::addition && op.canonical_index < 0) origin.push_back(std::nullopt);
    for (std::size_t i = 0; i < canon.size(); ++i) {
      const auto* op = at[i];
      if (!op) origin.push_back(std::nullopt);
      else if (op->kind == corpus::ErrorKind::substitution) origin.push_back(canon[i]);
      else if (op->kind == corpus::ErrorKind::addition) {
        origin.push_back(std::nullopt);
        origin.push_back(std::nullopt);
      }
    }
  }
  CounterRng rng(seed);
  RecognizerOutput out;
  std::vector<TokenId> tokens;
  std::size_t k = 0;
  for (auto t : pair.corrupted.tokens()) {
    if (!is_phoneme_token(t)) {
      tokens.push_back(t);
      continue;
    }
    TokenId runner = k < origin.size() ? origin[k].value_or(-1) : -1;
    ++k;
    TokenId emitted = t;
    if (rng.bernoulli(1.0 - fidelity)) {
      auto cands = table.confusable(t);
      if (cands.empty())
        for (TokenId c = 0; c < kNumPhonemes; ++c)
          if (c != t) cands.push_back(c);
      emitted = cands[rng.below(cands.size())];
      runner = t;
    }
    if (runner < 0) {
      const auto& cands = table.confusable(emitted);
      runner = cands.empty() ? (emitted + 1) % kNumPhonemes : cands[rng.below(cands.size())];
    }
    const TokenId second = runner;
    std::array<long, kNumTokens> units{};
    const long peak = 7500 + static_cast<long>(rng.below(2401));
    const long rest = 10000 - peak;
    const long runner_units = std::lround(static_cast<double>(rest) * rng.uniform(0.3, 0.9));
    const long spread = rest - runner_units;
    units[static_cast<std::size_t>(emitted)] = peak;
    units[static_cast<std::size_t>(second)] = runner_units;
    const long others = kNumTokens - 2;
    for (TokenId c = 0, extra = 0; c < kNumTokens; ++c) {
      if (c == emitted || c == second) continue;
      units[static_cast<std::size_t>(c)] = spread / others + (extra++ < spread % others ? 1 : 0);
    }
    tokens.push_back(emitted);
    out.posteriors.push_back(posterior_from_units(units));
  }
  out.phonemes = PhonemeSequence::from_tokens(std::move(tokens));
  return out;
}

inline RecognizerOutput mock_recognize(const corpus::UtterancePair& pair, double fidelity, std::uint64_t seed) {
  static const corpus::ConfusionTable table(PhonemeInventory::builtin());
  return mock_recognize(pair, fidelity, seed, table);
}

class Recognizer {
 public:
  virtual ~Recognizer() = default;
  virtual RecognizerOutput recognize(const audio::AudioBuffer& audio) = 0;
};

/// Decodes the tone code written by the stub synthesizer: one slot per token
/// after the leading silence; silent slots are word breaks.
class ToneRecognizer final : public Recognizer {
 public:
  RecognizerOutput recognize(const audio::AudioBuffer& in) override {
    const auto b = in.sample_rate == audio::kCanonicalSampleRate ? in : audio::resample(in, audio::kCanonicalSampleRate);
    const auto rate = b.sample_rate;
    const auto edge = tone::edge_samples(rate), slot = tone::slot_samples(rate);
    if (b.samples.size() < 2 * edge + slot)
      throw Error(ErrorCode::RecognizerUnavailable, "audio too short for the tone decoder");
    const std::size_t n_slots = (b.samples.size() - 2 * edge + slot / 2) / slot;
    const std::size_t guard = slot / 5;
    std::vector<TokenId> tokens;
    RecognizerOutput out;
    for (std::size_t s = 0; s < n_slots; ++s) {
      const auto begin = edge + s * slot + guard;
      const auto len = std::min(slot - 2 * guard, b.samples.size() - std::min(b.samples.size(), begin));
      if (len == 0) break;
      const auto* x = b.samples.data() + begin;
      double energy = 0.0;
      for (std::size_t i = 0; i < len; ++i) energy += static_cast<double>(x[i]) * x[i];
      if (energy / static_cast<double>(len) < kSilenceMeanSquare) {
        if (!tokens.empty() && tokens.back() != kEow) tokens.push_back(kEow);
        continue;
      }
      Posterior scores{};
      TokenId best = 0;
      for (TokenId t = 0; t < kNumPhonemes; ++t) {
        scores[static_cast<std::size_t>(t)] = tone::tone_power(x, len, tone::frequency(t), rate);
        if (scores[static_cast<std::size_t>(t)] > scores[static_cast<std::size_t>(best)]) best = t;
      }
      tokens.push_back(best);
      out.posteriors.push_back(posterior_from_scores(scores, best));
    }
    while (!tokens.empty() && tokens.back() == kEow) tokens.pop_back();
    tokens.push_back(kEos);
    out.phonemes = PhonemeSequence::from_tokens(std::move(tokens));
    return out;
  }

 private:
  static constexpr double kSilenceMeanSquare = 1.0e4;  // ~100 LSB RMS
};

/// POSTs WAV bytes to an external recognizer returning one RecognizerOutput
/// JSON object.
class HttpRecognizer final : public Recognizer {
 public:
  explicit HttpRecognizer(std::string url, int timeout_seconds = 30) : timeout_(timeout_seconds) {
    const auto scheme_end = url.find("://");
    const auto path_start = url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    base_ = path_start == std::string::npos ? url : url.substr(0, path_start);
    path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
  }

  RecognizerOutput recognize(const audio::AudioBuffer& b) override {
    httplib::Client cli(base_);
    cli.set_connection_timeout(timeout_);
    cli.set_read_timeout(timeout_);
    auto res = cli.Post(path_, audio::serialize_wav(b), "audio/wav");
    if (!res) throw Error(ErrorCode::RecognizerUnavailable, "no response from " + base_ + path_);
    if (res->status != 200) throw Error(ErrorCode::RecognizerUnavailable, "recognizer returned HTTP " + std::to_string(res->status));
    try {
      return recognizer_output_from_json(json::parse(res->body));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::RecognizerUnavailable, std::string("recognizer sent invalid JSON: ") + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::RecognizerUnavailable, std::string("recognizer sent invalid output: ") + e.what());
    }
  }

 private:
  std::string base_;
  std::string path_;
  int timeout_;
};

// ---------------------------------------------------------------------------
// Batch detection over a manifest

struct BatchOptions {
  double fidelity = 1.0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  Recognizer* recognizer = nullptr;  // audio path; mock over phonemes when null
  std::string manifest_dir;          // base for audio paths
  SeverityBins bins;
};

struct UtteranceResult {
  std::size_t row = 0;
  RecognizerOutput recognized;
  Analysis analysis;
  std::vector<bool> gold;
};

struct BatchResult {
  std::vector<UtteranceResult> utterances;
  stats::Metrics metrics;
  double phoneme_error_rate = 0.0;
};

inline BatchResult detect_manifest(const corpus::CorpusManifest& m, const BatchOptions& opt) {
  if (m.entries.empty()) throw Error(ErrorCode::MalformedManifest, "manifest has no entries");
  static const corpus::ConfusionTable table(PhonemeInventory::builtin());
  static const Aligner aligner;
  BatchResult out;
  out.utterances.resize(m.entries.size());
  parallel_for(m.entries.size(), opt.jobs, [&](std::size_t row) {
    const auto& e = m.entries[row];
    auto& u = out.utterances[row];
    u.row = row;
    if (opt.recognizer) {
      if (!e.audio_paths) throw Error(ErrorCode::MalformedManifest, "row " + std::to_string(row) + " has no audio");
      const auto path = (std::filesystem::path(opt.manifest_dir) / e.audio_paths->mispronounced).string();
      u.recognized = opt.recognizer->recognize(audio::read_wav(path));
    } else {
      u.recognized = mock_recognize(e, opt.fidelity, derive_seed(opt.seed, row), table);
    }
    u.analysis = analyze(e.canonical, u.recognized.phonemes, &u.recognized, &aligner, opt.bins);
    u.gold = corpus::word_flags(e.canonical, e.error_vector);
  });
  stats::ConfusionCounts counts;
  std::vector<Alignment> alignments;
  for (const auto& u : out.utterances) {
    counts += stats::count_flags(u.gold, word_flags(u.analysis.reports));
    alignments.push_back(u.analysis.alignment);
  }
  out.metrics = stats::metrics_from_counts(counts);
  out.phoneme_error_rate = phoneme_error_rate(alignments);
  return out;
}

inline json to_json(const BatchResult& r, const corpus::CorpusManifest& m) {
  json utts = json::array();
  for (const auto& u : r.utterances) {
    json j = analysis_json(u.analysis);
    j["row"] = u.row;
    j["sentence_id"] = m.entries[u.row].sentence_id;
    j["predicted"] = u.recognized.phonemes.tokens();
    utts.push_back(std::move(j));
  }
  auto metrics = stats::to_json(r.metrics);
  metrics["phoneme_error_rate"] = r.phoneme_error_rate;
  return {{"metrics", metrics}, {"utterances", std::move(utts)}};
}

}  // namespace capt::detect
