#pragma once

// Hindi phoneme inventory: the 67-token output space (64 phonemes plus
// end-of-word, end-of-sentence and padding), articulatory features, and the
// weighted feature distance used by alignment and error synthesis.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "capt/data/default_inventory.hpp"
#include "capt/error.hpp"
#include "capt/text.hpp"

namespace capt {

using TokenId = int;

inline constexpr int kNumPhonemes = 64;
inline constexpr TokenId kEow = 64;
inline constexpr TokenId kEos = 65;
inline constexpr TokenId kPad = 66;
inline constexpr int kNumTokens = 67;

constexpr bool is_phoneme_token(TokenId t) noexcept { return t >= 0 && t < kNumPhonemes; }

enum class Category { vowel, diphthong, consonant };
enum class Place { labial, labiodental, dental, alveolar, retroflex, palatal, velar, uvular, glottal, none };
enum class Manner { plosive, affricate, fricative, nasal, approximant, flap, vowel };
enum class Length { short_, long_, none };
enum class Height { close, near_close, close_mid, mid, open_mid, near_open, open, none };
enum class Backness { front, central, back, none };

namespace detail {

template <typename E, std::size_t N>
struct EnumNames {
  std::array<std::pair<E, std::string_view>, N> items;

  constexpr std::string_view name(E e) const {
    for (const auto& [v, n] : items)
      if (v == e) return n;
    return "?";
  }
  std::optional<E> parse(std::string_view s) const {
    for (const auto& [v, n] : items)
      if (n == s) return v;
    return std::nullopt;
  }
};

inline constexpr EnumNames<Category, 3> kCategoryNames{
    {{{Category::vowel, "vowel"}, {Category::diphthong, "diphthong"}, {Category::consonant, "consonant"}}}};
inline constexpr EnumNames<Place, 10> kPlaceNames{{{{Place::labial, "labial"},
                                                     {Place::labiodental, "labiodental"},
                                                     {Place::dental, "dental"},
                                                     {Place::alveolar, "alveolar"},
                                                     {Place::retroflex, "retroflex"},
                                                     {Place::palatal, "palatal"},
                                                     {Place::velar, "velar"},
                                                     {Place::uvular, "uvular"},
                                                     {Place::glottal, "glottal"},
                                                     {Place::none, "none"}}}};
inline constexpr EnumNames<Manner, 7> kMannerNames{{{{Manner::plosive, "plosive"},
                                                     {Manner::affricate, "affricate"},
                                                     {Manner::fricative, "fricative"},
                                                     {Manner::nasal, "nasal"},
                                                     {Manner::approximant, "approximant"},
                                                     {Manner::flap, "flap"},
                                                     {Manner::vowel, "vowel"}}}};
inline constexpr EnumNames<Length, 3> kLengthNames{
    {{{Length::short_, "short"}, {Length::long_, "long"}, {Length::none, "none"}}}};
inline constexpr EnumNames<Height, 8> kHeightNames{{{{Height::close, "close"},
                                                     {Height::near_close, "near_close"},
                                                     {Height::close_mid, "close_mid"},
                                                     {Height::mid, "mid"},
                                                     {Height::open_mid, "open_mid"},
                                                     {Height::near_open, "near_open"},
                                                     {Height::open, "open"},
                                                     {Height::none, "none"}}}};
inline constexpr EnumNames<Backness, 4> kBacknessNames{
    {{{Backness::front, "front"}, {Backness::central, "central"}, {Backness::back, "back"}, {Backness::none, "none"}}}};

}  // namespace detail

constexpr std::string_view to_string(Category v) { return detail::kCategoryNames.name(v); }
constexpr std::string_view to_string(Place v) { return detail::kPlaceNames.name(v); }
constexpr std::string_view to_string(Manner v) { return detail::kMannerNames.name(v); }
constexpr std::string_view to_string(Length v) { return detail::kLengthNames.name(v); }
constexpr std::string_view to_string(Height v) { return detail::kHeightNames.name(v); }
constexpr std::string_view to_string(Backness v) { return detail::kBacknessNames.name(v); }

struct PhonemeFeatures {
  Category category = Category::consonant;
  Place place = Place::none;
  Manner manner = Manner::vowel;
  bool voiced = false;
  bool aspirated = false;
  Length length = Length::none;
  bool nasalized = false;
  bool rounded = false;
  // Vowel quality; `none` for consonants.
  Height height = Height::none;
  Backness backness = Backness::none;

  bool operator==(const PhonemeFeatures&) const = default;

  bool is_vowel_like() const noexcept { return category != Category::consonant; }
  bool is_stop_like() const noexcept { return manner == Manner::plosive || manner == Manner::affricate; }
};

/// Individually comparable feature fields, in table order.
enum class Feature { category, place, manner, voiced, aspirated, length, nasalized, rounded, height, backness };

inline constexpr std::array<Feature, 10> kAllFeatures{Feature::category, Feature::place,     Feature::manner,
                                                      Feature::voiced,   Feature::aspirated, Feature::length,
                                                      Feature::nasalized, Feature::rounded,  Feature::height,
                                                      Feature::backness};

constexpr std::string_view to_string(Feature f) {
  switch (f) {
    case Feature::category: return "category";
    case Feature::place: return "place";
    case Feature::manner: return "manner";
    case Feature::voiced: return "voiced";
    case Feature::aspirated: return "aspirated";
    case Feature::length: return "length";
    case Feature::nasalized: return "nasalized";
    case Feature::rounded: return "rounded";
    case Feature::height: return "height";
    case Feature::backness: return "backness";
  }
  return "?";
}

inline std::string feature_value(const PhonemeFeatures& f, Feature which) {
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  switch (which) {
    case Feature::category: return std::string(to_string(f.category));
    case Feature::place: return std::string(to_string(f.place));
    case Feature::manner: return std::string(to_string(f.manner));
    case Feature::voiced: return yn(f.voiced);
    case Feature::aspirated: return yn(f.aspirated);
    case Feature::length: return std::string(to_string(f.length));
    case Feature::nasalized: return yn(f.nasalized);
    case Feature::rounded: return yn(f.rounded);
    case Feature::height: return std::string(to_string(f.height));
    case Feature::backness: return std::string(to_string(f.backness));
  }
  return {};
}

constexpr bool differs(const PhonemeFeatures& a, const PhonemeFeatures& b, Feature which) {
  switch (which) {
    case Feature::category: return a.category != b.category;
    case Feature::place: return a.place != b.place;
    case Feature::manner: return a.manner != b.manner;
    case Feature::voiced: return a.voiced != b.voiced;
    case Feature::aspirated: return a.aspirated != b.aspirated;
    case Feature::length: return a.length != b.length;
    case Feature::nasalized: return a.nasalized != b.nasalized;
    case Feature::rounded: return a.rounded != b.rounded;
    case Feature::height: return a.height != b.height;
    case Feature::backness: return a.backness != b.backness;
  }
  return false;
}

inline std::vector<Feature> differing_features(const PhonemeFeatures& a, const PhonemeFeatures& b) {
  std::vector<Feature> out;
  for (auto f : kAllFeatures)
    if (differs(a, b, f)) out.push_back(f);
  return out;
}

/// Returns an empty string when the features are coherent, otherwise the
/// violated rule.
inline std::string check_features(const PhonemeFeatures& f) {
  if (f.is_vowel_like()) {
    if (f.place != Place::none) return "vowels must have place=none";
    if (f.manner != Manner::vowel) return "vowels must have manner=vowel";
    if (f.aspirated) return "vowels cannot be aspirated";
    if (f.length == Length::none) return "vowels need a length";
    if (f.height == Height::none || f.backness == Backness::none) return "vowels need height and backness";
  } else {
    if (f.manner == Manner::vowel) return "consonants cannot have manner=vowel";
    if (f.place == Place::none) return "consonants need a place";
    if (f.aspirated && !(f.manner == Manner::plosive || f.manner == Manner::affricate || f.manner == Manner::flap))
      return "only plosives, affricates and flaps can be aspirated";
    if (f.length != Length::none) return "consonants have length=none";
    if (f.height != Height::none || f.backness != Backness::none) return "consonants have no vowel quality";
  }
  return {};
}

struct Phoneme {
  TokenId id = 0;
  std::string ipa;
  std::vector<std::string> devanagari_forms;
  PhonemeFeatures features;
};

/// Per-feature mismatch costs. The minor group (length, nasalized, rounded,
/// height, backness) shares 0.05 so any single-feature confusion costs less
/// than an unrelated substitution.
struct FeatureWeights {
  double category = 0.30;
  double place = 0.25;
  double manner = 0.20;
  double voiced = 0.10;
  double aspirated = 0.10;
  double length = 0.01;
  double nasalized = 0.01;
  double rounded = 0.01;
  double height = 0.01;
  double backness = 0.01;

  double weight(Feature f) const noexcept {
    switch (f) {
      case Feature::category: return category;
      case Feature::place: return place;
      case Feature::manner: return manner;
      case Feature::voiced: return voiced;
      case Feature::aspirated: return aspirated;
      case Feature::length: return length;
      case Feature::nasalized: return nasalized;
      case Feature::rounded: return rounded;
      case Feature::height: return height;
      case Feature::backness: return backness;
    }
    return 0.0;
  }

  void validate() const {
    double sum = 0.0;
    for (auto f : kAllFeatures) {
      if (weight(f) < 0.0) throw Error(ErrorCode::InvalidArgument, "negative feature weight");
      sum += weight(f);
    }
    if (std::abs(sum - 1.0) > 1e-9) throw Error(ErrorCode::InvalidArgument, "feature weights must sum to 1");
  }
};

/// Weighted Hamming distance over the feature fields, in [0, 1].
inline double feature_distance(const Phoneme& a, const Phoneme& b, const FeatureWeights& w = {}) {
  if (a.id == b.id) return 0.0;
  double d = 0.0;
  for (auto f : kAllFeatures)
    if (differs(a.features, b.features, f)) d += w.weight(f);
  return std::min(d, 1.0);
}

class PhonemeInventory {
 public:
  /// Parses the tab-separated inventory format.
  static PhonemeInventory parse(std::string_view content) {
    PhonemeInventory inv;
    text::for_each_data_line(content, [&](std::string_view line, std::size_t line_no) {
      inv.phonemes_.push_back(parse_line(line, line_no));
    });
    inv.finalize();
    return inv;
  }

  static PhonemeInventory load_file(const std::string& path) { return parse(text::read_file(path)); }

  /// The built-in inventory; parsed once and shared.
  static const PhonemeInventory& builtin() {
    static const PhonemeInventory inv = parse(data::kDefaultInventoryTsv);
    return inv;
  }

  std::span<const Phoneme> phonemes() const noexcept { return phonemes_; }
  std::size_t size() const noexcept { return phonemes_.size(); }
  static constexpr int token_count() noexcept { return kNumTokens; }

  const Phoneme& at(TokenId id) const {
    if (!is_phoneme_token(id)) throw Error(ErrorCode::UnknownPhoneme, "token id " + std::to_string(id));
    return phonemes_[static_cast<std::size_t>(id)];
  }

  std::optional<TokenId> find_ipa(std::string_view ipa) const {
    auto it = by_ipa_.find(std::string(ipa));
    if (it == by_ipa_.end()) return std::nullopt;
    return it->second;
  }

  TokenId id_of(std::string_view ipa) const {
    if (auto id = find_ipa(ipa)) return *id;
    throw Error(ErrorCode::UnknownPhoneme, std::string(ipa));
  }

  std::optional<TokenId> find_grapheme(std::string_view g) const {
    auto it = by_grapheme_.find(std::string(g));
    if (it == by_grapheme_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<TokenId> find_features(const PhonemeFeatures& f) const {
    for (const auto& p : phonemes_)
      if (p.features == f) return p.id;
    return std::nullopt;
  }

  std::string token_label(TokenId t) const {
    if (t == kEow) return "<eow>";
    if (t == kEos) return "<eos>";
    if (t == kPad) return "<pad>";
    return at(t).ipa;
  }

  std::vector<TokenId> of_category(Category c) const {
    std::vector<TokenId> out;
    for (const auto& p : phonemes_)
      if (p.features.category == c) out.push_back(p.id);
    return out;
  }

  /// Writes the inventory back in the file format it was parsed from.
  std::string to_tsv() const {
    std::string out =
        "# id\tipa\tdevanagari_forms\tcategory\tplace\tmanner\tvoiced\taspirated\tlength\tnasalized\trounded\theight"
        "\tbackness\n";
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    for (const auto& p : phonemes_) {
      const auto& f = p.features;
      std::vector<std::string> cols{std::to_string(p.id),
                                    p.ipa,
                                    p.devanagari_forms.empty() ? "-" : text::join(p.devanagari_forms, ","),
                                    std::string(to_string(f.category)),
                                    std::string(to_string(f.place)),
                                    std::string(to_string(f.manner)),
                                    yn(f.voiced),
                                    yn(f.aspirated),
                                    std::string(to_string(f.length)),
                                    yn(f.nasalized),
                                    yn(f.rounded),
                                    std::string(to_string(f.height)),
                                    std::string(to_string(f.backness))};
      out += text::join(cols, "\t");
      out += '\n';
    }
    return out;
  }

 private:
  static constexpr std::size_t kColumns = 13;

  static Phoneme parse_line(std::string_view line, std::size_t line_no) {
    const auto cols = text::split(line, '\t');
    const auto where = "line " + std::to_string(line_no);
    if (cols.size() != kColumns)
      throw Error(ErrorCode::MalformedEntry, where + ": expected " + std::to_string(kColumns) + " fields, got " +
                                                 std::to_string(cols.size()));
    auto field = [&](std::size_t i) -> std::string {
      auto v = std::string(text::trim(cols[i]));
      if (v.empty()) throw Error(ErrorCode::MalformedEntry, where + ": empty field " + std::to_string(i + 1));
      return v;
    };
    auto parse_enum = [&](const auto& names, std::size_t i) {
      auto v = field(i);
      auto e = names.parse(v);
      if (!e) throw Error(ErrorCode::MalformedEntry, where + ": bad value '" + v + "'");
      return *e;
    };
    auto parse_bool = [&](std::size_t i) {
      auto v = field(i);
      if (v == "yes") return true;
      if (v == "no") return false;
      throw Error(ErrorCode::MalformedEntry, where + ": expected yes/no, got '" + v + "'");
    };

    Phoneme p;
    try {
      std::size_t used = 0;
      const auto id_text = field(0);
      p.id = std::stoi(id_text, &used);
      if (used != id_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::MalformedEntry, where + ": bad id");
    }
    p.ipa = field(1);
    if (auto forms = field(2); forms != "-") p.devanagari_forms = text::split(forms, ',');
    auto& f = p.features;
    f.category = parse_enum(detail::kCategoryNames, 3);
    f.place = parse_enum(detail::kPlaceNames, 4);
    f.manner = parse_enum(detail::kMannerNames, 5);
    f.voiced = parse_bool(6);
    f.aspirated = parse_bool(7);
    f.length = parse_enum(detail::kLengthNames, 8);
    f.nasalized = parse_bool(9);
    f.rounded = parse_bool(10);
    f.height = parse_enum(detail::kHeightNames, 11);
    f.backness = parse_enum(detail::kBacknessNames, 12);
    if (auto why = check_features(f); !why.empty()) throw Error(ErrorCode::MalformedEntry, where + ": " + why);
    return p;
  }

  void finalize() {
    if (phonemes_.size() != kNumPhonemes)
      throw Error(ErrorCode::InventorySize, "expected 64 phonemes, got " + std::to_string(phonemes_.size()));
    std::sort(phonemes_.begin(), phonemes_.end(), [](const Phoneme& a, const Phoneme& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < phonemes_.size(); ++i) {
      const auto& p = phonemes_[i];
      if (i > 0 && phonemes_[i - 1].id == p.id)
        throw Error(ErrorCode::DuplicateToken, "id " + std::to_string(p.id));
      if (!is_phoneme_token(p.id)) throw Error(ErrorCode::MalformedEntry, "id out of range: " + std::to_string(p.id));
      if (!by_ipa_.emplace(p.ipa, p.id).second) throw Error(ErrorCode::DuplicateToken, "ipa " + p.ipa);
      for (const auto& g : p.devanagari_forms)
        if (!by_grapheme_.emplace(g, p.id).second) throw Error(ErrorCode::DuplicateToken, "grapheme " + g);
    }
  }

  std::vector<Phoneme> phonemes_;
  std::map<std::string, TokenId> by_ipa_;
  std::map<std::string, TokenId> by_grapheme_;
};

/// Token sequence: phonemes grouped into words by EOW marks and terminated by
/// a single EOS. PAD never appears inside a sequence.
class PhonemeSequence {
 public:
  struct WordSpan {
    std::size_t start;  // phoneme positions, half-open
    std::size_t end;
    bool operator==(const WordSpan&) const = default;
  };

  PhonemeSequence() : tokens_{kEos} {}

  static PhonemeSequence from_tokens(std::vector<TokenId> tokens) {
    if (tokens.empty() || tokens.back() != kEos)
      throw Error(ErrorCode::MalformedSequence, "sequence must end with EOS");
    bool word_open = false;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      const auto t = tokens[i];
      if (t == kEos) throw Error(ErrorCode::MalformedSequence, "EOS before end at position " + std::to_string(i));
      if (t == kPad) throw Error(ErrorCode::MalformedSequence, "PAD inside sequence at position " + std::to_string(i));
      if (t == kEow) {
        if (!word_open) throw Error(ErrorCode::MalformedSequence, "empty word at position " + std::to_string(i));
        word_open = false;
      } else if (is_phoneme_token(t)) {
        word_open = true;
      } else {
        throw Error(ErrorCode::MalformedSequence, "token out of range: " + std::to_string(t));
      }
    }
    if (tokens.size() > 1 && !word_open) throw Error(ErrorCode::MalformedSequence, "trailing EOW");
    PhonemeSequence s;
    s.tokens_ = std::move(tokens);
    return s;
  }

  /// Builds from per-word phoneme id lists; empty words are rejected.
  static PhonemeSequence from_words(const std::vector<std::vector<TokenId>>& words) {
    std::vector<TokenId> tokens;
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (w) tokens.push_back(kEow);
      tokens.insert(tokens.end(), words[w].begin(), words[w].end());
    }
    tokens.push_back(kEos);
    return from_tokens(std::move(tokens));
  }

  const std::vector<TokenId>& tokens() const noexcept { return tokens_; }

  /// Phoneme ids with EOW/EOS stripped.
  std::vector<TokenId> phonemes() const {
    std::vector<TokenId> out;
    for (auto t : tokens_)
      if (is_phoneme_token(t)) out.push_back(t);
    return out;
  }

  std::size_t phoneme_count() const {
    return static_cast<std::size_t>(std::count_if(tokens_.begin(), tokens_.end(), is_phoneme_token));
  }

  std::vector<WordSpan> word_spans() const {
    std::vector<WordSpan> spans;
    std::size_t pos = 0;
    std::size_t start = 0;
    for (auto t : tokens_) {
      if (is_phoneme_token(t)) {
        ++pos;
      } else if (pos > start) {
        spans.push_back({start, pos});
        start = pos;
      }
    }
    return spans;
  }

  std::vector<std::vector<TokenId>> words() const {
    std::vector<std::vector<TokenId>> out;
    std::vector<TokenId> cur;
    for (auto t : tokens_) {
      if (is_phoneme_token(t)) {
        cur.push_back(t);
      } else if (!cur.empty()) {
        out.push_back(std::move(cur));
        cur.clear();
      }
    }
    return out;
  }

  std::size_t word_count() const { return word_spans().size(); }

  bool operator==(const PhonemeSequence&) const = default;

 private:
  std::vector<TokenId> tokens_;
};

inline PhonemeSequence encode(const PhonemeInventory& inv, const std::vector<std::vector<std::string>>& words) {
  std::vector<std::vector<TokenId>> ids;
  ids.reserve(words.size());
  for (const auto& w : words) {
    auto& out = ids.emplace_back();
    for (const auto& ipa : w) out.push_back(inv.id_of(ipa));
  }
  return PhonemeSequence::from_words(ids);
}

inline std::vector<std::vector<std::string>> decode(const PhonemeInventory& inv, const PhonemeSequence& seq) {
  std::vector<std::vector<std::string>> out;
  for (const auto& w : seq.words()) {
    auto& o = out.emplace_back();
    for (auto id : w) o.push_back(inv.at(id).ipa);
  }
  return out;
}

/// Space-separated IPA with `|` between words, as printed by the CLI.
inline std::string format_ipa(const PhonemeInventory& inv, const PhonemeSequence& seq) {
  std::vector<std::string> words;
  for (const auto& w : decode(inv, seq)) words.push_back(text::join(w, " "));
  return text::join(words, " | ");
}

/// Parses the `format_ipa` form (also accepts words separated by `|` only).
inline PhonemeSequence parse_ipa(const PhonemeInventory& inv, std::string_view s) {
  std::vector<std::vector<std::string>> words;
  for (const auto& w : text::split(s, '|')) {
    auto syms = text::split_ws(w);
    if (!syms.empty()) words.push_back(std::move(syms));
  }
  return encode(inv, words);
}

}  // namespace capt
