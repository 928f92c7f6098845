#pragma once

// Devanagari grapheme-to-phoneme conversion.
//
// Text is segmented into aksharas (consonant clusters joined by virama, plus
// an optional vowel sign and nasal/visarga modifier), each akshara is mapped
// through the inventory's grapheme table, and inherent schwas are then pruned
// by the final + medial schwa-deletion rule.

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "capt/error.hpp"
#include "capt/phoneme.hpp"
#include "capt/text.hpp"

namespace capt::g2p {

namespace cp {
inline constexpr char32_t kCandrabindu = 0x0901;
inline constexpr char32_t kAnusvara = 0x0902;
inline constexpr char32_t kVisarga = 0x0903;
inline constexpr char32_t kNukta = 0x093C;
inline constexpr char32_t kAvagraha = 0x093D;
inline constexpr char32_t kVirama = 0x094D;
inline constexpr char32_t kDanda = 0x0964;
inline constexpr char32_t kDoubleDanda = 0x0965;
inline constexpr char32_t kVocalicR = 0x090B;
inline constexpr char32_t kVocalicRSign = 0x0943;
inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;

constexpr bool is_consonant(char32_t c) { return (c >= 0x0915 && c <= 0x0939) || (c >= 0x0958 && c <= 0x095F); }
constexpr bool is_independent_vowel(char32_t c) { return (c >= 0x0904 && c <= 0x0914) || c == 0x0960 || c == 0x0961; }
constexpr bool is_vowel_sign(char32_t c) {
  return (c >= 0x093E && c <= 0x094C) || c == 0x093A || c == 0x093B || c == 0x094E || c == 0x094F ||
         c == 0x0962 || c == 0x0963 || (c >= 0x0955 && c <= 0x0957);
}
constexpr bool is_modifier(char32_t c) { return c == kCandrabindu || c == kAnusvara || c == kVisarga; }
constexpr bool is_digit(char32_t c) { return (c >= 0x0966 && c <= 0x096F) || (c >= U'0' && c <= U'9'); }
constexpr bool is_space(char32_t c) { return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == 0x00A0; }
constexpr bool is_punctuation(char32_t c) {
  switch (c) {
    case U'.': case U',': case U';': case U':': case U'!': case U'?': case U'"': case U'\'':
    case U'(': case U')': case U'-': case kDanda: case kDoubleDanda: case kAvagraha: case 0x0970:
    case 0x2018: case 0x2019: case 0x201C: case 0x201D: case 0x2013: case 0x2014: case 0x2026:
      return true;
    default:
      return false;
  }
}

/// Precomposed nukta letters (U+0958..U+095F) decompose to base + nukta.
constexpr char32_t nukta_base(char32_t c) {
  constexpr char32_t bases[] = {0x0915, 0x0916, 0x0917, 0x091C, 0x0921, 0x0922, 0x092B, 0x092F};
  return (c >= 0x0958 && c <= 0x095F) ? bases[c - 0x0958] : c;
}
}  // namespace cp

enum class TokenKind { consonant_cluster, independent_vowel, digit, punctuation, space };
enum class VowelSlot { none, inherent, sign, independent };
enum class Modifier { none, anusvara, chandrabindu, visarga };

constexpr std::string_view to_string(TokenKind k) {
  switch (k) {
    case TokenKind::consonant_cluster: return "consonant_cluster";
    case TokenKind::independent_vowel: return "independent_vowel";
    case TokenKind::digit: return "digit";
    case TokenKind::punctuation: return "punctuation";
    case TokenKind::space: return "space";
  }
  return "?";
}

struct ClusterConsonant {
  std::string grapheme;  // base letter, plus U+093C when nukta
  bool nukta = false;
  bool operator==(const ClusterConsonant&) const = default;
};

struct AksharaToken {
  TokenKind kind = TokenKind::space;
  std::vector<ClusterConsonant> consonants;
  VowelSlot vowel_slot = VowelSlot::none;
  std::string vowel;  // matra or independent vowel grapheme
  Modifier modifier = Modifier::none;
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;
};

/// Segments Devanagari text. Spans cover the input contiguously.
inline std::vector<AksharaToken> tokenize_aksharas(std::string_view text) {
  std::optional<std::size_t> bad;
  const auto cps = text::decode_utf8(text, &bad);
  if (bad) throw Error(ErrorCode::UnsupportedCharacter, "invalid UTF-8 at byte offset " + std::to_string(*bad));

  std::vector<AksharaToken> out;
  std::size_t i = 0;
  const std::size_t n = cps.size();
  auto unsupported = [&](std::size_t k) {
    return Error(ErrorCode::UnsupportedCharacter,
                 "U+" + [&] {
                   char buf[16];
                   std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cps[k].value));
                   return std::string(buf);
                 }() + " at byte offset " + std::to_string(cps[k].byte_start));
  };
  auto peek = [&](std::size_t k) -> char32_t { return k < n ? cps[k].value : 0; };
  auto read_consonant = [&](std::size_t& k) {
    ClusterConsonant c;
    const auto base = cp::nukta_base(cps[k].value);
    c.nukta = base != cps[k].value;
    ++k;
    if (peek(k) == cp::kNukta) {
      c.nukta = true;
      ++k;
    }
    c.grapheme = text::encode_utf8(base);
    if (c.nukta) c.grapheme += text::encode_utf8(cp::kNukta);
    return c;
  };
  auto read_modifier = [&](std::size_t& k, AksharaToken& tok) {
    const auto m = peek(k);
    if (m == cp::kCandrabindu) tok.modifier = Modifier::chandrabindu;
    else if (m == cp::kAnusvara) tok.modifier = Modifier::anusvara;
    else if (m == cp::kVisarga) tok.modifier = Modifier::visarga;
    else return;
    ++k;
  };
  auto skip_joiners = [&](std::size_t& k) {
    while (peek(k) == cp::kZwj || peek(k) == cp::kZwnj) ++k;
  };

  while (i < n) {
    const auto c = cps[i].value;
    AksharaToken tok;
    tok.byte_start = cps[i].byte_start;
    std::size_t k = i;
    if (cp::is_consonant(c)) {
      tok.kind = TokenKind::consonant_cluster;
      tok.consonants.push_back(read_consonant(k));
      tok.vowel_slot = VowelSlot::inherent;
      while (peek(k) == cp::kVirama) {
        std::size_t after = k + 1;
        skip_joiners(after);
        if (after < n && cp::is_consonant(cps[after].value)) {
          k = after;
          tok.consonants.push_back(read_consonant(k));
        } else {
          k = after;  // explicit halant: no vowel
          tok.vowel_slot = VowelSlot::none;
          break;
        }
      }
      if (tok.vowel_slot == VowelSlot::inherent && k < n && cp::is_vowel_sign(cps[k].value)) {
        tok.vowel_slot = VowelSlot::sign;
        tok.vowel = text::encode_utf8(cps[k].value);
        ++k;
      }
      read_modifier(k, tok);
      skip_joiners(k);
    } else if (cp::is_independent_vowel(c)) {
      tok.kind = TokenKind::independent_vowel;
      tok.vowel_slot = VowelSlot::independent;
      tok.vowel = text::encode_utf8(c);
      ++k;
      read_modifier(k, tok);
    } else if (cp::is_digit(c)) {
      tok.kind = TokenKind::digit;
      while (k < n && cp::is_digit(cps[k].value)) ++k;
    } else if (cp::is_space(c)) {
      tok.kind = TokenKind::space;
      while (k < n && cp::is_space(cps[k].value)) ++k;
    } else if (cp::is_punctuation(c)) {
      tok.kind = TokenKind::punctuation;
      ++k;
    } else {
      throw unsupported(i);
    }
    tok.byte_end = k < n ? cps[k].byte_start : text.size();
    out.push_back(std::move(tok));
    i = k;
  }
  return out;
}

enum class Rule { inherent_schwa, matra, schwa_deleted, nasal_assimilation, conjunct, nukta, direct };

constexpr std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::inherent_schwa: return "inherent_schwa";
    case Rule::matra: return "matra";
    case Rule::schwa_deleted: return "schwa_deleted";
    case Rule::nasal_assimilation: return "nasal_assimilation";
    case Rule::conjunct: return "conjunct";
    case Rule::nukta: return "nukta";
    case Rule::direct: return "direct";
  }
  return "?";
}

struct TraceRecord {
  std::size_t akshara = 0;  // index into tokenize_aksharas output
  Rule rule = Rule::direct;
  bool operator==(const TraceRecord&) const = default;
};

struct G2PResult {
  PhonemeSequence sequence;
  std::vector<TraceRecord> trace;  // one per phoneme, in sequence order
};

/// One position of the per-word grapheme/phoneme lattice produced by the
/// matra/inherent-schwa pass.
struct Segment {
  TokenId phoneme = 0;
  std::size_t akshara = 0;
  Rule rule = Rule::direct;
  bool vowel = false;
  bool deletable = false;  // an unmodified inherent schwa
};

using WordLattice = std::vector<Segment>;

/// Deletes the word-final inherent schwa of polysyllabic words, then, right
/// to left, any medial inherent schwa in a V C _ C V context. The consonant
/// that loses its schwa is re-tagged `schwa_deleted`.
inline WordLattice apply_schwa_deletion(WordLattice word) {
  auto vowels = std::count_if(word.begin(), word.end(), [](const Segment& s) { return s.vowel; });
  auto drop = [&](std::size_t i) {
    if (i > 0 && !word[i - 1].vowel && word[i - 1].rule == Rule::direct) word[i - 1].rule = Rule::schwa_deleted;
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(i));
    --vowels;
  };
  if (!word.empty() && word.back().deletable && vowels > 1) drop(word.size() - 1);
  if (word.size() < 5) return word;
  for (std::size_t i = word.size() - 3; i >= 2; --i) {
    const bool context = word[i].deletable && !word[i - 1].vowel && word[i - 2].vowel && !word[i + 1].vowel &&
                         word[i + 2].vowel;
    if (context) drop(i);
    if (i == 2) break;
  }
  return word;
}

/// Word-level overrides, consulted before the rules.
class ExceptionsLexicon {
 public:
  static ExceptionsLexicon parse(std::string_view content, const PhonemeInventory& inv) {
    ExceptionsLexicon lex;
    text::for_each_data_line(content, [&](std::string_view line, std::size_t line_no) {
      const auto cols = text::split(line, '\t');
      if (cols.size() != 2)
        throw Error(ErrorCode::MalformedEntry, "lexicon line " + std::to_string(line_no) + ": expected word<TAB>ipa");
      std::vector<TokenId> ids;
      for (const auto& sym : text::split_ws(cols[1])) ids.push_back(inv.id_of(sym));
      if (ids.empty()) throw Error(ErrorCode::MalformedEntry, "lexicon line " + std::to_string(line_no) + ": no ipa");
      lex.entries_[std::string(text::trim(cols[0]))] = std::move(ids);
    });
    return lex;
  }
  static ExceptionsLexicon load_file(const std::string& path, const PhonemeInventory& inv) {
    return parse(text::read_file(path), inv);
  }

  const std::vector<TokenId>* find(std::string_view word) const {
    auto it = entries_.find(std::string(word));
    return it == entries_.end() ? nullptr : &it->second;
  }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<std::string, std::vector<TokenId>> entries_;
};

struct Options {
  bool schwa_deletion = true;
  const PhonemeInventory* inventory = nullptr;  // built-in when null
  const ExceptionsLexicon* lexicon = nullptr;
};

namespace detail {

inline TokenId lookup(const PhonemeInventory& inv, const std::string& g) {
  if (auto id = inv.find_grapheme(g)) return *id;
  throw Error(ErrorCode::UnknownGrapheme, g);
}

/// The nasalized counterpart of a vowel; the closest nasalized vowel when the
/// inventory has no exact counterpart.
inline TokenId nasalize(const PhonemeInventory& inv, TokenId vowel) {
  auto f = inv.at(vowel).features;
  if (f.nasalized) return vowel;
  f.nasalized = true;
  if (auto id = inv.find_features(f)) return *id;
  TokenId best = vowel;
  double best_d = 2.0;
  for (const auto& p : inv.phonemes()) {
    if (!p.features.nasalized || !p.features.is_vowel_like()) continue;
    const double d = feature_distance(inv.at(vowel), p);
    if (d < best_d) {
      best_d = d;
      best = p.id;
    }
  }
  return best;
}

inline std::optional<TokenId> homorganic_nasal(const PhonemeInventory& inv, TokenId next) {
  const auto& nf = inv.at(next).features;
  if (!nf.is_stop_like()) return std::nullopt;
  for (const auto& p : inv.phonemes())
    if (p.features.manner == Manner::nasal && p.features.place == nf.place) return p.id;
  return std::nullopt;
}

inline WordLattice build_lattice(const PhonemeInventory& inv, const std::vector<AksharaToken>& tokens,
                                 std::size_t first, std::size_t last) {
  WordLattice word;
  const auto r_id = inv.find_ipa("r");
  const auto i_id = inv.find_ipa("ɪ");
  const auto h_id = inv.find_grapheme("ह");
  const std::string vocalic_r = text::encode_utf8(cp::kVocalicR);
  const std::string vocalic_r_sign = text::encode_utf8(cp::kVocalicRSign);

  for (std::size_t a = first; a < last; ++a) {
    const auto& tok = tokens[a];
    for (std::size_t j = 0; j < tok.consonants.size(); ++j) {
      const auto& c = tok.consonants[j];
      Rule rule = c.nukta ? Rule::nukta : (j + 1 < tok.consonants.size() ? Rule::conjunct : Rule::direct);
      word.push_back({lookup(inv, c.grapheme), a, rule, false, false});
    }
    std::optional<std::size_t> vowel_pos;
    switch (tok.vowel_slot) {
      case VowelSlot::none:
        break;
      case VowelSlot::inherent:
        vowel_pos = word.size();
        word.push_back({inv.id_of("ə"), a, Rule::inherent_schwa, true, true});
        break;
      case VowelSlot::sign:
      case VowelSlot::independent: {
        const Rule rule = tok.vowel_slot == VowelSlot::sign ? Rule::matra : Rule::direct;
        if (tok.vowel == vocalic_r || tok.vowel == vocalic_r_sign) {
          if (!r_id || !i_id) throw Error(ErrorCode::UnknownGrapheme, tok.vowel);
          word.push_back({*r_id, a, rule, false, false});
          vowel_pos = word.size();
          word.push_back({*i_id, a, rule, true, false});
        } else {
          vowel_pos = word.size();
          word.push_back({lookup(inv, tok.vowel), a, rule, true, false});
        }
        break;
      }
    }
    switch (tok.modifier) {
      case Modifier::none:
        break;
      case Modifier::chandrabindu:
        if (vowel_pos) {
          auto& v = word[*vowel_pos];
          v.phoneme = nasalize(inv, v.phoneme);
          v.deletable = false;
        }
        break;
      case Modifier::anusvara: {
        std::optional<TokenId> nasal;
        if (a + 1 < last && !tokens[a + 1].consonants.empty())
          nasal = homorganic_nasal(inv, lookup(inv, tokens[a + 1].consonants.front().grapheme));
        if (nasal) {
          if (vowel_pos) word[*vowel_pos].deletable = false;
          word.push_back({*nasal, a, Rule::nasal_assimilation, false, false});
        } else if (vowel_pos) {
          auto& v = word[*vowel_pos];
          v.phoneme = nasalize(inv, v.phoneme);
          v.rule = Rule::nasal_assimilation;
          v.deletable = false;
        }
        break;
      }
      case Modifier::visarga:
        if (!h_id) throw Error(ErrorCode::UnknownGrapheme, "ः");
        if (vowel_pos) word[*vowel_pos].deletable = false;
        word.push_back({*h_id, a, Rule::direct, false, false});
        break;
    }
  }
  return word;
}

}  // namespace detail

/// Converts Devanagari text to a canonical phoneme sequence. Whitespace,
/// punctuation, danda and digits delimit words and produce no phonemes.
inline G2PResult to_phonemes(std::string_view input, const Options& opts = {}) {
  const auto& inv = opts.inventory ? *opts.inventory : PhonemeInventory::builtin();
  const auto tokens = tokenize_aksharas(input);

  std::vector<std::vector<TokenId>> words;
  std::vector<TraceRecord> trace;
  std::size_t a = 0;
  while (a < tokens.size()) {
    const auto is_letter = [&](std::size_t k) {
      return tokens[k].kind == TokenKind::consonant_cluster || tokens[k].kind == TokenKind::independent_vowel;
    };
    if (!is_letter(a)) {
      ++a;
      continue;
    }
    std::size_t end = a;
    while (end < tokens.size() && is_letter(end)) ++end;

    const auto word_text = input.substr(tokens[a].byte_start, tokens[end - 1].byte_end - tokens[a].byte_start);
    const std::vector<TokenId>* override_ids = opts.lexicon ? opts.lexicon->find(word_text) : nullptr;
    auto& ids = words.emplace_back();
    if (override_ids) {
      ids = *override_ids;
      for (std::size_t k = 0; k < ids.size(); ++k) trace.push_back({a, Rule::direct});
    } else {
      auto lattice = detail::build_lattice(inv, tokens, a, end);
      if (opts.schwa_deletion) lattice = apply_schwa_deletion(std::move(lattice));
      for (const auto& s : lattice) {
        ids.push_back(s.phoneme);
        trace.push_back({s.akshara, s.rule});
      }
    }
    if (ids.empty()) words.pop_back();
    a = end;
  }
  return {PhonemeSequence::from_words(words), std::move(trace)};
}

/// Renders a phoneme sequence back into Devanagari (consonant + vowel sign,
/// virama between adjacent consonants). Used to build text prompts for a
/// speech synthesizer; the rendering is approximate for phonemes with no
/// written form, which fall back to the nearest phoneme that has one.
inline std::string to_devanagari(const PhonemeInventory& inv, const PhonemeSequence& seq) {
  const auto schwa = inv.find_ipa("ə");
  const std::string virama = text::encode_utf8(cp::kVirama);
  const std::string candrabindu = text::encode_utf8(cp::kCandrabindu);
  auto written = [&](TokenId id) -> const Phoneme& {
    const auto& p = inv.at(id);
    if (!p.devanagari_forms.empty()) return p;
    const Phoneme* best = nullptr;
    double best_d = 2.0;
    for (const auto& q : inv.phonemes()) {
      if (q.devanagari_forms.empty()) continue;
      const double d = feature_distance(p, q);
      if (d < best_d) {
        best_d = d;
        best = &q;
      }
    }
    return best ? *best : p;
  };

  std::vector<std::string> words;
  for (const auto& w : seq.words()) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& p = written(w[i]);
      if (p.devanagari_forms.empty()) continue;
      out += p.devanagari_forms.front();
      if (p.features.is_vowel_like()) continue;
      if (i + 1 >= w.size()) break;
      const auto& next = written(w[i + 1]);
      if (!next.features.is_vowel_like()) {
        out += virama;
        continue;
      }
      ++i;
      if (schwa && next.id == *schwa) continue;
      if (next.devanagari_forms.size() > 1) {
        out += next.devanagari_forms[1];
      } else if (next.features.nasalized) {
        out += candrabindu;
      } else {
        out += virama + next.devanagari_forms.front();
      }
    }
    words.push_back(std::move(out));
  }
  return text::join(words, " ");
}

}  // namespace capt::g2p
