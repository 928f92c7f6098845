#pragma once

// Articulatory knowledge base, contrastive feedback for detected confusions,
// and sagittal tongue diagrams rendered as SVG.

#include <array>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "capt/data/default_knowledge_base.hpp"
#include "capt/error.hpp"
#include "capt/phoneme.hpp"
#include "capt/text.hpp"

namespace capt::feedback {

using json = nlohmann::json;

enum class Lips { spread, neutral, rounded, closed };

constexpr std::string_view to_string(Lips l) {
  switch (l) {
    case Lips::spread: return "spread";
    case Lips::neutral: return "neutral";
    case Lips::rounded: return "rounded";
    case Lips::closed: return "closed";
  }
  return "?";
}

inline Lips parse_lips(std::string_view s) {
  if (s == "spread") return Lips::spread;
  if (s == "neutral") return Lips::neutral;
  if (s == "rounded") return Lips::rounded;
  if (s == "closed") return Lips::closed;
  throw Error(ErrorCode::MalformedEntry, "unknown lips value '" + std::string(s) + "'");
}

/// Head coordinates: x in [0, 1] from the lips (0) toward the throat, y in
/// [0, 1] from the top of the head downward.
struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

struct DiagramParams {
  std::array<Point, 5> tongue_spline{};
  bool velum_open = false;
  Lips lips = Lips::neutral;
  std::optional<Point> constriction;
  bool operator==(const DiagramParams&) const = default;
};

enum class TextField { tongue, lips, teeth, airflow, voicing };
enum class Locale { en, hi };

inline Locale parse_locale(std::string_view s) {
  if (s == "en") return Locale::en;
  if (s == "hi") return Locale::hi;
  throw Error(ErrorCode::InvalidArgument, "unsupported locale '" + std::string(s) + "' (en, hi)");
}

struct CommonError {
  TokenId phoneme = 0;
  std::string hint;
  bool operator==(const CommonError&) const = default;
};

struct ArticulatoryEntry {
  TokenId phoneme_id = 0;
  std::string ipa;
  std::vector<std::string> descriptors;
  std::string tongue_text, lips_text, teeth_text, airflow_text, voicing_text;
  std::string tongue_text_hi, lips_text_hi, teeth_text_hi, airflow_text_hi, voicing_text_hi;
  std::vector<CommonError> common_errors;
  DiagramParams diagram;

  const std::string& text(TextField f, Locale loc = Locale::en) const {
    const bool hi = loc == Locale::hi;
    switch (f) {
      case TextField::tongue: return hi ? tongue_text_hi : tongue_text;
      case TextField::lips: return hi ? lips_text_hi : lips_text;
      case TextField::teeth: return hi ? teeth_text_hi : teeth_text;
      case TextField::airflow: return hi ? airflow_text_hi : airflow_text;
      case TextField::voicing: return hi ? voicing_text_hi : voicing_text;
    }
    return tongue_text;
  }
};

/// Tags derived from features. Consonants: voicing, place, "aspirated" when
/// aspirated, manner. Vowels: length, height, backness, rounding,
/// "nasalized" when nasalized, then the category.
inline std::vector<std::string> descriptors_for(const PhonemeFeatures& f) {
  std::vector<std::string> t;
  if (f.category == Category::consonant) {
    t.emplace_back(f.voiced ? "voiced" : "unvoiced");
    t.emplace_back(to_string(f.place));
    if (f.aspirated) t.emplace_back("aspirated");
    t.emplace_back(to_string(f.manner));
    return t;
  }
  t.emplace_back(to_string(f.length));
  t.emplace_back(to_string(f.height));
  t.emplace_back(to_string(f.backness));
  t.emplace_back(f.rounded ? "rounded" : "unrounded");
  if (f.nasalized) t.emplace_back("nasalized");
  t.emplace_back(to_string(f.category));
  return t;
}

inline std::string describe(const ArticulatoryEntry& e) {
  std::string s;
  for (const auto& d : e.descriptors) {
    if (!s.empty()) s += ' ';
    for (char c : d) s += c == '_' ? '-' : c;
  }
  return s;
}

/// Which entry text explains a given feature.
constexpr TextField field_for(Feature f) {
  switch (f) {
    case Feature::category:
    case Feature::place:
    case Feature::height:
    case Feature::backness: return TextField::tongue;
    case Feature::manner:
    case Feature::aspirated:
    case Feature::nasalized: return TextField::airflow;
    case Feature::voiced:
    case Feature::length: return TextField::voicing;
    case Feature::rounded: return TextField::lips;
  }
  return TextField::tongue;
}

namespace detail {

inline Point parse_point(std::string_view s, std::size_t line) {
  const auto xy = text::split(s, ',');
  try {
    if (xy.size() != 2) throw std::invalid_argument("shape");
    std::size_t a = 0, b = 0;
    Point p{std::stod(xy[0], &a), std::stod(xy[1], &b)};
    if (a != xy[0].size() || b != xy[1].size()) throw std::invalid_argument("trailing");
    if (p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1) throw std::invalid_argument("range");
    return p;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::MalformedEntry, "line " + std::to_string(line) + ": bad point '" + std::string(s) + "'");
  }
}

inline bool parse_yes_no(std::string_view s, std::size_t line) {
  if (s == "yes") return true;
  if (s == "no") return false;
  throw Error(ErrorCode::MalformedEntry, "line " + std::to_string(line) + ": expected yes/no, got '" + std::string(s) + "'");
}

}  // namespace detail

class KnowledgeBase {
 public:
  static constexpr std::size_t kColumns = 18;

  /// Tab-separated, one row per phoneme (see data/knowledge_base.tsv). Load
  /// fails unless every inventory phoneme has exactly one coherent entry.
  static KnowledgeBase parse(std::string_view content, const PhonemeInventory& inv = PhonemeInventory::builtin()) {
    KnowledgeBase kb;
    std::map<TokenId, ArticulatoryEntry> by_id;
    text::for_each_data_line(content, [&](std::string_view line, std::size_t no) {
      const auto c = text::split(line, '\t');
      const auto where = "line " + std::to_string(no);
      if (c.size() != kColumns)
        throw Error(ErrorCode::MalformedEntry, where + ": expected " + std::to_string(kColumns) + " columns, got " +
                                                   std::to_string(c.size()));
      ArticulatoryEntry e;
      try {
        std::size_t used = 0;
        e.phoneme_id = std::stoi(c[0], &used);
        if (used != c[0].size()) throw std::invalid_argument("id");
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::MalformedEntry, where + ": bad id '" + c[0] + "'");
      }
      if (!is_phoneme_token(e.phoneme_id)) throw Error(ErrorCode::MalformedEntry, where + ": id out of range");
      const auto& ph = inv.at(e.phoneme_id);
      e.ipa = c[1];
      if (e.ipa != ph.ipa)
        throw Error(ErrorCode::MalformedEntry, where + ": ipa '" + e.ipa + "' does not match inventory '" + ph.ipa + "'");
      e.descriptors = text::split(c[2], ',');
      if (e.descriptors != descriptors_for(ph.features))
        throw Error(ErrorCode::MalformedEntry, where + ": descriptors '" + c[2] + "' disagree with the features of /" +
                                                   ph.ipa + "/ (expected '" + text::join(descriptors_for(ph.features), ",") + "')");
      std::string* texts[] = {&e.tongue_text,    &e.lips_text,    &e.teeth_text,    &e.airflow_text,    &e.voicing_text,
                              &e.tongue_text_hi, &e.lips_text_hi, &e.teeth_text_hi, &e.airflow_text_hi, &e.voicing_text_hi};
      for (std::size_t k = 0; k < 10; ++k) {
        *texts[k] = std::string(text::trim(c[3 + k]));
        if (texts[k]->empty() || *texts[k] == "-") throw Error(ErrorCode::MalformedEntry, where + ": empty text field");
      }
      if (c[13] != "-") {
        for (const auto& item : text::split(c[13], '|')) {
          const auto colon = item.find(':');
          CommonError ce;
          try {
            if (colon == std::string::npos) throw std::invalid_argument("colon");
            ce.phoneme = std::stoi(item.substr(0, colon));
          } catch (const std::logic_error&) {
            throw Error(ErrorCode::MalformedEntry, where + ": bad common error '" + item + "'");
          }
          if (!is_phoneme_token(ce.phoneme) || ce.phoneme == e.phoneme_id)
            throw Error(ErrorCode::MalformedEntry, where + ": bad common error phoneme");
          ce.hint = item.substr(colon + 1);
          e.common_errors.push_back(std::move(ce));
        }
      }
      const auto pts = text::split(c[14], ';');
      if (pts.size() != 5) throw Error(ErrorCode::MalformedEntry, where + ": tongue_spline needs 5 points");
      for (std::size_t k = 0; k < 5; ++k) e.diagram.tongue_spline[k] = detail::parse_point(pts[k], no);
      for (std::size_t k = 1; k < 5; ++k)
        if (!(e.diagram.tongue_spline[k].x > e.diagram.tongue_spline[k - 1].x))
          throw Error(ErrorCode::MalformedEntry, where + ": tongue_spline must be x-monotone");
      e.diagram.velum_open = detail::parse_yes_no(c[15], no);
      const bool nasal = ph.features.manner == Manner::nasal || ph.features.nasalized;
      if (e.diagram.velum_open != nasal)
        throw Error(ErrorCode::MalformedEntry, where + ": velum_open must be yes exactly for nasal sounds");
      e.diagram.lips = parse_lips(c[16]);
      if (c[17] != "-") e.diagram.constriction = detail::parse_point(c[17], no);
      if (!by_id.emplace(e.phoneme_id, std::move(e)).second)
        throw Error(ErrorCode::DuplicateToken, where + ": second entry for id " + c[0]);
    });
    std::string gaps;
    for (const auto& p : inv.phonemes())
      if (!by_id.count(p.id)) gaps += (gaps.empty() ? "" : ", ") + std::to_string(p.id) + " /" + p.ipa + "/";
    if (!gaps.empty()) throw Error(ErrorCode::IncompleteKnowledgeBase, "missing entries: " + gaps);
    for (auto& [id, e] : by_id) kb.entries_.push_back(std::move(e));
    return kb;
  }

  static KnowledgeBase load_file(const std::string& path, const PhonemeInventory& inv = PhonemeInventory::builtin()) {
    return parse(text::read_file(path), inv);
  }

  static const KnowledgeBase& builtin() {
    static const KnowledgeBase kb = parse(data::kDefaultKnowledgeBaseTsv);
    return kb;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<ArticulatoryEntry>& entries() const noexcept { return entries_; }

  const ArticulatoryEntry& get_entry(TokenId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= entries_.size())
      throw Error(ErrorCode::UnknownPhoneme, "no knowledge-base entry for id " + std::to_string(id));
    return entries_[static_cast<std::size_t>(id)];
  }

 private:
  std::vector<ArticulatoryEntry> entries_;  // index == phoneme id
};

inline const ArticulatoryEntry& get_entry(TokenId id, const KnowledgeBase& kb = KnowledgeBase::builtin()) {
  return kb.get_entry(id);
}

// ---------------------------------------------------------------------------
// Feedback composition

struct ContrastPoint {
  Feature feature = Feature::place;
  std::string expected_value;
  std::string produced_value;
  std::string instruction;
};

struct FeedbackMessage {
  TokenId expected = 0;
  std::optional<TokenId> produced;
  std::string headline;
  std::vector<ContrastPoint> contrast_points;
  std::vector<std::string> articulation;  // full instructions, filled for deletions
  std::vector<std::string> diagram_refs;
};

inline std::string diagram_ref(TokenId id) { return "/api/phonemes/" + std::to_string(id) + "/diagram.svg"; }

inline std::string display_value(std::string v) {
  for (auto& c : v)
    if (c == '_') c = '-';
  return v;
}

inline FeedbackMessage compose_feedback(TokenId expected, std::optional<TokenId> produced,
                                        const KnowledgeBase& kb = KnowledgeBase::builtin(),
                                        const PhonemeInventory& inv = PhonemeInventory::builtin(),
                                        Locale loc = Locale::en) {
  const auto& exp = kb.get_entry(expected);
  const auto& exp_ph = inv.at(expected);
  const bool hi = loc == Locale::hi;
  FeedbackMessage m;
  m.expected = expected;
  m.produced = produced;
  m.diagram_refs.push_back(diagram_ref(expected));

  if (produced && *produced == expected) {
    m.headline = hi ? "सही" : "correct";
    return m;
  }
  if (!produced) {
    m.headline = hi ? "/" + exp.ipa + "/ छूट गया; इसे ऐसे बोलें:"
                    : "/" + exp.ipa + "/ was left out; say it as a " + describe(exp) + ".";
    for (auto f : {TextField::tongue, TextField::lips, TextField::teeth, TextField::airflow, TextField::voicing})
      m.articulation.push_back(exp.text(f, loc));
    return m;
  }
  const auto& prod = kb.get_entry(*produced);
  const auto& prod_ph = inv.at(*produced);
  m.headline = hi ? "अपेक्षित /" + exp.ipa + "/, सुनाई दिया /" + prod.ipa + "/"
                  : "Expected /" + exp.ipa + "/ (" + describe(exp) + "), heard /" + prod.ipa + "/ (" + describe(prod) + ").";
  for (auto f : differing_features(exp_ph.features, prod_ph.features)) {
    ContrastPoint cp{f, feature_value(exp_ph.features, f), feature_value(prod_ph.features, f), {}};
    const auto lead = hi ? std::string(to_string(f)) + ": " + display_value(cp.expected_value) + " (न कि " +
                               display_value(cp.produced_value) + ")। "
                         : std::string(to_string(f)) + " should be " + display_value(cp.expected_value) + ", not " +
                               display_value(cp.produced_value) + ". ";
    cp.instruction = lead + exp.text(field_for(f), loc);
    m.contrast_points.push_back(std::move(cp));
  }
  m.diagram_refs.push_back(diagram_ref(*produced));
  return m;
}

inline json to_json(const FeedbackMessage& m, const PhonemeInventory& inv = PhonemeInventory::builtin()) {
  json points = json::array();
  for (const auto& cp : m.contrast_points)
    points.push_back({{"feature", to_string(cp.feature)},
                      {"expected_value", cp.expected_value},
                      {"produced_value", cp.produced_value},
                      {"instruction", cp.instruction}});
  return {{"expected", m.expected},
          {"expected_ipa", inv.at(m.expected).ipa},
          {"produced", m.produced ? json(*m.produced) : json(nullptr)},
          {"produced_ipa", m.produced ? json(inv.at(*m.produced).ipa) : json(nullptr)},
          {"headline", m.headline},
          {"contrast_points", std::move(points)},
          {"articulation", m.articulation},
          {"diagram_refs", m.diagram_refs}};
}

inline json to_json(const ArticulatoryEntry& e) {
  json errs = json::array();
  for (const auto& ce : e.common_errors) errs.push_back({{"phoneme", ce.phoneme}, {"hint", ce.hint}});
  json spline = json::array();
  for (const auto& p : e.diagram.tongue_spline) spline.push_back({p.x, p.y});
  return {{"phoneme_id", e.phoneme_id},
          {"ipa", e.ipa},
          {"descriptors", e.descriptors},
          {"tongue_text", e.tongue_text},
          {"lips_text", e.lips_text},
          {"teeth_text", e.teeth_text},
          {"airflow_text", e.airflow_text},
          {"voicing_text", e.voicing_text},
          {"hi", {{"tongue_text", e.tongue_text_hi},
                  {"lips_text", e.lips_text_hi},
                  {"teeth_text", e.teeth_text_hi},
                  {"airflow_text", e.airflow_text_hi},
                  {"voicing_text", e.voicing_text_hi}}},
          {"common_errors", std::move(errs)},
          {"diagram", {{"tongue_spline", std::move(spline)},
                       {"velum_open", e.diagram.velum_open},
                       {"lips", to_string(e.diagram.lips)},
                       {"constriction", e.diagram.constriction
                                            ? json({e.diagram.constriction->x, e.diagram.constriction->y})
                                            : json(nullptr)}}}};
}

// ---------------------------------------------------------------------------
// Diagram rendering

namespace detail {

class PathWriter {
 public:
  explicit PathWriter(double scale) : s_(scale) {}

  PathWriter& move(Point p) { return cmd('M', {p}); }
  PathWriter& line(Point p) { return cmd('L', {p}); }
  PathWriter& curve(Point c1, Point c2, Point p) { return cmd('C', {c1, c2, p}); }
  PathWriter& close() {
    d_ += 'Z';
    return *this;
  }
  const std::string& str() const { return d_; }

 private:
  PathWriter& cmd(char c, std::initializer_list<Point> pts) {
    if (!d_.empty()) d_ += ' ';
    d_ += c;
    for (const auto& p : pts) {
      char buf[48];
      std::snprintf(buf, sizeof buf, " %.2f,%.2f", p.x * s_, p.y * s_);
      d_ += buf;
    }
    return *this;
  }
  double s_;
  std::string d_;
};

inline std::string polygon(double scale, std::initializer_list<Point> pts) {
  PathWriter w(scale);
  bool first = true;
  for (const auto& p : pts) {
    if (first) w.move(p);
    else w.line(p);
    first = false;
  }
  return w.close().str();
}

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string path_el(std::string_view id, const std::string& d, std::string_view style) {
  return "  <path id=\"" + std::string(id) + "\" d=\"" + d + "\" " + std::string(style) + "/>\n";
}

}  // namespace detail

inline constexpr int kMinDiagramSize = 64;

/// Sagittal cross-section, face to the left. The tongue is a Catmull-Rom
/// curve through the five control points, closed along the floor of the
/// mouth.
inline std::string render_tongue_diagram(const ArticulatoryEntry& e, int size = 256) {
  if (size < kMinDiagramSize)
    throw Error(ErrorCode::InvalidArgument, "diagram size must be at least 64 (got " + std::to_string(size) + ")");
  using detail::path_el;
  using detail::polygon;
  const double s = size;
  const auto& dp = e.diagram;

  // Head outline and fixed anatomy.
  detail::PathWriter head(s);
  head.move({0.14, 0.02})
      .curve({0.08, 0.10}, {0.04, 0.20}, {0.05, 0.27})
      .line({0.00, 0.34})
      .line({0.05, 0.38})
      .line({0.04, 0.44})
      .line({0.05, 0.58})
      .curve({0.05, 0.66}, {0.08, 0.72}, {0.16, 0.74})
      .curve({0.26, 0.76}, {0.30, 0.86}, {0.32, 0.98})
      .line({0.92, 0.98})
      .curve({0.98, 0.70}, {1.00, 0.40}, {0.94, 0.20})
      .curve({0.86, 0.04}, {0.50, -0.02}, {0.14, 0.02})
      .close();
  const auto palate = polygon(s, {{0.10, 0.36}, {0.16, 0.31}, {0.24, 0.28}, {0.40, 0.27}, {0.58, 0.28},
                                  {0.58, 0.25}, {0.40, 0.24}, {0.24, 0.25}, {0.14, 0.28}, {0.08, 0.34}});
  const auto nasal = polygon(s, {{0.06, 0.27}, {0.20, 0.18}, {0.60, 0.18}, {0.80, 0.24}, {0.80, 0.28},
                                 {0.58, 0.23}, {0.24, 0.23}, {0.09, 0.30}});
  const auto pharynx = polygon(s, {{0.84, 0.26}, {0.88, 0.26}, {0.88, 0.98}, {0.84, 0.98}});
  const auto teeth_up = polygon(s, {{0.08, 0.38}, {0.12, 0.37}, {0.13, 0.46}, {0.09, 0.47}});
  const auto teeth_lo = polygon(s, {{0.09, 0.53}, {0.13, 0.54}, {0.12, 0.62}, {0.08, 0.61}});
  const auto velum = dp.velum_open
                         ? polygon(s, {{0.58, 0.25}, {0.66, 0.29}, {0.72, 0.38}, {0.69, 0.40}, {0.62, 0.33}, {0.58, 0.28}})
                         : polygon(s, {{0.58, 0.25}, {0.70, 0.26}, {0.84, 0.29}, {0.83, 0.32}, {0.70, 0.30}, {0.58, 0.28}});

  // Lips: upper and lower glyphs per shape.
  double gap = 0.0, dx = 0.0, thick = 0.05;
  switch (dp.lips) {
    case Lips::closed: gap = 0.0; break;
    case Lips::neutral: gap = 0.03; break;
    case Lips::spread: gap = 0.02, dx = 0.01, thick = 0.03; break;
    case Lips::rounded: gap = 0.04, dx = -0.03; break;
  }
  const double mid = 0.50;
  const auto lip_up = polygon(s, {{0.02 + dx, mid - gap / 2 - thick}, {0.08 + dx, mid - gap / 2 - thick - 0.01},
                                  {0.08 + dx, mid - gap / 2}, {0.01 + dx, mid - gap / 2}});
  const auto lip_lo = polygon(s, {{0.01 + dx, mid + gap / 2}, {0.08 + dx, mid + gap / 2},
                                  {0.08 + dx, mid + gap / 2 + thick + 0.01}, {0.02 + dx, mid + gap / 2 + thick}});

  // Tongue: Catmull-Rom through the control points as cubic Beziers.
  const auto& P = dp.tongue_spline;
  auto at = [&](int i) { return P[static_cast<std::size_t>(std::clamp(i, 0, 4))]; };
  detail::PathWriter tongue(s);
  tongue.move(P[0]);
  for (int i = 0; i < 4; ++i) {
    const Point p0 = at(i - 1), p1 = at(i), p2 = at(i + 1), p3 = at(i + 2);
    tongue.curve({p1.x + (p2.x - p0.x) / 6.0, p1.y + (p2.y - p0.y) / 6.0},
                 {p2.x - (p3.x - p1.x) / 6.0, p2.y - (p3.y - p1.y) / 6.0}, p2);
  }
  tongue.line({0.84, 0.90}).line({0.30, 0.80}).curve({0.20, 0.74}, {0.16, 0.66}, P[0]).close();

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(size) + "\" height=\"" +
         std::to_string(size) + "\" viewBox=\"0 0 " + std::to_string(size) + " " + std::to_string(size) + "\">\n";
  svg += "  <title>/" + detail::xml_escape(e.ipa) + "/ " + detail::xml_escape(describe(e)) + "</title>\n";
  svg += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(size) + "\" height=\"" + std::to_string(size) +
         "\" fill=\"#ffffff\"/>\n";
  svg += path_el("head", head.str(), "fill=\"#f6e3d4\" stroke=\"#5a4636\" stroke-width=\"1.5\"");
  svg += path_el("nasal-cavity", nasal, "fill=\"#ffffff\" stroke=\"#b79a84\" stroke-width=\"1\"");
  svg += path_el("pharynx-wall", pharynx, "fill=\"#d9b8a0\" stroke=\"none\"");
  svg += path_el("palate", palate, "fill=\"#c98f7a\" stroke=\"#5a4636\" stroke-width=\"1\"");
  svg += path_el("velum", velum,
                 std::string("fill=\"#c98f7a\" stroke=\"#5a4636\" stroke-width=\"1\" data-state=\"") +
                     (dp.velum_open ? "open" : "closed") + "\"");
  svg += path_el("teeth-upper", teeth_up, "fill=\"#ffffff\" stroke=\"#7d7d7d\" stroke-width=\"1\"");
  svg += path_el("teeth-lower", teeth_lo, "fill=\"#ffffff\" stroke=\"#7d7d7d\" stroke-width=\"1\"");
  svg += path_el("lip-upper", lip_up,
                 std::string("fill=\"#d46a6a\" stroke=\"#8c3b3b\" stroke-width=\"1\" data-shape=\"") +
                     std::string(to_string(dp.lips)) + "\"");
  svg += path_el("lip-lower", lip_lo, "fill=\"#d46a6a\" stroke=\"#8c3b3b\" stroke-width=\"1\"");
  svg += path_el("tongue", tongue.str(), "fill=\"#e88a8a\" stroke=\"#8c3b3b\" stroke-width=\"1.5\"");
  if (dp.constriction) {
    svg += "  <circle id=\"constriction\" cx=\"" + detail::fmt(dp.constriction->x * s) + "\" cy=\"" +
           detail::fmt(dp.constriction->y * s) + "\" r=\"" + detail::fmt(0.03 * s) +
           "\" fill=\"#ffd400\" fill-opacity=\"0.7\" stroke=\"#c03000\" stroke-width=\"2\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

inline std::string render_tongue_diagram(TokenId id, int size = 256, const KnowledgeBase& kb = KnowledgeBase::builtin()) {
  return render_tongue_diagram(kb.get_entry(id), size);
}

}  // namespace capt::feedback
