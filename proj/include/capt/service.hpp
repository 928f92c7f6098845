#pragma once

// HTTP practice service: sentence catalog, attempt analysis with feedback,
// phoneme diagrams, self-ratings and their statistics. Sessions persist as
// append-only JSON lines under <data_dir>/sessions/.

#include <array>
#include <atomic>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <regex>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "capt/audio.hpp"
#include "capt/detect.hpp"
#include "capt/error.hpp"
#include "capt/feedback.hpp"
#include "capt/g2p.hpp"
#include "capt/log.hpp"
#include "capt/phoneme.hpp"
#include "capt/stats.hpp"
#include "capt/text.hpp"

namespace capt::service {

using json = nlohmann::json;

struct ServiceConfig {
  std::string data_dir = "capt-data";
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string recognizer_url;  // empty: built-in tone recognizer
  std::string inventory;       // empty: built-in
  std::string kb;              // empty: built-in
  std::string catalog;
  std::string static_dir;      // optional UI bundle mounted at /

  static ServiceConfig from_json(const json& j) {
    static const std::set<std::string> known{"data_dir", "host",    "port",      "recognizer_url",
                                             "inventory", "kb",     "catalog",   "static_dir"};
    ServiceConfig c;
    try {
      for (const auto& [k, v] : j.items())
        if (!known.count(k)) throw Error(ErrorCode::InvalidArgument, "unknown config key '" + k + "'");
      c.data_dir = j.value("data_dir", c.data_dir);
      c.host = j.value("host", c.host);
      c.port = j.value("port", c.port);
      c.recognizer_url = j.value("recognizer_url", c.recognizer_url);
      c.inventory = j.value("inventory", c.inventory);
      c.kb = j.value("kb", c.kb);
      c.catalog = j.value("catalog", c.catalog);
      c.static_dir = j.value("static_dir", c.static_dir);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::InvalidArgument, std::string("config: ") + e.what());
    }
    return c;
  }

  static ServiceConfig load_file(const std::string& path) {
    try {
      return from_json(json::parse(text::read_file(path)));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::InvalidArgument, path + ": " + e.what());
    }
  }
};

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
  std::string sentence_id;
  std::string text;
  PhonemeSequence canonical;
  std::string difficulty;
};

/// Tab-separated `sentence_id  text  difficulty`; rows that fail G2P are
/// dropped with a warning.
inline std::vector<CatalogEntry> parse_catalog(std::string_view content, const PhonemeInventory& inv,
                                               const WarningSink& warn = stderr_warning) {
  std::vector<CatalogEntry> out;
  std::set<std::string> ids;
  g2p::Options opt;
  opt.inventory = &inv;
  text::for_each_data_line(content, [&](std::string_view line, std::size_t no) {
    const auto c = text::split(line, '\t');
    if (c.size() != 3)
      throw Error(ErrorCode::MalformedEntry, "catalog line " + std::to_string(no) + ": expected 3 columns");
    if (!ids.insert(c[0]).second)
      throw Error(ErrorCode::DuplicateToken, "catalog line " + std::to_string(no) + ": duplicate id " + c[0]);
    try {
      out.push_back({c[0], c[1], g2p::to_phonemes(c[1], opt).sequence, c[2]});
    } catch (const Error& e) {
      warn("catalog line " + std::to_string(no) + " skipped: " + e.what());
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Wire helpers

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

inline Response json_response(int status, const json& j) { return {status, "application/json", j.dump()}; }

inline Response error_response(int status, std::string_view code, const std::string& detail, json extra = json::object()) {
  extra["error"] = code;
  extra["detail"] = detail;
  return json_response(status, extra);
}

inline std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const auto t = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[40];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[48];
  std::snprintf(out, sizeof out, "%s.%03lldZ", buf, static_cast<long long>(ms));
  return out;
}

inline std::string base64_decode(std::string_view in) {
  static const auto table = [] {
    std::array<int, 256> t{};
    t.fill(-1);
    const char* abc = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    for (int i = 0; i < 64; ++i) t[static_cast<unsigned char>(abc[i])] = i;
    t[static_cast<unsigned char>('-')] = 62;
    t[static_cast<unsigned char>('_')] = 63;
    return t;
  }();
  std::string out;
  unsigned acc = 0;
  int bits = 0;
  for (char ch : in) {
    if (ch == '=' || ch == '\n' || ch == '\r' || ch == ' ') continue;
    const int v = table[static_cast<unsigned char>(ch)];
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "audio is not valid base64");
    acc = (acc << 6) | static_cast<unsigned>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out += static_cast<char>((acc >> bits) & 0xFF);
    }
  }
  return out;
}

inline bool valid_session_id(std::string_view id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Service

class CaptService {
 public:
  using RequestLog = std::function<void(const std::string&)>;

  /// `recognizer` overrides the configured one (tests inject failures).
  explicit CaptService(ServiceConfig cfg, std::unique_ptr<detect::Recognizer> recognizer = nullptr,
                       WarningSink warn = stderr_warning)
      : cfg_(std::move(cfg)), warn_(std::move(warn)) {
    inventory_ = cfg_.inventory.empty() ? &PhonemeInventory::builtin()
                                        : &owned_inventory_.emplace(PhonemeInventory::load_file(cfg_.inventory));
    kb_ = cfg_.kb.empty() && cfg_.inventory.empty()
              ? &feedback::KnowledgeBase::builtin()
              : &owned_kb_.emplace(cfg_.kb.empty() ? feedback::KnowledgeBase::parse(data::kDefaultKnowledgeBaseTsv, *inventory_)
                                                   : feedback::KnowledgeBase::load_file(cfg_.kb, *inventory_));
    aligner_ = std::make_unique<detect::Aligner>(*inventory_);
    if (recognizer) recognizer_ = std::move(recognizer);
    else if (!cfg_.recognizer_url.empty()) recognizer_ = std::make_unique<detect::HttpRecognizer>(cfg_.recognizer_url);
    else recognizer_ = std::make_unique<detect::ToneRecognizer>();
    load_catalog();
    load_sessions();
  }

  const ServiceConfig& config() const noexcept { return cfg_; }
  const PhonemeInventory& inventory() const noexcept { return *inventory_; }
  const feedback::KnowledgeBase& knowledge_base() const noexcept { return *kb_; }
  const detect::Aligner& aligner() const noexcept { return *aligner_; }

  /// Routes a request; used by the HTTP binding and directly by tests.
  Response handle(std::string_view method, std::string_view path, std::string_view body = {},
                  const std::map<std::string, std::string>& query = {}) {
    try {
      static const std::regex diagram_re(R"(^/api/phonemes/([^/]+)/diagram\.svg$)");
      static const std::regex session_re(R"(^/api/sessions/([^/]+)$)");
      const std::string p(path);
      std::smatch m;
      if (method == "GET" && p == "/api/sentences") return get_sentences();
      if (method == "POST" && p == "/api/attempts") return post_attempt(body);
      if (method == "GET" && p == "/api/phonemes") return get_phonemes();
      if (method == "GET" && std::regex_match(p, m, diagram_re)) {
        const auto it = query.find("size");
        return get_diagram(m[1].str(), it == query.end() ? std::string() : it->second);
      }
      if (method == "POST" && p == "/api/ratings") return post_rating(body);
      if (method == "GET" && p == "/api/stats") return get_stats();
      if (method == "GET" && std::regex_match(p, m, session_re)) return get_session(m[1].str());
      return error_response(404, "NotFound", "no route for " + std::string(method) + " " + p);
    } catch (const Error& e) {
      return error_response(500, to_string(e.code()), e.what());
    } catch (const std::exception& e) {
      return error_response(500, "Internal", e.what());
    }
  }

  Response get_sentences() const {
    if (catalog_.empty()) return error_response(503, "CatalogUnavailable", catalog_problem_);
    return json_response(200, sentences_json_);
  }

  Response get_phonemes() const {
    json arr = json::array();
    for (const auto& ph : inventory_->phonemes()) {
      arr.push_back({{"id", ph.id},
                     {"ipa", ph.ipa},
                     {"devanagari_forms", ph.devanagari_forms},
                     {"entry", feedback::to_json(kb_->get_entry(ph.id))},
                     {"diagram", feedback::diagram_ref(ph.id)}});
    }
    return json_response(200, arr);
  }

  Response get_diagram(const std::string& id_text, const std::string& size_text = {}) const {
    TokenId id = -1;
    try {
      std::size_t used = 0;
      id = std::stoi(id_text, &used);
      if (used != id_text.size()) id = -1;
    } catch (const std::logic_error&) {
      id = -1;
    }
    if (!is_phoneme_token(id)) return error_response(404, "UnknownPhoneme", "no phoneme with id '" + id_text + "'");
    int size = 256;
    if (!size_text.empty()) {
      try {
        size = std::stoi(size_text);
      } catch (const std::logic_error&) {
        size = 0;
      }
      if (size < feedback::kMinDiagramSize || size > 4096)
        return error_response(422, "InvalidArgument", "size must be an integer in [64, 4096]");
    }
    return {200, "image/svg+xml", feedback::render_tongue_diagram(kb_->get_entry(id), size)};
  }

  /// Analysis of one attempt: the report JSON is exactly what
  /// detect::analyze produces for the same inputs.
  json analyze_attempt(const CatalogEntry& sentence, const PhonemeSequence& predicted,
                       const detect::RecognizerOutput* rec) const {
    const auto analysis = detect::analyze(sentence.canonical, predicted, rec, aligner_.get());
    json fb = json::array();
    for (const auto& r : analysis.reports)
      for (const auto& pair : r.pairs) {
        if (!pair.expected) continue;
        auto j = feedback::to_json(feedback::compose_feedback(*pair.expected, pair.produced, *kb_, *inventory_),
                                   *inventory_);
        j["word_index"] = r.word_index;
        fb.push_back(std::move(j));
      }
    return {{"reports", detect::to_json(analysis.reports)},
            {"feedback", std::move(fb)},
            {"predicted", predicted.tokens()},
            {"predicted_ipa", format_ipa(*inventory_, predicted)}};
  }

  Response post_attempt(std::string_view body) {
    json req;
    try {
      req = json::parse(body);
    } catch (const json::exception& e) {
      return error_response(400, "BadRequest", std::string("invalid JSON: ") + e.what());
    }
    if (!req.is_object()) return error_response(400, "BadRequest", "body must be a JSON object");
    const auto session_id = req.value("session_id", std::string());
    if (!valid_session_id(session_id))
      return error_response(422, "InvalidArgument", "session_id must be 1-64 characters of [A-Za-z0-9_-]");
    if (catalog_.empty()) return error_response(503, "CatalogUnavailable", catalog_problem_);
    const auto sentence_id = req.value("sentence_id", std::string());
    const auto it = catalog_index_.find(sentence_id);
    if (it == catalog_index_.end()) return error_response(404, "UnknownSentence", "no sentence '" + sentence_id + "'");
    const auto& sentence = catalog_[it->second];

    const bool has_ph = req.contains("phonemes"), has_audio = req.contains("audio");
    if (has_ph == has_audio) return error_response(422, "InvalidArgument", "give exactly one of phonemes or audio");

    PhonemeSequence predicted;
    std::optional<detect::RecognizerOutput> rec;
    std::string input_kind;
    if (has_ph) {
      input_kind = "phonemes";
      std::vector<std::vector<TokenId>> words(1);
      std::vector<std::string> symbols;
      const auto& ph = req["phonemes"];
      if (ph.is_string()) {
        for (const auto& w : text::split(ph.get<std::string>(), '|')) {
          for (auto& s : text::split_ws(w)) symbols.push_back(std::move(s));
          symbols.emplace_back("|");
        }
      } else if (ph.is_array()) {
        for (const auto& s : ph) {
          if (!s.is_string()) return error_response(422, "UnknownPhoneme", "phonemes must be strings", {{"symbol", s.dump()}});
          symbols.push_back(s.get<std::string>());
        }
      } else {
        return error_response(422, "InvalidArgument", "phonemes must be a list of IPA symbols or a string");
      }
      for (const auto& s : symbols) {
        if (s == "|") {
          if (!words.back().empty()) words.emplace_back();
          continue;
        }
        const auto id = inventory_->find_ipa(s);
        if (!id) return error_response(422, "UnknownPhoneme", "unknown phoneme symbol '" + s + "'", {{"symbol", s}});
        words.back().push_back(*id);
      }
      if (words.back().empty()) words.pop_back();
      predicted = PhonemeSequence::from_words(words);
    } else {
      input_kind = "audio";
      if (!req["audio"].is_string()) return error_response(422, "InvalidArgument", "audio must be base64 WAV");
      audio::AudioBuffer buf;
      try {
        buf = audio::parse_wav(base64_decode(req["audio"].get<std::string>()));
      } catch (const Error& e) {
        return error_response(422, to_string(e.code()), e.what());
      }
      if (buf.sample_rate != audio::kCanonicalSampleRate)
        return error_response(422, "UnsupportedWav", "audio must be 8000 Hz mono 16-bit PCM");
      try {
        std::lock_guard lock(recognizer_mu_);
        rec = recognizer_->recognize(buf);
      } catch (const std::exception& e) {
        return error_response(502, "RecognizerUnavailable", e.what());
      }
      predicted = rec->phonemes;
    }

    json record = analyze_attempt(sentence, predicted, rec ? &*rec : nullptr);
    record["type"] = "attempt";
    record["session_id"] = session_id;
    record["sentence_id"] = sentence.sentence_id;
    record["input_kind"] = input_kind;
    record["created_at"] = now_iso8601();
    append(session_id, record);
    return json_response(201, record);
  }

  Response post_rating(std::string_view body) {
    json req;
    try {
      req = json::parse(body);
    } catch (const json::exception& e) {
      return error_response(400, "BadRequest", std::string("invalid JSON: ") + e.what());
    }
    if (!req.is_object()) return error_response(400, "BadRequest", "body must be a JSON object");
    const auto session_id = req.value("session_id", std::string());
    if (!valid_session_id(session_id))
      return error_response(422, "InvalidArgument", "session_id must be 1-64 characters of [A-Za-z0-9_-]");
    std::string phoneme;
    if (req.contains("phoneme") && req["phoneme"].is_number_integer()) {
      const auto id = req["phoneme"].get<TokenId>();
      if (!is_phoneme_token(id)) return error_response(404, "UnknownPhoneme", "no phoneme with id " + std::to_string(id));
      phoneme = inventory_->at(id).ipa;
    } else if (req.contains("phoneme") && req["phoneme"].is_string()) {
      phoneme = req["phoneme"].get<std::string>();
      if (!inventory_->find_ipa(phoneme))
        return error_response(422, "UnknownPhoneme", "unknown phoneme symbol '" + phoneme + "'", {{"symbol", phoneme}});
    } else {
      return error_response(422, "InvalidArgument", "phoneme must be an id or an IPA symbol");
    }
    const auto score = [&](const char* key) -> std::optional<int> {
      if (!req.contains(key) || !req[key].is_number_integer()) return std::nullopt;
      const auto v = req[key].get<long long>();
      if (v < 1 || v > 5) return std::nullopt;
      return static_cast<int>(v);
    };
    const auto pre = score("pre"), post = score("post");
    if (!pre || !post) return error_response(422, "InvalidArgument", "pre and post must be integers in 1..5");
    json record = {{"type", "rating"},  {"session_id", session_id}, {"phoneme", phoneme},
                   {"pre", *pre},       {"post", *post},            {"created_at", now_iso8601()}};
    append(session_id, record);
    return json_response(201, record);
  }

  Response get_stats() const {
    std::vector<stats::PairedSample> samples;
    {
      std::shared_lock lock(index_mu_);
      for (const auto& [id, s] : sessions_)
        for (const auto& r : s->ratings)
          samples.push_back({id, r.at("phoneme").get<std::string>(), r.at("pre").get<int>(), r.at("post").get<int>()});
    }
    json out = {{"n", samples.size()}};
    if (samples.empty()) {
      out["wilcoxon"] = nullptr;
      out["likert"] = nullptr;
      return json_response(200, out);
    }
    out["wilcoxon"] = {{"two_sided", stats::to_json(stats::wilcoxon_pratt(samples, stats::Alternative::two_sided))},
                       {"greater", stats::to_json(stats::wilcoxon_pratt(samples, stats::Alternative::greater))}};
    out["likert"] = stats::to_json(stats::summarize_likert(samples));
    return json_response(200, out);
  }

  Response get_session(const std::string& id) const {
    std::shared_ptr<Session> s;
    {
      std::shared_lock lock(index_mu_);
      const auto it = sessions_.find(id);
      if (it == sessions_.end()) return error_response(404, "UnknownSession", "no session '" + id + "'");
      s = it->second;
    }
    std::lock_guard lock(s->mu);
    return json_response(200, {{"session_id", id}, {"created_at", s->created_at}, {"attempts", s->attempts},
                               {"ratings", s->ratings}});
  }

  /// Mounts the API (and the static bundle, if configured) on a server.
  void bind(httplib::Server& server, RequestLog log = default_request_log) {
    if (!cfg_.static_dir.empty() && !server.set_mount_point("/", cfg_.static_dir))
      warn_("static_dir '" + cfg_.static_dir + "' is not a directory; UI not mounted");
    auto handler = [this](const httplib::Request& req, httplib::Response& res) {
      std::map<std::string, std::string> query;
      for (const auto& [k, v] : req.params) query.emplace(k, v);
      const auto r = handle(req.method, req.path, req.body, query);
      res.status = r.status;
      res.set_content(r.body, r.content_type);
    };
    server.Get("/api/.*", handler);
    server.Post("/api/.*", handler);
    server.set_logger([log](const httplib::Request& req, const httplib::Response& res) {
      if (log) log(json({{"method", req.method}, {"path", req.path}, {"status", res.status},
                         {"remote", req.remote_addr}, {"time", now_iso8601()}}).dump());
    });
  }

  static void default_request_log(const std::string& line) {
    static std::mutex mu;
    std::lock_guard lock(mu);
    std::cerr << line << '\n';
  }

 private:
  struct Session {
    std::mutex mu;  // serializes appends to this session's file
    std::string created_at;
    json attempts = json::array();
    json ratings = json::array();
  };

  std::filesystem::path sessions_dir() const { return std::filesystem::path(cfg_.data_dir) / "sessions"; }

  void load_catalog() {
    if (cfg_.catalog.empty() || !std::filesystem::exists(cfg_.catalog)) {
      catalog_problem_ = "catalog file '" + cfg_.catalog + "' not found";
      warn_(catalog_problem_);
      return;
    }
    try {
      catalog_ = parse_catalog(text::read_file(cfg_.catalog), *inventory_, warn_);
    } catch (const Error& e) {
      catalog_problem_ = std::string("catalog could not be loaded: ") + e.what();
      warn_(catalog_problem_);
      catalog_.clear();
      return;
    }
    if (catalog_.empty()) {
      catalog_problem_ = "catalog '" + cfg_.catalog + "' has no usable sentences";
      warn_(catalog_problem_);
      return;
    }
    json arr = json::array();
    for (std::size_t i = 0; i < catalog_.size(); ++i) {
      const auto& c = catalog_[i];
      catalog_index_.emplace(c.sentence_id, i);
      arr.push_back({{"sentence_id", c.sentence_id},
                     {"text", c.text},
                     {"canonical", c.canonical.tokens()},
                     {"canonical_ipa", format_ipa(*inventory_, c.canonical)},
                     {"difficulty", c.difficulty}});
    }
    sentences_json_ = std::move(arr);
  }

  void load_sessions() {
    std::filesystem::create_directories(sessions_dir());
    for (const auto& f : std::filesystem::directory_iterator(sessions_dir())) {
      if (f.path().extension() != ".jsonl") continue;
      const auto id = f.path().stem().string();
      auto s = std::make_shared<Session>();
      std::size_t line_no = 0;
      for (const auto& line : text::split(text::read_file(f.path().string()), '\n')) {
        ++line_no;
        if (text::trim(line).empty()) continue;
        json rec;
        try {
          rec = json::parse(line);
        } catch (const json::exception&) {
          // A crash mid-append can leave a torn final line; nothing after it was acknowledged.
          warn_(f.path().string() + ":" + std::to_string(line_no) + ": unreadable record skipped");
          continue;
        }
        if (s->created_at.empty()) s->created_at = rec.value("created_at", std::string());
        (rec.value("type", std::string()) == "rating" ? s->ratings : s->attempts).push_back(std::move(rec));
      }
      sessions_.emplace(id, std::move(s));
    }
  }

  std::shared_ptr<Session> session_for(const std::string& id) {
    {
      std::shared_lock lock(index_mu_);
      if (const auto it = sessions_.find(id); it != sessions_.end()) return it->second;
    }
    std::unique_lock lock(index_mu_);
    auto& s = sessions_[id];
    if (!s) s = std::make_shared<Session>();
    return s;
  }

  /// Durable before return: the line is flushed to the session file first.
  void append(const std::string& session_id, const json& record) {
    auto s = session_for(session_id);
    std::lock_guard lock(s->mu);
    const auto line = record.dump() + "\n";
    {
      std::ofstream out(sessions_dir() / (session_id + ".jsonl"), std::ios::binary | std::ios::app);
      if (!out) throw Error(ErrorCode::Io, "cannot open session file for " + session_id);
      out.write(line.data(), static_cast<std::streamsize>(line.size()));
      out.flush();
      if (!out) throw Error(ErrorCode::Io, "write failed for session " + session_id);
    }
    if (s->created_at.empty()) s->created_at = record.value("created_at", std::string());
    (record.at("type") == "rating" ? s->ratings : s->attempts).push_back(record);
  }

  ServiceConfig cfg_;
  WarningSink warn_;
  std::optional<PhonemeInventory> owned_inventory_;
  std::optional<feedback::KnowledgeBase> owned_kb_;
  const PhonemeInventory* inventory_ = nullptr;
  const feedback::KnowledgeBase* kb_ = nullptr;
  std::unique_ptr<detect::Aligner> aligner_;
  std::unique_ptr<detect::Recognizer> recognizer_;
  std::mutex recognizer_mu_;

  std::vector<CatalogEntry> catalog_;
  std::map<std::string, std::size_t> catalog_index_;
  json sentences_json_;
  std::string catalog_problem_;

  mutable std::shared_mutex index_mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace capt::service
