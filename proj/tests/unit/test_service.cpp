#include <catch_amalgamated.hpp>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <sstream>
#include <thread>

#include "capt/service.hpp"
#include "capt/tone_code.hpp"
#include "support/tempdir.hpp"

using namespace capt;
using namespace capt::service;
using testing_support::TempDir;

namespace {

const PhonemeInventory& inv() { return PhonemeInventory::builtin(); }

ServiceConfig config_for(const TempDir& dir) {
  ServiceConfig c;
  c.data_dir = dir / "data";
  c.catalog = CAPT_DATA_DIR "/catalog.tsv";
  return c;
}

void quiet(const std::string&) {}

json body_of(const Response& r) { return json::parse(r.body); }

json catalog_entry(CaptService& svc, const std::string& id) {
  for (const auto& s : body_of(svc.get_sentences()))
    if (s["sentence_id"] == id) return s;
  FAIL("no sentence " << id);
  return {};
}

json attempt(const std::string& session, const std::string& sentence, const std::string& ipa) {
  return {{"session_id", session}, {"sentence_id", sentence}, {"phonemes", ipa}};
}

std::string wav_b64(const audio::AudioBuffer& b) { return httplib::detail::base64_encode(audio::serialize_wav(b)); }

struct FailingRecognizer : detect::Recognizer {
  detect::RecognizerOutput recognize(const audio::AudioBuffer&) override {
    throw Error(ErrorCode::RecognizerUnavailable, "connection refused");
  }
};

}  // namespace

TEST_CASE("sentence catalog") {
  TempDir dir;
  CaptService svc(config_for(dir), nullptr, quiet);
  const auto r = svc.handle("GET", "/api/sentences");
  REQUIRE(r.status == 200);
  const auto arr = body_of(r);
  CHECK(arr.size() >= 13);
  CHECK(svc.handle("GET", "/api/sentences").body == r.body);
  for (const auto& s : arr) {
    CHECK(s["canonical"].back() == kEos);
    CHECK(s.contains("text"));
    CHECK(s.contains("difficulty"));
    CHECK(s["canonical_ipa"] == format_ipa(inv(), g2p::to_phonemes(s["text"].get<std::string>()).sequence));
  }
}

TEST_CASE("catalog covers the thirteen practice phonemes") {
  TempDir dir;
  CaptService svc(config_for(dir), nullptr, quiet);
  std::set<TokenId> seen;
  for (const auto& s : body_of(svc.get_sentences()))
    for (TokenId t : s["canonical"]) seen.insert(t);
  for (const char* ipa : {"ʈ", "ɖ", "t̪", "d̪", "tʃʰ", "dʒʱ", "kʰ", "gʱ", "bʱ", "ɽ", "ɳ", "ʂ", "ɦ"}) {
    INFO(ipa);
    CHECK(seen.count(inv().id_of(ipa)) == 1);
  }
}

TEST_CASE("missing or empty catalog gives 503") {
  TempDir dir;
  auto cfg = config_for(dir);
  cfg.catalog = dir / "nope.tsv";
  CaptService svc(cfg, nullptr, quiet);
  CHECK(svc.handle("GET", "/api/sentences").status == 503);
  CHECK(svc.handle("POST", "/api/attempts", attempt("s1", "c01", "k").dump()).status == 503);
  text::write_file(dir / "empty.tsv", "# nothing\n");
  cfg.catalog = dir / "empty.tsv";
  CaptService svc2(cfg, nullptr, quiet);
  CHECK(svc2.handle("GET", "/api/sentences").status == 503);
}

TEST_CASE("canonical attempt flags nothing") {
  TempDir dir;
  CaptService svc(config_for(dir), nullptr, quiet);
  const auto s = catalog_entry(svc, "c01");
  const auto r = svc.handle("POST", "/api/attempts", attempt("s1", "c01", s["canonical_ipa"]).dump());
  REQUIRE(r.status == 201);
  const auto j = body_of(r);
  const auto words = PhonemeSequence::from_tokens(s["canonical"].get<std::vector<TokenId>>()).word_count();
  CHECK(j["reports"].size() == words);
  for (const auto& rep : j["reports"]) CHECK(rep["mispronounced"] == false);
  CHECK(j["feedback"].empty());
  CHECK(j["input_kind"] == "phonemes");
}

TEST_CASE("dental for retroflex flags one word with a place contrast") {
  TempDir dir;
  CaptService svc(config_for(dir), nullptr, quiet);
  const auto s = catalog_entry(svc, "c01");  // टमाटर लाल है
  auto ipa = s["canonical_ipa"].get<std::string>();
  REQUIRE(ipa.rfind("ʈ", 0) == 0);
  ipa.replace(0, std::string("ʈ").size(), "t̪");
  const auto j = body_of(svc.handle("POST", "/api/attempts", attempt("s1", "c01", ipa).dump()));
  int flagged = 0;
  for (const auto& rep : j["reports"]) flagged += rep["mispronounced"].get<bool>();
  CHECK(flagged == 1);
  REQUIRE(j["feedback"].size() == 1);
  CHECK(j["feedback"][0]["contrast_points"][0]["feature"] == "place");
  CHECK(j["feedback"][0]["word_index"] == 0);
}

TEST_CASE("service reports equal direct library analysis byte for byte") {
  TempDir dir;
  CaptService svc(config_for(dir), nullptr, quiet);
  CounterRng rng(31);
  const corpus::ConfusionTable table(inv());
  for (const auto& s : body_of(svc.get_sentences())) {
    const auto canonical = PhonemeSequence::from_tokens(s["canonical"].get<std::vector<TokenId>>());
    for (int k = 0; k < 4; ++k) {
      const auto inj = corpus::inject_errors(canonical, 0.2, rng(), table);
      const auto r = svc.handle("POST", "/api/attempts",
                                attempt("parity", s["sentence_id"], format_ipa(inv(), inj.corrupted)).dump());
      REQUIRE(r.status == 201);
      const auto direct = detect::to_json(detect::analyze(canonical, inj.corrupted).reports).dump();
      REQUIRE(body_of(r)["reports"].dump() == direct);
    }
  }
}

TEST_CASE("phoneme input accepts lists and rejects unknown symbols") {
  TempDir dir;
  CaptService svc(config_for(dir), nullptr, quiet);
  const auto s = catalog_entry(svc, "c08");
  const auto words = decode(inv(), PhonemeSequence::from_tokens(s["canonical"].get<std::vector<TokenId>>()));
  json list = json::array();
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (w) list.push_back("|");
    for (const auto& p : words[w]) list.push_back(p);
  }
  json req = {{"session_id", "s1"}, {"sentence_id", "c08"}, {"phonemes", list}};
  const auto ok = body_of(svc.handle("POST", "/api/attempts", req.dump()));
  for (const auto& rep : ok["reports"]) CHECK(rep["mispronounced"] == false);

  const auto bad = svc.handle("POST", "/api/attempts", attempt("s1", "c08", "g ə zz").dump());
  CHECK(bad.status == 422);
  CHECK(body_of(bad)["symbol"] == "zz");
  CHECK(svc.handle("POST", "/api/attempts", attempt("s1", "c99", "g").dump()).status == 404);
  CHECK(svc.handle("POST", "/api/attempts", attempt("bad id!", "c08", "g").dump()).status == 422);
  CHECK(svc.handle("POST", "/api/attempts", "{not json").status == 400);
  json both = attempt("s1", "c08", "g");
  both["audio"] = "";
  CHECK(svc.handle("POST", "/api/attempts", both.dump()).status == 422);
}

TEST_CASE("audio attempts go through the recognizer") {
  TempDir dir;
  CaptService svc(config_for(dir), nullptr, quiet);
  const auto s = catalog_entry(svc, "c05");
  const auto canonical = PhonemeSequence::from_tokens(s["canonical"].get<std::vector<TokenId>>());
  json req = {{"session_id", "a1"}, {"sentence_id", "c05"}, {"audio", wav_b64(tone::render(canonical, 3))}};
  const auto r = svc.handle("POST", "/api/attempts", req.dump());
  REQUIRE(r.status == 201);
  const auto j = body_of(r);
  CHECK(j["input_kind"] == "audio");
  CHECK(j["predicted"] == s["canonical"]);
  for (const auto& rep : j["reports"]) CHECK(rep["mispronounced"] == false);

  req["audio"] = wav_b64(audio::resample(tone::render(canonical, 3), 16000));
  CHECK(svc.handle("POST", "/api/attempts", req.dump()).status == 422);
  req["audio"] = httplib::detail::base64_encode("RIFFjunk");
  CHECK(svc.handle("POST", "/api/attempts", req.dump()).status == 422);
}

TEST_CASE("recognizer failure gives 502") {
  TempDir dir;
  CaptService svc(config_for(dir), std::make_unique<FailingRecognizer>(), quiet);
  json req = {{"session_id", "a1"}, {"sentence_id", "c05"}, {"audio", wav_b64(tone::render(PhonemeSequence::from_tokens({1, kEos}), 0))}};
  const auto r = svc.handle("POST", "/api/attempts", req.dump());
  CHECK(r.status == 502);
  CHECK(body_of(r)["error"] == "RecognizerUnavailable");
  CHECK(svc.handle("GET", "/api/sessions/a1").status == 404);
}

TEST_CASE("phoneme list and diagrams") {
  TempDir dir;
  CaptService svc(config_for(dir), nullptr, quiet);
  const auto ph = body_of(svc.handle("GET", "/api/phonemes"));
  REQUIRE(ph.size() == 64);
  CHECK(ph[30]["entry"]["descriptors"] == json({"unvoiced", "palatal", "aspirated", "affricate"}));

  const auto d = svc.handle("GET", "/api/phonemes/17/diagram.svg");
  CHECK(d.status == 200);
  CHECK(d.content_type == "image/svg+xml");
  CHECK(d.body == feedback::render_tongue_diagram(17));
  std::istringstream in(d.body);
  boost::property_tree::ptree t;
  CHECK_NOTHROW(boost::property_tree::read_xml(in, t));
  CHECK(svc.handle("GET", "/api/phonemes/9/diagram.svg", {}, {{"size", "128"}}).body == feedback::render_tongue_diagram(9, 128));
  CHECK(svc.handle("GET", "/api/phonemes/64/diagram.svg").status == 404);
  CHECK(svc.handle("GET", "/api/phonemes/x/diagram.svg").status == 404);
  CHECK(svc.handle("GET", "/api/phonemes/-1/diagram.svg").status == 404);
  CHECK(svc.handle("GET", "/api/phonemes/3/diagram.svg", {}, {{"size", "10"}}).status == 422);
  CHECK(svc.handle("GET", "/api/nothing").status == 404);
}

TEST_CASE("ratings and stats") {
  TempDir dir;
  CaptService svc(config_for(dir), nullptr, quiet);
  CHECK(body_of(svc.handle("GET", "/api/stats"))["n"] == 0);
  for (int i = 0; i < 5; ++i) {
    const json r = {{"session_id", "p" + std::to_string(i)}, {"phoneme", "ʈ"}, {"pre", 3}, {"post", 4}};
    REQUIRE(svc.handle("POST", "/api/ratings", r.dump()).status == 201);
  }
  const auto st = body_of(svc.handle("GET", "/api/stats"));
  CHECK(st["n"] == 5);
  CHECK(st["wilcoxon"]["two_sided"]["p_value"].get<double>() == Catch::Approx(0.0625).margin(1e-12));
  CHECK(st["wilcoxon"]["two_sided"]["method"] == "exact");
  CHECK(st["likert"]["post"]["formatted"] == "4.00 ± 0.00");

  auto rating = [&](json r) { return svc.handle("POST", "/api/ratings", r.dump()).status; };
  CHECK(rating({{"session_id", "x"}, {"phoneme", "ʈ"}, {"pre", 6}, {"post", 4}}) == 422);
  CHECK(rating({{"session_id", "x"}, {"phoneme", "ʈ"}, {"pre", 0}, {"post", 4}}) == 422);
  CHECK(rating({{"session_id", "x"}, {"phoneme", "ʈ"}, {"pre", 2.5}, {"post", 4}}) == 422);
  CHECK(rating({{"session_id", "x"}, {"phoneme", "zz"}, {"pre", 2}, {"post", 4}}) == 422);
  CHECK(rating({{"session_id", "x"}, {"phoneme", 99}, {"pre", 2}, {"post", 4}}) == 404);
  CHECK(rating({{"session_id", "x"}, {"phoneme", 0}, {"pre", 2}, {"post", 4}}) == 201);
}

TEST_CASE("sessions survive a restart unchanged") {
  TempDir dir;
  json before;
  {
    CaptService svc(config_for(dir), nullptr, quiet);
    svc.handle("POST", "/api/attempts", attempt("keep", "c03", "t̪ oː t̪ aː").dump());
    svc.handle("POST", "/api/ratings", json({{"session_id", "keep"}, {"phoneme", "t̪"}, {"pre", 2}, {"post", 4}}).dump());
    svc.handle("POST", "/api/attempts", attempt("keep", "c04", "d̪ aː").dump());
    before = body_of(svc.handle("GET", "/api/sessions/keep"));
    CHECK(before["attempts"].size() == 2);
    CHECK(before["ratings"].size() == 1);
  }
  CaptService again(config_for(dir), nullptr, quiet);
  CHECK(body_of(again.handle("GET", "/api/sessions/keep")) == before);
  CHECK(body_of(again.handle("GET", "/api/stats"))["n"] == 1);
}

TEST_CASE("a torn final line is skipped on load") {
  TempDir dir;
  {
    CaptService svc(config_for(dir), nullptr, quiet);
    svc.handle("POST", "/api/ratings", json({{"session_id", "t"}, {"phoneme", "k"}, {"pre", 2}, {"post", 3}}).dump());
  }
  {
    std::ofstream out(dir / "data/sessions/t.jsonl", std::ios::app);
    out << "{\"type\": \"rat";
  }
  std::vector<std::string> warnings;
  CaptService svc(config_for(dir), nullptr, [&](const std::string& w) { warnings.push_back(w); });
  CHECK(body_of(svc.handle("GET", "/api/sessions/t"))["ratings"].size() == 1);
  CHECK(warnings.size() == 1);
}

TEST_CASE("concurrent attempts on one session are all persisted") {
  TempDir dir;
  CaptService svc(config_for(dir), nullptr, quiet);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&] {
      for (int i = 0; i < 10; ++i) svc.handle("POST", "/api/attempts", attempt("busy", "c07", "kʰ eː t̪").dump());
    });
  for (auto& t : threads) t.join();
  CHECK(body_of(svc.handle("GET", "/api/sessions/busy"))["attempts"].size() == 80);
  CaptService again(config_for(dir), nullptr, quiet);
  CHECK(body_of(again.handle("GET", "/api/sessions/busy"))["attempts"].size() == 80);
}

TEST_CASE("config parsing") {
  const auto c = ServiceConfig::from_json({{"port", 9000}, {"data_dir", "/tmp/x"}});
  CHECK(c.port == 9000);
  CHECK(c.data_dir == "/tmp/x");
  CHECK(c.host == "127.0.0.1");
  CHECK_THROWS_AS(ServiceConfig::from_json({{"prot", 1}}), Error);
  CHECK_THROWS_AS(ServiceConfig::from_json({{"port", "x"}}), Error);
}

TEST_CASE("live http round trip") {
  TempDir dir;
  CaptService svc(config_for(dir), nullptr, quiet);
  httplib::Server server;
  std::vector<std::string> log;
  std::mutex log_mu;
  svc.bind(server, [&](const std::string& l) {
    std::lock_guard lock(log_mu);
    log.push_back(l);
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client cli("127.0.0.1", port);
  const auto s = cli.Get("/api/sentences");
  REQUIRE(s);
  CHECK(s->status == 200);
  CHECK(s->body == svc.get_sentences().body);
  const auto a = cli.Post("/api/attempts", attempt("live", "c02", "ɖ aː l").dump(), "application/json");
  REQUIRE(a);
  CHECK(a->status == 201);
  const auto d = cli.Get("/api/phonemes/5/diagram.svg?size=100");
  REQUIRE(d);
  CHECK(d->get_header_value("Content-Type") == "image/svg+xml");
  CHECK(d->body == feedback::render_tongue_diagram(5, 100));
  const auto missing = cli.Get("/api/phonemes/70/diagram.svg");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  server.stop();
  th.join();
  std::lock_guard lock(log_mu);
  REQUIRE(log.size() == 4);
  std::multiset<int> statuses;
  for (const auto& l : log) statuses.insert(json::parse(l)["status"].get<int>());
  CHECK(statuses == std::multiset<int>{200, 200, 201, 404});
}
