#include <catch_amalgamated.hpp>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <sstream>

#include "capt/feedback.hpp"

using namespace capt;
using namespace capt::feedback;
namespace pt = boost::property_tree;

namespace {

const PhonemeInventory& inv() { return PhonemeInventory::builtin(); }
const KnowledgeBase& kb() { return KnowledgeBase::builtin(); }

pt::ptree parse_xml(const std::string& s) {
  std::istringstream in(s);
  pt::ptree t;
  pt::read_xml(in, t);
  return t;
}

/// Visits every element below `node`, passing its tag and subtree.
void walk(const pt::ptree& node, const std::function<void(const std::string&, const pt::ptree&)>& fn) {
  for (const auto& [tag, child] : node) {
    if (tag == "<xmlattr>" || tag == "<xmlcomment>") continue;
    fn(tag, child);
    walk(child, fn);
  }
}

std::string attr(const pt::ptree& el, const std::string& name) { return el.get<std::string>("<xmlattr>." + name, ""); }

std::string replace_row(std::string tsv, const std::string& prefix, const std::string& row) {
  std::string out;
  for (const auto& l : text::split(tsv, '\n')) {
    if (l.empty()) continue;
    out += (l.rfind(prefix, 0) == 0 ? row : l) + "\n";
  }
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

}  // namespace

TEST_CASE("knowledge base covers all 64 phonemes") {
  REQUIRE(kb().size() == 64);
  for (TokenId id = 0; id < 64; ++id) {
    const auto& e = get_entry(id);
    CHECK(e.phoneme_id == id);
    CHECK(e.ipa == inv().at(id).ipa);
    for (auto f : {TextField::tongue, TextField::lips, TextField::teeth, TextField::airflow, TextField::voicing}) {
      CHECK_FALSE(e.text(f).empty());
      CHECK_FALSE(e.text(f, Locale::hi).empty());
    }
    CHECK(e.descriptors == descriptors_for(inv().at(id).features));
  }
  CHECK_THROWS_AS(get_entry(64), Error);
}

TEST_CASE("shipped knowledge base file matches the embedded copy") {
  const auto file = KnowledgeBase::load_file(CAPT_DATA_DIR "/knowledge_base.tsv");
  for (TokenId id = 0; id < 64; ++id) CHECK(to_json(file.get_entry(id)) == to_json(kb().get_entry(id)));
}

TEST_CASE("unvoiced palatal aspirated affricate descriptors") {
  const auto& e = get_entry(inv().id_of("tʃʰ"));
  CHECK(e.descriptors == std::vector<std::string>{"unvoiced", "palatal", "aspirated", "affricate"});
}

TEST_CASE("velum is open exactly for nasal sounds") {
  for (const auto& p : inv().phonemes()) {
    const bool nasal = p.features.manner == Manner::nasal || p.features.nasalized;
    CHECK(get_entry(p.id).diagram.velum_open == nasal);
  }
  CHECK(get_entry(inv().id_of("m")).diagram.velum_open);
}

TEST_CASE("identical phonemes give a correct headline") {
  const auto m = compose_feedback(inv().id_of("k"), inv().id_of("k"));
  CHECK(m.headline == "correct");
  CHECK(m.contrast_points.empty());
}

TEST_CASE("retroflex heard as dental") {
  const auto m = compose_feedback(inv().id_of("ʈ"), inv().id_of("t̪"));
  REQUIRE(m.contrast_points.size() == 1);
  CHECK(m.contrast_points[0].feature == Feature::place);
  CHECK(m.contrast_points[0].expected_value == "retroflex");
  CHECK(m.contrast_points[0].produced_value == "dental");
  CHECK_THAT(m.contrast_points[0].instruction, Catch::Matchers::ContainsSubstring("curl the tongue tip back"));
  CHECK_THAT(m.contrast_points[0].instruction,
             Catch::Matchers::ContainsSubstring(get_entry(inv().id_of("ʈ")).tongue_text));
}

TEST_CASE("aspiration contrast references the airflow text") {
  const auto m = compose_feedback(inv().id_of("pʰ"), inv().id_of("p"));
  REQUIRE(m.contrast_points.size() == 1);
  CHECK(m.contrast_points[0].feature == Feature::aspirated);
  CHECK_THAT(m.contrast_points[0].instruction,
             Catch::Matchers::ContainsSubstring(get_entry(inv().id_of("pʰ")).airflow_text));
}

TEST_CASE("deletion yields full articulation instructions") {
  const auto id = inv().id_of("ɖ");
  const auto m = compose_feedback(id, std::nullopt);
  CHECK(m.contrast_points.empty());
  REQUIRE(m.articulation.size() == 5);
  CHECK(m.articulation[0] == get_entry(id).tongue_text);
  CHECK(m.diagram_refs == std::vector<std::string>{"/api/phonemes/" + std::to_string(id) + "/diagram.svg"});
}

TEST_CASE("contrast points enumerate exactly the differing features") {
  for (const auto& a : inv().phonemes())
    for (const auto& b : inv().phonemes()) {
      if (a.id == b.id) continue;
      const auto m = compose_feedback(a.id, b.id);
      std::vector<Feature> got;
      for (const auto& cp : m.contrast_points) got.push_back(cp.feature);
      REQUIRE(got == differing_features(a.features, b.features));
    }
}

TEST_CASE("hindi locale uses the hindi fields") {
  const auto m = compose_feedback(inv().id_of("ʈ"), inv().id_of("t̪"), kb(), inv(), Locale::hi);
  REQUIRE(m.contrast_points.size() == 1);
  CHECK_THAT(m.contrast_points[0].instruction,
             Catch::Matchers::ContainsSubstring(get_entry(inv().id_of("ʈ")).tongue_text_hi));
  CHECK(compose_feedback(3, 3, kb(), inv(), Locale::hi).headline == "सही");
  CHECK(parse_locale("hi") == Locale::hi);
  CHECK_THROWS_AS(parse_locale("fr"), Error);
}

TEST_CASE("feedback json shape") {
  const auto j = to_json(compose_feedback(inv().id_of("ʈ"), inv().id_of("t̪")));
  CHECK(j["expected_ipa"] == "ʈ");
  CHECK(j["produced_ipa"] == "t̪");
  CHECK(j["contrast_points"][0]["feature"] == "place");
  CHECK(j["diagram_refs"].size() == 2);
}

TEST_CASE("every diagram is a well-formed svg with one closed tongue path") {
  for (TokenId id = 0; id < 64; ++id) {
    INFO(inv().at(id).ipa);
    const auto svg = render_tongue_diagram(id);
    const auto doc = parse_xml(svg);
    const auto& root = doc.get_child("svg");
    CHECK(attr(root, "viewBox") == "0 0 256 256");
    CHECK(attr(root, "xmlns") == "http://www.w3.org/2000/svg");
    int tongues = 0, paths = 0;
    walk(root, [&](const std::string& tag, const pt::ptree& el) {
      if (tag != "path") return;
      ++paths;
      if (attr(el, "id") == "tongue") ++tongues;
      const auto d = std::string(text::trim(attr(el, "d")));
      REQUIRE_FALSE(d.empty());
      CHECK(d.front() == 'M');
      CHECK(d.back() == 'Z');
    });
    CHECK(tongues == 1);
    CHECK(paths >= 5);
  }
}

TEST_CASE("diagrams are deterministic and scale with size") {
  const auto id = inv().id_of("ʈ");
  CHECK(render_tongue_diagram(id) == render_tongue_diagram(id));
  const auto big = render_tongue_diagram(id, 512);
  CHECK(attr(parse_xml(big).get_child("svg"), "viewBox") == "0 0 512 512");
  CHECK(big != render_tongue_diagram(id));
  CHECK_THROWS_AS(render_tongue_diagram(id, 32), Error);
}

TEST_CASE("diagram glyphs follow the entry parameters") {
  const auto nasal = parse_xml(render_tongue_diagram(inv().id_of("m")));
  const auto oral = parse_xml(render_tongue_diagram(inv().id_of("b")));
  auto velum_state = [](const pt::ptree& doc) {
    std::string s;
    walk(doc, [&](const std::string& tag, const pt::ptree& el) {
      if (tag == "path" && attr(el, "id") == "velum") s = attr(el, "data-state");
    });
    return s;
  };
  CHECK(velum_state(nasal) == "open");
  CHECK(velum_state(oral) == "closed");
}

TEST_CASE("dental tongue front sits closer to the teeth than velar") {
  const auto& dental = get_entry(inv().id_of("t̪")).diagram.tongue_spline;
  const auto& velar = get_entry(inv().id_of("k")).diagram.tongue_spline;
  CHECK(dental[0].x < velar[0].x);
  CHECK(dental != velar);
  CHECK(render_tongue_diagram(inv().id_of("t̪")) != render_tongue_diagram(inv().id_of("k")));
}

TEST_CASE("knowledge base validation") {
  const std::string tsv(data::kDefaultKnowledgeBaseTsv);
  SECTION("missing entry lists the gap") {
    std::string cut;
    for (const auto& l : text::split(tsv, '\n'))
      if (!l.empty() && l.rfind("5\t", 0) != 0) cut += l + "\n";
    try {
      KnowledgeBase::parse(cut);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IncompleteKnowledgeBase);
      CHECK_THAT(e.detail(), Catch::Matchers::ContainsSubstring("5 /" + inv().at(5).ipa + "/"));
    }
  }
  SECTION("wrong column count") {
    CHECK(code_of([&] { KnowledgeBase::parse(replace_row(tsv, "7\t", "7\tx")); }) == ErrorCode::MalformedEntry);
  }
  SECTION("descriptors must match the features") {
    const auto row = text::split(tsv.substr(tsv.find("\n30\t") + 1), '\n')[0];
    auto cols = text::split(row, '\t');
    cols[2] = "voiced,palatal,aspirated,affricate";
    CHECK(code_of([&] { KnowledgeBase::parse(replace_row(tsv, "30\t", text::join(cols, "\t"))); }) ==
          ErrorCode::MalformedEntry);
  }
  SECTION("duplicate rows") {
    const auto row = text::split(tsv.substr(tsv.find("\n30\t") + 1), '\n')[0];
    CHECK(code_of([&] { KnowledgeBase::parse(tsv + row + "\n"); }) == ErrorCode::DuplicateToken);
  }
}
