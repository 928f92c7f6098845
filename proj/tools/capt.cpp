// capt: command-line driver for the pronunciation-training pipeline.
//
// Exit codes: 0 success, 1 input error, 2 internal error.

#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "capt/corpus.hpp"
#include "capt/detect.hpp"
#include "capt/feedback.hpp"
#include "capt/g2p.hpp"
#include "capt/service.hpp"
#include "capt/stats.hpp"

#ifndef CAPT_DATA_DIR
#define CAPT_DATA_DIR "data"
#endif

namespace {

using json = nlohmann::json;
using namespace capt;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> read_sentences(const std::string& path) {
  std::vector<std::string> out;
  text::for_each_data_line(text::read_file(path), [&](std::string_view line, std::size_t) {
    out.emplace_back(text::trim(line));
  });
  return out;
}

TokenId parse_phoneme_arg(const PhonemeInventory& inv, const std::string& s) {
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const int id = std::stoi(s);
    inv.at(id);
    return id;
  }
  return inv.id_of(s);
}

std::vector<bool> read_flags(const std::string& path) {
  std::vector<bool> flags;
  for (const auto& tok : text::split_ws(text::read_file(path))) {
    if (tok == "1" || tok == "true") flags.push_back(true);
    else if (tok == "0" || tok == "false") flags.push_back(false);
    else throw InputError(path + ": flags must be 0/1, got '" + tok + "'");
  }
  return flags;
}

void write_json(const std::string& path, const json& j) { text::write_file(path, j.dump(2) + "\n"); }

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hindi pronunciation training toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every command");

  // g2p
  auto* g2p_cmd = app.add_subcommand("g2p", "Convert Devanagari text to phonemes");
  std::string g2p_text;
  bool no_schwa = false, g2p_trace = false;
  g2p_cmd->add_option("--text", g2p_text, "Devanagari input")->required();
  g2p_cmd->add_flag("--no-schwa-deletion", no_schwa, "Keep every inherent schwa");
  g2p_cmd->add_flag("--trace", g2p_trace, "Also print the rule trace");

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Build a paired corpus with injected errors");
  std::string synth_sentences, synth_out, tts_url, policy = "confusable";
  std::size_t synth_pairs = 1000;
  double synth_p = 0.05;
  std::uint64_t synth_seed = 0;
  bool stub_tts = false;
  int speakers = 10;
  unsigned synth_jobs = 1;
  synth_cmd->add_option("--sentences", synth_sentences, "Sentence file, one per line")->required();
  synth_cmd->add_option("--pairs", synth_pairs, "Number of pairs")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--p", synth_p, "Per-phoneme error probability");
  synth_cmd->add_option("--seed", synth_seed, "Seed");
  synth_cmd->add_option("--tts-url", tts_url, "Speech synthesis endpoint");
  synth_cmd->add_flag("--stub-tts", stub_tts, "Write tone-coded stand-in audio");
  synth_cmd->add_option("--speakers", speakers, "Speaker count")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--policy", policy, "Substitution policy")->check(CLI::IsMember({"confusable", "uniform"}));
  synth_cmd->add_option("--jobs", synth_jobs, "Worker threads")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--out", synth_out, "Output directory")->required();

  // augment
  auto* aug_cmd = app.add_subcommand("augment", "Add gain/speed variants of corpus audio");
  std::string aug_manifest, aug_out;
  std::vector<double> aug_gain, aug_speed;
  std::size_t aug_variants = 0;
  std::uint64_t aug_seed = 0;
  aug_cmd->add_option("--manifest", aug_manifest, "Input manifest")->required();
  aug_cmd->add_option("--out", aug_out, "Output directory")->required();
  aug_cmd->add_option("--gain-db", aug_gain, "Gain per variant (dB)");
  aug_cmd->add_option("--speed", aug_speed, "Speed factor per variant");
  aug_cmd->add_option("--variants", aug_variants, "Random variants per row");
  aug_cmd->add_option("--seed", aug_seed, "Seed for random variants");

  // detect
  auto* det_cmd = app.add_subcommand("detect", "Detect word-level mispronunciations over a manifest");
  std::string det_manifest, det_report, recognizer = "mock";
  double fidelity = 1.0;
  std::uint64_t det_seed = 0;
  unsigned det_jobs = 1;
  det_cmd->add_option("--manifest", det_manifest, "Manifest to analyze")->required();
  det_cmd->add_option("--recognizer", recognizer, "mock, tone, or a recognizer URL");
  det_cmd->add_option("--fidelity", fidelity, "Mock recognizer fidelity")->check(CLI::Range(0.0, 1.0));
  det_cmd->add_option("--seed", det_seed, "Seed");
  det_cmd->add_option("--jobs", det_jobs, "Worker threads")->check(CLI::PositiveNumber);
  det_cmd->add_option("--report", det_report, "Report JSON path")->required();

  // feedback
  auto* fb_cmd = app.add_subcommand("feedback", "Articulatory feedback for a phoneme confusion");
  std::string fb_expected, fb_produced, fb_locale = "en", fb_diagram;
  int fb_size = 256;
  fb_cmd->add_option("--expected", fb_expected, "Expected phoneme (IPA or id)")->required();
  fb_cmd->add_option("--produced", fb_produced, "Produced phoneme (IPA or id); omit for a deletion");
  fb_cmd->add_option("--locale", fb_locale, "en or hi")->check(CLI::IsMember({"en", "hi"}));
  fb_cmd->add_option("--diagram", fb_diagram, "Write the expected phoneme's SVG here");
  fb_cmd->add_option("--size", fb_size, "Diagram size in pixels");

  // eval-metrics
  auto* em_cmd = app.add_subcommand("eval-metrics", "Precision/recall/F1 from word flag files");
  std::string em_gold, em_pred, em_out;
  em_cmd->add_option("--gold", em_gold, "Gold flags (0/1 tokens)")->required();
  em_cmd->add_option("--predicted", em_pred, "Predicted flags (0/1 tokens)")->required();
  em_cmd->add_option("--out", em_out, "Metrics JSON path");

  // eval-wilcoxon
  auto* ew_cmd = app.add_subcommand("eval-wilcoxon", "Wilcoxon signed-rank (Pratt) on survey ratings");
  std::string ew_csv, ew_alt = "two_sided", ew_out;
  ew_cmd->add_option("--csv", ew_csv, "participant_id,phoneme,pre,post CSV")->required();
  ew_cmd->add_option("--alternative", ew_alt, "two_sided or greater")->check(CLI::IsMember({"two_sided", "greater"}));
  ew_cmd->add_option("--out", ew_out, "Result JSON path");

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "Run the practice HTTP service");
  std::string serve_config;
  int serve_port = 0;
  serve_cmd->add_option("--config", serve_config, "Service config JSON");
  serve_cmd->add_option("--port", serve_port, "Override the configured port");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const auto& inv = PhonemeInventory::builtin();

    if (*g2p_cmd) {
      g2p::Options opt;
      opt.schwa_deletion = !no_schwa;
      const auto r = g2p::to_phonemes(g2p_text, opt);
      std::cout << format_ipa(inv, r.sequence) << '\n';
      if (g2p_trace)
        for (const auto& t : r.trace) std::cout << t.akshara << '\t' << g2p::to_string(t.rule) << '\n';
      return 0;
    }

    if (*synth_cmd) {
      if (!tts_url.empty() && stub_tts) throw InputError("--tts-url and --stub-tts are exclusive");
      corpus::BuildOptions opt;
      opt.n_pairs = synth_pairs;
      opt.p_error = synth_p;
      opt.seed = synth_seed;
      opt.speaker_count = speakers;
      opt.policy = policy == "uniform" ? corpus::ConfusionPolicy::uniform : corpus::ConfusionPolicy::confusable;
      opt.out_dir = synth_out;
      opt.jobs = synth_jobs;
      std::unique_ptr<corpus::TtsClient> tts;
      if (!tts_url.empty()) tts = std::make_unique<corpus::HttpTtsClient>(tts_url);
      else if (stub_tts) tts = std::make_unique<corpus::StubTtsClient>();
      opt.tts = tts.get();
      const auto m = corpus::build_corpus(read_sentences(synth_sentences), opt);
      std::filesystem::create_directories(synth_out);
      const auto path = (std::filesystem::path(synth_out) / "manifest.jsonl").string();
      corpus::write_manifest(path, m);
      std::size_t marked = 0, positions = 0, with_audio = 0;
      for (const auto& e : m.entries) {
        marked += e.error_vector.count();
        positions += e.error_vector.bits.size();
        with_audio += e.audio_paths.has_value();
      }
      std::cout << "pairs " << m.entries.size() << "\npositions " << positions << "\nerror rate "
                << fixed3(stats::safe_ratio(marked, positions)) << "\nwith audio " << with_audio << "\nmanifest " << path
                << '\n';
      return 0;
    }

    if (*aug_cmd) {
      const auto m = corpus::read_manifest(aug_manifest);
      const auto dir = std::filesystem::path(aug_manifest).parent_path().string();
      corpus::AugmentResult r;
      if (aug_variants > 0) {
        if (!aug_gain.empty() || !aug_speed.empty()) throw InputError("--variants excludes --gain-db/--speed");
        r = corpus::augment_corpus(m, aug_variants, aug_seed, dir.empty() ? "." : dir, aug_out);
      } else {
        if (aug_gain.empty() && aug_speed.empty()) throw InputError("give --variants or --gain-db/--speed");
        if (aug_gain.empty()) aug_gain.assign(aug_speed.size(), 0.0);
        if (aug_speed.empty()) aug_speed.assign(aug_gain.size(), 1.0);
        if (aug_gain.size() != aug_speed.size()) throw InputError("--gain-db and --speed counts differ");
        std::vector<audio::AugmentSpec> specs;
        for (std::size_t i = 0; i < aug_gain.size(); ++i) specs.emplace_back(aug_gain[i], aug_speed[i]);
        r = corpus::augment_corpus(m, specs, dir.empty() ? "." : dir, aug_out);
      }
      std::filesystem::create_directories(aug_out);
      const auto path = (std::filesystem::path(aug_out) / "manifest.jsonl").string();
      corpus::write_manifest(path, r.manifest);
      std::cout << "rows " << r.manifest.entries.size() << "\nskipped " << r.skipped_rows.size() << "\nmanifest "
                << path << '\n';
      return 0;
    }

    if (*det_cmd) {
      const auto m = corpus::read_manifest(det_manifest);
      detect::BatchOptions opt;
      opt.fidelity = fidelity;
      opt.seed = det_seed;
      opt.jobs = det_jobs;
      opt.manifest_dir = std::filesystem::path(det_manifest).parent_path().string();
      std::unique_ptr<detect::Recognizer> rec;
      if (recognizer == "tone") rec = std::make_unique<detect::ToneRecognizer>();
      else if (recognizer != "mock") rec = std::make_unique<detect::HttpRecognizer>(recognizer);
      opt.recognizer = rec.get();
      const auto r = detect::detect_manifest(m, opt);
      write_json(det_report, detect::to_json(r, m));
      std::cout << "utterances " << r.utterances.size() << "\nprecision " << fixed3(r.metrics.precision) << "\nrecall "
                << fixed3(r.metrics.recall) << "\nF1 " << fixed3(r.metrics.f1) << "\nPER "
                << fixed3(r.phoneme_error_rate) << '\n';
      return 0;
    }

    if (*fb_cmd) {
      const auto loc = feedback::parse_locale(fb_locale);
      const auto expected = parse_phoneme_arg(inv, fb_expected);
      std::optional<TokenId> produced;
      if (!fb_produced.empty()) produced = parse_phoneme_arg(inv, fb_produced);
      const auto msg = feedback::compose_feedback(expected, produced, feedback::KnowledgeBase::builtin(), inv, loc);
      std::cout << feedback::to_json(msg, inv).dump(2) << '\n';
      if (!fb_diagram.empty()) text::write_file(fb_diagram, feedback::render_tongue_diagram(expected, fb_size));
      return 0;
    }

    if (*em_cmd) {
      const auto m = stats::compute_metrics(read_flags(em_gold), read_flags(em_pred));
      if (!em_out.empty()) write_json(em_out, stats::to_json(m));
      std::cout << "precision " << fixed3(m.precision) << "\nrecall " << fixed3(m.recall) << "\nF1 " << fixed3(m.f1)
                << '\n';
      return 0;
    }

    if (*ew_cmd) {
      const auto samples = stats::parse_survey_csv(text::read_file(ew_csv));
      const auto alt = ew_alt == "greater" ? stats::Alternative::greater : stats::Alternative::two_sided;
      const auto w = stats::wilcoxon_pratt(samples, alt);
      const auto lk = stats::summarize_likert(samples);
      if (!ew_out.empty()) write_json(ew_out, {{"wilcoxon", stats::to_json(w)}, {"likert", stats::to_json(lk)}});
      std::cout << "n " << w.n_total << " (nonzero " << w.n_nonzero << ")\nW " << w.w_statistic << "\np "
                << w.p_value << " (" << stats::to_string(w.method) << ", " << stats::to_string(alt) << ")\n";
      if (w.degenerate) std::cout << "DegenerateSample: every difference is zero\n";
      std::cout << "phoneme\tpre\tpost\tdelta\n";
      for (const auto& [ph, s] : lk.per_phoneme)
        std::cout << ph << '\t' << s.pre.formatted << '\t' << s.post.formatted << '\t' << fixed3(s.mean_delta) << '\n';
      std::cout << "all\t" << lk.pre.formatted << '\t' << lk.post.formatted << '\n';
      return 0;
    }

    if (*serve_cmd) {
      auto cfg = serve_config.empty() ? service::ServiceConfig{} : service::ServiceConfig::load_file(serve_config);
      if (cfg.catalog.empty()) cfg.catalog = std::string(CAPT_DATA_DIR) + "/catalog.tsv";
      if (serve_port > 0) cfg.port = serve_port;
      service::CaptService svc(cfg);
      httplib::Server server;
      svc.bind(server);
      static httplib::Server* running = &server;
      std::signal(SIGINT, [](int) { running->stop(); });
      std::signal(SIGTERM, [](int) { running->stop(); });
      std::cerr << "listening on " << cfg.host << ':' << cfg.port << '\n';
      if (!server.listen(cfg.host, cfg.port)) {
        std::cerr << "error: cannot listen on " << cfg.host << ':' << cfg.port << '\n';
        return 1;
      }
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
