#pragma once

// Detection metrics, Wilcoxon signed-rank test with Pratt's zero handling,
// and Likert summaries.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "capt/error.hpp"
#include "capt/log.hpp"
#include "capt/text.hpp"

namespace capt::stats {

struct ConfusionCounts {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;

  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    tn += o.tn;
    return *this;
  }
  bool operator==(const ConfusionCounts&) const = default;
};

struct Metrics {
  ConfusionCounts counts;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

inline double safe_ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

inline Metrics metrics_from_counts(const ConfusionCounts& c) {
  Metrics m{c};
  m.precision = safe_ratio(static_cast<double>(c.tp), static_cast<double>(c.tp + c.fp));
  m.recall = safe_ratio(static_cast<double>(c.tp), static_cast<double>(c.tp + c.fn));
  m.f1 = safe_ratio(2.0 * m.precision * m.recall, m.precision + m.recall);
  return m;
}

inline ConfusionCounts count_flags(const std::vector<bool>& gold, const std::vector<bool>& predicted) {
  if (gold.size() != predicted.size())
    throw Error(ErrorCode::InconsistentInput, "gold has " + std::to_string(gold.size()) + " flags, predicted has " +
                                                  std::to_string(predicted.size()));
  ConfusionCounts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] && predicted[i]) ++c.tp;
    else if (!gold[i] && predicted[i]) ++c.fp;
    else if (gold[i]) ++c.fn;
    else ++c.tn;
  }
  return c;
}

inline Metrics compute_metrics(const std::vector<bool>& gold, const std::vector<bool>& predicted) {
  return metrics_from_counts(count_flags(gold, predicted));
}

inline nlohmann::json to_json(const Metrics& m) {
  return {{"tp", m.counts.tp}, {"fp", m.counts.fp}, {"fn", m.counts.fn}, {"tn", m.counts.tn},
          {"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
}

// ---------------------------------------------------------------------------
// Wilcoxon signed-rank (Pratt)

struct PairedSample {
  std::string participant_id;
  std::string phoneme;
  int pre = 0;
  int post = 0;
};

inline void validate(const PairedSample& s) {
  if (s.pre < 1 || s.pre > 5 || s.post < 1 || s.post > 5)
    throw Error(ErrorCode::InvalidArgument, "Likert scores must be in 1..5 (got pre=" + std::to_string(s.pre) +
                                                ", post=" + std::to_string(s.post) + ")");
}

enum class Alternative { two_sided, greater };
enum class Method { exact, normal_approx };

constexpr std::string_view to_string(Alternative a) { return a == Alternative::greater ? "greater" : "two_sided"; }
constexpr std::string_view to_string(Method m) { return m == Method::exact ? "exact" : "normal_approx"; }

inline constexpr std::size_t kExactMaxN = 20;

struct WilcoxonResult {
  double w_statistic = 0.0;  // sum of ranks of positive differences
  std::size_t n_nonzero = 0;
  std::size_t n_total = 0;
  double p_value = 1.0;
  Method method = Method::exact;
  Alternative alternative = Alternative::two_sided;
  bool degenerate = false;  // every difference was zero
};

/// Average ranks of |d| over all differences, zeros included.
inline std::vector<double> pratt_ranks(const std::vector<double>& d) {
  std::vector<std::size_t> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::fabs(d[a]) < std::fabs(d[b]); });
  std::vector<double> ranks(d.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && std::fabs(d[order[j + 1]]) == std::fabs(d[order[i]])) ++j;
    const double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

namespace detail {

/// P(W >= w) and P(W <= w) under the null, where W sums a random subset of
/// `ranks`. Ranks are multiples of 1/2, so the distribution is tabulated
/// over doubled ranks.
inline std::pair<double, double> exact_tails(const std::vector<double>& ranks, double w) {
  std::vector<long> r2;
  long total = 0;
  for (double r : ranks) {
    r2.push_back(std::lround(2.0 * r));
    total += r2.back();
  }
  std::vector<double> ways(static_cast<std::size_t>(total) + 1, 0.0);
  ways[0] = 1.0;
  for (long r : r2)
    for (long s = total; s >= r; --s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - r)];
  const double all = std::ldexp(1.0, static_cast<int>(ranks.size()));
  const long w2 = std::lround(2.0 * w);
  double ge = 0.0, le = 0.0;
  for (long s = 0; s <= total; ++s) {
    if (s >= w2) ge += ways[static_cast<std::size_t>(s)];
    if (s <= w2) le += ways[static_cast<std::size_t>(s)];
  }
  return {ge / all, le / all};
}

/// Normal approximation to the same null distribution: mean sum(r)/2,
/// variance sum(r^2)/4 (which absorbs ties and the dropped zeros), with a
/// 0.5 continuity correction.
inline double normal_p(const std::vector<double>& ranks, double w, Alternative alternative) {
  double mean = 0.0, var = 0.0;
  for (double x : ranks) {
    mean += x / 2.0;
    var += x * x / 4.0;
  }
  const double sd = std::sqrt(var);
  const double dev = w - mean;
  if (alternative == Alternative::greater) return 0.5 * std::erfc((dev - 0.5) / sd / std::sqrt(2.0));
  return std::min(1.0, std::erfc(std::max(0.0, std::fabs(dev) - 0.5) / sd / std::sqrt(2.0)));
}

}  // namespace detail

/// Signed-rank test on paired differences. Exact when there are at most 20
/// differences (zeros included), otherwise the normal approximation with
/// tie/zero-corrected variance and a 0.5 continuity correction.
inline WilcoxonResult wilcoxon_pratt(const std::vector<double>& differences,
                                     Alternative alternative = Alternative::two_sided) {
  if (differences.empty()) throw Error(ErrorCode::InvalidArgument, "wilcoxon_pratt needs at least one sample");
  WilcoxonResult r;
  r.alternative = alternative;
  r.n_total = differences.size();
  r.method = r.n_total <= kExactMaxN ? Method::exact : Method::normal_approx;
  const auto ranks = pratt_ranks(differences);
  std::vector<double> nonzero;
  for (std::size_t i = 0; i < differences.size(); ++i) {
    if (differences[i] == 0.0) continue;
    nonzero.push_back(ranks[i]);
    if (differences[i] > 0.0) r.w_statistic += ranks[i];
  }
  r.n_nonzero = nonzero.size();
  if (nonzero.empty()) {
    r.degenerate = true;
    r.p_value = 1.0;
    return r;
  }
  if (r.method == Method::exact) {
    const auto [ge, le] = detail::exact_tails(nonzero, r.w_statistic);
    r.p_value = alternative == Alternative::greater ? ge : std::min(1.0, 2.0 * std::min(ge, le));
    return r;
  }
  r.p_value = detail::normal_p(nonzero, r.w_statistic, alternative);
  return r;
}

inline WilcoxonResult wilcoxon_pratt(const std::vector<PairedSample>& samples,
                                     Alternative alternative = Alternative::two_sided) {
  std::vector<double> d;
  for (const auto& s : samples) {
    validate(s);
    d.push_back(static_cast<double>(s.post - s.pre));
  }
  return wilcoxon_pratt(d, alternative);
}

inline nlohmann::json to_json(const WilcoxonResult& r) {
  return {{"w_statistic", r.w_statistic}, {"n_nonzero", r.n_nonzero},   {"n_total", r.n_total},
          {"p_value", r.p_value},         {"method", to_string(r.method)}, {"alternative", to_string(r.alternative)},
          {"degenerate", r.degenerate}};
}

// ---------------------------------------------------------------------------
// Likert summaries

struct GroupSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample sd; 0 for a single observation
  std::string formatted;
};

inline std::string format_mean_sd(double mean, double sd) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f \xC2\xB1 %.2f", mean, sd);
  return buf;
}

inline GroupSummary summarize(const std::vector<double>& xs) {
  if (xs.empty()) throw Error(ErrorCode::InvalidArgument, "empty group");
  GroupSummary g;
  g.n = xs.size();
  g.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(g.n);
  if (g.n > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - g.mean) * (x - g.mean);
    g.sd = std::sqrt(ss / static_cast<double>(g.n - 1));
  }
  g.formatted = format_mean_sd(g.mean, g.sd);
  return g;
}

/// Summaries per named group of single-question scores; empty groups are
/// dropped with a warning.
inline std::map<std::string, GroupSummary> summarize_groups(const std::map<std::string, std::vector<double>>& groups,
                                                            const WarningSink& warn = stderr_warning) {
  std::map<std::string, GroupSummary> out;
  for (const auto& [name, xs] : groups) {
    if (xs.empty()) {
      warn("group '" + name + "' is empty; omitted");
      continue;
    }
    out.emplace(name, summarize(xs));
  }
  return out;
}

struct PhonemeLikert {
  GroupSummary pre;
  GroupSummary post;
  double mean_delta = 0.0;
};

struct LikertSummary {
  GroupSummary pre;
  GroupSummary post;
  std::map<std::string, PhonemeLikert> per_phoneme;
};

inline LikertSummary summarize_likert(const std::vector<PairedSample>& samples) {
  if (samples.empty()) throw Error(ErrorCode::InvalidArgument, "no ratings");
  std::vector<double> pre, post;
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> by;
  for (const auto& s : samples) {
    validate(s);
    pre.push_back(s.pre);
    post.push_back(s.post);
    by[s.phoneme].first.push_back(s.pre);
    by[s.phoneme].second.push_back(s.post);
  }
  LikertSummary out{summarize(pre), summarize(post), {}};
  for (const auto& [ph, v] : by) {
    PhonemeLikert p{summarize(v.first), summarize(v.second), 0.0};
    p.mean_delta = p.post.mean - p.pre.mean;
    out.per_phoneme.emplace(ph, p);
  }
  return out;
}

inline nlohmann::json to_json(const GroupSummary& g) {
  return {{"n", g.n}, {"mean", g.mean}, {"sd", g.sd}, {"formatted", g.formatted}};
}

inline nlohmann::json to_json(const LikertSummary& s) {
  nlohmann::json per = nlohmann::json::object();
  for (const auto& [ph, p] : s.per_phoneme)
    per[ph] = {{"pre", to_json(p.pre)}, {"post", to_json(p.post)}, {"mean_delta", p.mean_delta}};
  return {{"pre", to_json(s.pre)}, {"post", to_json(s.post)}, {"per_phoneme", per}};
}

// ---------------------------------------------------------------------------
// Survey CSV: participant_id,phoneme,pre,post

inline std::vector<PairedSample> parse_survey_csv(std::string_view content) {
  std::vector<PairedSample> out;
  bool header_seen = false;
  std::size_t line_no = 0;
  for (auto line : text::split(content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (text::trim(line).empty()) continue;
    auto cols = text::split(line, ',');
    for (auto& c : cols) c = std::string(text::trim(c));
    if (!header_seen) {
      if (cols != std::vector<std::string>{"participant_id", "phoneme", "pre", "post"})
        throw Error(ErrorCode::InvalidArgument, "survey CSV header must be participant_id,phoneme,pre,post");
      header_seen = true;
      continue;
    }
    if (cols.size() != 4)
      throw Error(ErrorCode::InvalidArgument, "line " + std::to_string(line_no) + ": expected 4 columns");
    PairedSample s{cols[0], cols[1], 0, 0};
    try {
      std::size_t used = 0;
      s.pre = std::stoi(cols[2], &used);
      if (used != cols[2].size()) throw std::invalid_argument("trailing");
      s.post = std::stoi(cols[3], &used);
      if (used != cols[3].size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "line " + std::to_string(line_no) + ": scores must be integers");
    }
    try {
      validate(s);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidArgument, "line " + std::to_string(line_no) + ": " + e.what());
    }
    out.push_back(std::move(s));
  }
  if (!header_seen) throw Error(ErrorCode::InvalidArgument, "survey CSV is empty");
  return out;
}

}  // namespace capt::stats
