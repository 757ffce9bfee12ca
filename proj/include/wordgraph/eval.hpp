#pragma once

// Gold-set handling, confusion counts, precision/recall/F1, and the
// five-algorithm comparison report.

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "wordgraph/corpus.hpp"
#include "wordgraph/errors.hpp"
#include "wordgraph/wordrank.hpp"

namespace wordgraph {

// Reference set of relevant words (stemmed forms).
struct GoldSet {
  std::set<std::string> relevant;
};

// POS tags treated as relevance markers by default: the noun family.
inline const std::set<std::string> kDefaultGoldTags = {"NN", "NNP", "NNC",
                                                       "NNPC"};

// Reads a gold file: UTF-8, one word per line, '#' starts a comment.
// Entries are taken verbatim; pass the preprocessing config the corpus
// ran through so the words line up with the graph's stemmed labels.
inline GoldSet load_gold(const std::string& path,
                         const PreprocessConfig* config = nullptr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open gold file: " + path);
  GoldSet gold;
  for (auto& word : read_word_list(in))
    gold.relevant.insert(config ? stem(word, *config) : std::move(word));
  if (gold.relevant.empty())
    throw EmptyInputError("gold file holds no words: " + path);
  return gold;
}

// Collects the stems of every token whose POS tag is in the relevant
// set. Run this on the preprocessed document so the stems match the
// graph's edge labels.
inline GoldSet derive_gold_from_pos(const TokenizedDocument& doc,
                                    const std::set<std::string>& relevant_tags =
                                        kDefaultGoldTags) {
  GoldSet gold;
  for (const auto& sentence : doc.sentences)
    for (const Token& token : sentence)
      if (relevant_tags.count(token.pos_tag)) gold.relevant.insert(token.stem);
  if (gold.relevant.empty())
    throw EmptyInputError("no token carries a relevant POS tag");
  return gold;
}

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
};

// Splits the ranked vocabulary against the gold set: the top_k ranked
// words are the predictions. A top_k beyond the vocabulary is clamped,
// with a note on `warnings` when given.
inline ConfusionCounts confusion(const WordRanking& ranking,
                                 const GoldSet& gold, std::size_t top_k,
                                 std::ostream* warnings = nullptr) {
  if (top_k == 0) throw ConfigError("top_k must be positive");
  if (top_k > ranking.entries.size()) {
    if (warnings)
      *warnings << "warning: top_k " << top_k << " exceeds the vocabulary ("
                << ranking.entries.size() << " words); clamping\n";
    top_k = ranking.entries.size();
  }
  ConfusionCounts c;
  std::size_t relevant_in_vocab = 0;
  for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
    const bool is_gold = gold.relevant.count(ranking.entries[i].word) > 0;
    relevant_in_vocab += is_gold;
    if (i < top_k)
      ++(is_gold ? c.tp : c.fp);
  }
  c.fn = relevant_in_vocab - c.tp;
  c.tn = ranking.entries.size() - c.tp - c.fp - c.fn;
  return c;
}

inline double precision(const ConfusionCounts& c) {
  const std::size_t denom = c.tp + c.fp;
  return denom == 0 ? 0.0 : static_cast<double>(c.tp) / denom;
}

inline double recall(const ConfusionCounts& c) {
  const std::size_t denom = c.tp + c.fn;
  return denom == 0 ? 0.0 : static_cast<double>(c.tp) / denom;
}

inline double f1(double precision_value, double recall_value) {
  const double sum = precision_value + recall_value;
  return sum == 0.0 ? 0.0 : 2.0 * precision_value * recall_value / sum;
}

inline double f1(const ConfusionCounts& c) {
  return f1(precision(c), recall(c));
}

struct EvalRow {
  std::string algorithm;
  std::size_t word_count = 0;  // ranked vocabulary size
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  ConfusionCounts counts;
  bool converged = true;
};

struct EvalReport {
  std::vector<EvalRow> rows;
  std::size_t top_k = 0;
};

// The five algorithm families compared in one report row each.
inline constexpr std::array<const char*, 5> kReportAlgorithms = {
    "minmax", "refscore", "hits-r1", "ppf", "pagerank",
};

inline EvalRow evaluate_ranking(const WordRanking& ranking,
                                const GoldSet& gold, std::size_t top_k,
                                std::ostream* warnings = nullptr) {
  EvalRow row;
  row.algorithm = ranking.algorithm;
  row.word_count = ranking.entries.size();
  row.counts = confusion(ranking, gold, top_k, warnings);
  row.precision = precision(row.counts);
  row.recall = recall(row.counts);
  row.f1 = f1(row.counts);
  row.converged = ranking.converged;
  return row;
}

// Ranks the graph with each of the five algorithm families under
// identical parameters and scores every ranking against the gold set.
// A top_k of zero defaults to the gold-set size, matching prediction
// and reference set sizes.
inline EvalReport compare_algorithms(const WordGraph& g, const GoldSet& gold,
                                     const IterationParams& params = {},
                                     std::size_t top_k = 0,
                                     Aggregate aggregate = Aggregate::kSum,
                                     const RefScorePolicy& ref_policy = {},
                                     std::ostream* warnings = nullptr) {
  if (gold.relevant.empty()) throw EmptyInputError("gold set is empty");
  EvalReport report;
  report.top_k = top_k == 0 ? gold.relevant.size() : top_k;
  for (const char* algorithm : kReportAlgorithms) {
    const WordRanking ranking =
        rank_words(g, algorithm, params, ref_policy, aggregate);
    report.rows.push_back(
        evaluate_ranking(ranking, gold, report.top_k, warnings));
  }
  return report;
}

namespace detail {

inline std::string format_metric(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

}  // namespace detail

// Tab-separated report with metrics at 2 decimals.
inline std::string write_report_tsv(const EvalReport& report) {
  std::string out = "algorithm\twords\tprecision\trecall\tf1\n";
  for (const EvalRow& row : report.rows) {
    out += row.algorithm + "\t" + std::to_string(row.word_count) + "\t" +
           detail::format_metric(row.precision) + "\t" +
           detail::format_metric(row.recall) + "\t" +
           detail::format_metric(row.f1) + "\n";
  }
  return out;
}

// JSON report with full-precision metrics and raw confusion counts.
inline std::string write_report_json(const EvalReport& report) {
  nlohmann::ordered_json doc;
  doc["top_k"] = report.top_k;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const EvalRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["algorithm"] = row.algorithm;
    r["words"] = row.word_count;
    r["precision"] = row.precision;
    r["recall"] = row.recall;
    r["f1"] = row.f1;
    r["tp"] = row.counts.tp;
    r["fp"] = row.counts.fp;
    r["fn"] = row.counts.fn;
    r["tn"] = row.counts.tn;
    r["converged"] = row.converged;
    doc["rows"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

// Comma-separated metric columns for grouped-bar plotting; the leading
// comment records the top_k the numbers were computed at.
inline std::string write_report_plot_csv(const EvalReport& report) {
  std::string out = "# top_k=" + std::to_string(report.top_k) + "\n";
  out += "algorithm,precision,recall,f1\n";
  for (const EvalRow& row : report.rows) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s,%.6f,%.6f,%.6f",
                  row.algorithm.c_str(), row.precision, row.recall, row.f1);
    out += buf;
    out += "\n";
  }
  return out;
}

}  // namespace wordgraph
