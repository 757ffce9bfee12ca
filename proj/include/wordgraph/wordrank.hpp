#pragma once

// Turns per-vertex scores into a ranked word list and dispatches the
// ranking algorithms behind stable string identifiers.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wordgraph/errors.hpp"
#include "wordgraph/graph.hpp"
#include "wordgraph/ranking.hpp"

namespace wordgraph {

enum class Aggregate {
  kSum,   // add up the target scores of same-label edges
  kMax,   // keep the largest
  kMean,  // average them
};

inline Aggregate parse_aggregate(const std::string& name) {
  if (name == "sum") return Aggregate::kSum;
  if (name == "max") return Aggregate::kMax;
  if (name == "mean") return Aggregate::kMean;
  throw ConfigError("unknown aggregate mode: " + name);
}

struct WordEntry {
  std::string word;
  double score = 0.0;
};

struct WordRanking {
  std::string algorithm;
  std::vector<WordEntry> entries;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool converged = true;       // false only for iterative scorers that ran out
  std::uint32_t iterations = 0;  // sweeps used by iterative scorers
};

// Every word names the edges it labels; its score aggregates the vertex
// scores that those edges point at. Entries come out sorted by
// descending score with ties broken by ascending code-point order.
inline WordRanking attribute_scores_to_words(const WordGraph& g,
                                             const VertexScores& vs,
                                             Aggregate aggregate) {
  if (vs.size() != g.vertex_count())
    throw GraphError("score vector does not cover the graph");
  std::map<std::string, std::pair<double, std::size_t>> grouped;
  for (const Edge& e : g.edges()) {
    const double s = vs[e.tgt];
    auto [it, inserted] = grouped.emplace(e.label, std::make_pair(s, 1));
    if (inserted) continue;
    if (aggregate == Aggregate::kMax)
      it->second.first = std::max(it->second.first, s);
    else
      it->second.first += s;
    ++it->second.second;
  }
  WordRanking out;
  out.vertex_count = g.vertex_count();
  out.edge_count = g.edge_count();
  out.entries.reserve(grouped.size());
  for (const auto& [word, agg] : grouped) {
    double score = agg.first;
    if (aggregate == Aggregate::kMean)
      score /= static_cast<double>(agg.second);
    out.entries.push_back({word, score});
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const WordEntry& a, const WordEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.word < b.word;
            });
  return out;
}

// Reference value used by the refscore algorithm: either fixed or the
// midpoint of the end vertex's reachable weight span.
struct RefScorePolicy {
  bool automatic = true;
  double value = 0.0;

  static RefScorePolicy midpoint() { return {}; }
  static RefScorePolicy fixed(double v) { return {false, v}; }
};

inline constexpr std::array<const char*, 8> kAlgorithmIds = {
    "minmax", "refscore", "hits-r1", "hits-r2",
    "hits-r3", "hits-r4", "ppf",     "pagerank",
};

// Weight spread per vertex (costliest minus cheapest arriving path),
// rescaled linearly onto [0,1] across the graph. The start vertex spans
// zero, so the rescale only degenerates when every vertex does.
inline VertexScores spread_scores(const WordGraph& g) {
  const PrefixScores prefix = prefix_scores(g);
  const std::size_t n = g.vertex_count();
  VertexScores out(n, 0.0);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < n; ++v) {
    out[v] = prefix.max_score[v] - prefix.min_score[v];
    lo = std::min(lo, out[v]);
    hi = std::max(hi, out[v]);
  }
  if (hi > lo)
    for (double& s : out) s = (s - lo) / (hi - lo);
  else
    for (double& s : out) s = 0.0;
  return out;
}

// Scores the graph with the named algorithm and attributes the result
// to words. Identifiers: minmax, refscore, hits-r1..r4, ppf, pagerank.
inline WordRanking rank_words(const WordGraph& g, const std::string& algorithm,
                              const IterationParams& params = {},
                              const RefScorePolicy& ref_policy = {},
                              Aggregate aggregate = Aggregate::kSum) {
  VertexScores vs;
  bool converged = true;
  std::uint32_t iterations = 0;
  if (algorithm == "minmax") {
    vs = spread_scores(g);
  } else if (algorithm == "refscore") {
    ReferenceRanker ranker(g);
    const double ref = ref_policy.automatic
                           ? midpoint_reference(ranker.prefix(), g.end())
                           : ref_policy.value;
    vs.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) vs[v] = ranker.rank(v, ref);
  } else if (algorithm == "hits-r1" || algorithm == "hits-r2" ||
             algorithm == "hits-r3" || algorithm == "hits-r4") {
    const HitsResult h = hits(g, params);
    converged = h.converged;
    iterations = h.iterations;
    const HitsVariant variant = algorithm == "hits-r1" ? HitsVariant::kAuthority
                                : algorithm == "hits-r2" ? HitsVariant::kHub
                                : algorithm == "hits-r3" ? HitsVariant::kAverage
                                                         : HitsVariant::kMax;
    vs = hits_rank(h, variant);
  } else if (algorithm == "ppf") {
    vs = positional_power(g);
  } else if (algorithm == "pagerank") {
    const PageRankResult pr = pagerank(g, params);
    converged = pr.converged;
    iterations = pr.iterations;
    vs = pr.scores;
  } else {
    throw ConfigError("unknown algorithm identifier: " + algorithm);
  }
  WordRanking out = attribute_scores_to_words(g, vs, aggregate);
  out.algorithm = algorithm;
  out.converged = converged;
  out.iterations = iterations;
  return out;
}

namespace detail {

inline std::string format_score(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace detail

// Tab-separated ranking: a comment line with the run facts, a column
// header, then one word per line with the score at 6 decimals.
inline std::string write_ranking_tsv(const WordRanking& ranking) {
  std::string out = "# algorithm=" + ranking.algorithm +
                    " vertices=" + std::to_string(ranking.vertex_count) +
                    " edges=" + std::to_string(ranking.edge_count) + "\n";
  out += "word\tscore\n";
  for (const WordEntry& e : ranking.entries)
    out += e.word + "\t" + detail::format_score(e.score) + "\n";
  return out;
}

// JSON ranking with full-precision scores.
inline std::string write_ranking_json(const WordRanking& ranking) {
  nlohmann::ordered_json doc;
  doc["algorithm"] = ranking.algorithm;
  doc["vertices"] = ranking.vertex_count;
  doc["edges"] = ranking.edge_count;
  doc["converged"] = ranking.converged;
  doc["iterations"] = ranking.iterations;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const WordEntry& e : ranking.entries)
    doc["entries"].push_back({{"word", e.word}, {"score", e.score}});
  return doc.dump(2) + "\n";
}

}  // namespace wordgraph
