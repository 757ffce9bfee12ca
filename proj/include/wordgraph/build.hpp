#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wordgraph/corpus.hpp"
#include "wordgraph/graph.hpp"

namespace wordgraph {

enum class Weighting {
  // Frequency of the bigram relative to all transitions leaving its
  // first word, computed over the whole document with <s> / </s>
  // boundary pseudo-tokens. Always in (0, 1].
  kBigram,
  kUniform,   // every edge 1.0
  kLogCount,  // ln(1 + raw bigram count)
};

struct WeightingConfig {
  Weighting scheme = Weighting::kBigram;
};

namespace detail {

inline const std::string kSentenceBegin = "<s>";
inline const std::string kSentenceEnd = "</s>";

struct BigramTable {
  std::map<std::pair<std::string, std::string>, std::size_t> counts;
  std::map<std::string, std::size_t> out_totals;

  void add(const std::string& prev, const std::string& cur) {
    ++counts[{prev, cur}];
    ++out_totals[prev];
  }

  std::size_t count(const std::string& prev, const std::string& cur) const {
    auto it = counts.find({prev, cur});
    return it == counts.end() ? 0 : it->second;
  }

  std::size_t out_total(const std::string& prev) const {
    auto it = out_totals.find(prev);
    return it == out_totals.end() ? 0 : it->second;
  }
};

inline BigramTable build_bigram_table(const TokenizedDocument& doc) {
  BigramTable table;
  for (const auto& sentence : doc.sentences) {
    const std::string* prev = &kSentenceBegin;
    for (const auto& tok : sentence) {
      table.add(*prev, tok.stem);
      prev = &tok.stem;
    }
    table.add(*prev, kSentenceEnd);
  }
  return table;
}

}  // namespace detail

// One chain of edges per sentence, sharing a single global start vertex
// and a single global end vertex: a sentence of n tokens contributes
// n-1 fresh interior vertices and n edges, edge i labeled with token
// i's stem. Vertex ids come out already in topological order (start is
// 0, end is the highest id).
inline WordGraph build_word_graph(const TokenizedDocument& doc,
                                  const WeightingConfig& weighting = {}) {
  std::size_t tokens = 0;
  for (const auto& s : doc.sentences) tokens += s.size();
  if (tokens == 0)
    throw GraphError("cannot build a word graph from an empty document");

  detail::BigramTable table;
  if (weighting.scheme != Weighting::kUniform)
    table = detail::build_bigram_table(doc);

  const auto edge_weight = [&](const std::string& prev,
                               const std::string& cur) -> double {
    switch (weighting.scheme) {
      case Weighting::kUniform:
        return 1.0;
      case Weighting::kLogCount:
        return std::log(1.0 + static_cast<double>(table.count(prev, cur)));
      case Weighting::kBigram:
      default:
        return static_cast<double>(table.count(prev, cur)) /
               static_cast<double>(table.out_total(prev));
    }
  };

  const VertexId start = 0;
  VertexId next_id = 1;
  std::vector<Edge> edges;
  edges.reserve(tokens);
  for (const auto& sentence : doc.sentences) {
    VertexId prev_vertex = start;
    const std::string* prev_word = &detail::kSentenceBegin;
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const bool last = (i + 1 == sentence.size());
      const VertexId tgt = last ? 0 /* patched to end below */ : next_id++;
      edges.push_back(Edge{prev_vertex, tgt, sentence[i].stem,
                           edge_weight(*prev_word, sentence[i].stem)});
      prev_vertex = tgt;
      prev_word = &sentence[i].stem;
    }
  }
  const VertexId end = next_id;
  for (Edge& e : edges)
    if (e.tgt == 0) e.tgt = end;

  return WordGraph(static_cast<std::size_t>(end) + 1, start, end,
                   std::move(edges));
}

}  // namespace wordgraph
