#pragma once

// Vertex scoring: accumulated-weight extremes along paths, a
// reference-anchored path fraction, mutual endorsement (authority/hub),
// position-discounted path power, and a random-surfer distribution.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wordgraph/errors.hpp"
#include "wordgraph/graph.hpp"
#include "wordgraph/stats.hpp"

namespace wordgraph {

using VertexScores = std::vector<double>;

struct IterationParams {
  double damping = 0.85;  // random-surfer follow probability
  double tolerance = 1e-8;
  std::uint32_t max_iterations = 100;
};

struct PrefixScores {
  VertexScores min_score;
  VertexScores max_score;
};

// Cheapest and costliest accumulated edge weight over all paths from
// the start vertex to each vertex, via one sweep in topological order.
// The start vertex anchors both extremes at zero.
inline PrefixScores prefix_scores(const WordGraph& g) {
  const TopologicalOrder topo = topological_order(g);
  PrefixScores out;
  out.min_score.assign(g.vertex_count(), 0.0);
  out.max_score.assign(g.vertex_count(), 0.0);
  for (VertexId v : topo.order) {
    if (v == g.start()) continue;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::uint32_t ei : g.in_edges(v)) {
      const Edge& e = g.edge(ei);
      lo = std::min(lo, out.min_score[e.src] + e.weight);
      hi = std::max(hi, out.max_score[e.src] + e.weight);
    }
    out.min_score[v] = lo;
    out.max_score[v] = hi;
  }
  return out;
}

// Reference value halfway between the cheapest and the costliest full
// start-to-end path.
inline double midpoint_reference(const PrefixScores& prefix, VertexId end) {
  return 0.5 * (prefix.min_score[end] + prefix.max_score[end]);
}

// Fraction of the start-to-v paths whose accumulated weight falls below
// a reference value. A reference at or under the vertex's cheapest path
// ranks 0, at or over its costliest path ranks 1; in between, each
// incoming edge contributes the share of paths arriving through it
// times the predecessor's rank against the remaining budget.
class ReferenceRanker {
 public:
  explicit ReferenceRanker(const WordGraph& g)
      : g_(&g), prefix_(prefix_scores(g)), paths_(path_counts(g)) {}

  double rank(VertexId v, double reference) const {
    if (v >= g_->vertex_count())
      throw GraphError("rank queried for unknown vertex " + std::to_string(v));
    if (!std::isfinite(reference))
      throw GraphError("reference score must be finite");
    if (reference <= prefix_.min_score[v]) return 0.0;
    if (reference >= prefix_.max_score[v]) return 1.0;
    const auto key = std::make_pair(v, reference);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    double total = 0.0;
    for (std::uint32_t ei : g_->in_edges(v)) {
      const Edge& e = g_->edge(ei);
      const double share = static_cast<double>(paths_[e.src]) /
                           static_cast<double>(paths_[v]);
      total += share * rank(e.src, reference - e.weight);
    }
    memo_.emplace(key, total);
    return total;
  }

  const PrefixScores& prefix() const { return prefix_; }

 private:
  const WordGraph* g_;
  PrefixScores prefix_;
  std::vector<BigCount> paths_;
  mutable std::map<std::pair<VertexId, double>, double> memo_;
};

inline double reference_rank(const WordGraph& g, VertexId v,
                             double reference) {
  return ReferenceRanker(g).rank(v, reference);
}

inline VertexScores reference_rank_all(const WordGraph& g, double reference) {
  ReferenceRanker ranker(g);
  VertexScores out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out[v] = ranker.rank(v, reference);
  return out;
}

struct HitsResult {
  VertexScores authority;
  VertexScores hub;
  bool converged = false;
  std::uint32_t iterations = 0;
};

// Mutual endorsement scores: a vertex is a strong authority when strong
// hubs point at it and a strong hub when it points at strong
// authorities. Each sweep recomputes the authority vector from the
// current hubs and the hub vector from those fresh authorities, scaling
// both to unit length; parallel edges each contribute. Iteration stops
// once no entry moves by the tolerance.
inline HitsResult hits(const WordGraph& g, const IterationParams& params = {}) {
  const std::size_t n = g.vertex_count();
  HitsResult result;
  result.authority.assign(n, 0.0);
  result.hub.assign(n, 1.0);
  const auto normalize = [](VertexScores& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0.0)
      for (double& x : v) x /= norm;
  };
  VertexScores auth_next(n, 0.0);
  VertexScores hub_next(n, 0.0);
  for (std::uint32_t iter = 1; iter <= params.max_iterations; ++iter) {
    for (VertexId v = 0; v < n; ++v) {
      double sum = 0.0;
      for (std::uint32_t ei : g.in_edges(v)) sum += result.hub[g.edge(ei).src];
      auth_next[v] = sum;
    }
    normalize(auth_next);
    for (VertexId v = 0; v < n; ++v) {
      double sum = 0.0;
      for (std::uint32_t ei : g.out_edges(v)) sum += auth_next[g.edge(ei).tgt];
      hub_next[v] = sum;
    }
    normalize(hub_next);
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      delta = std::max(delta, std::abs(auth_next[i] - result.authority[i]));
      delta = std::max(delta, std::abs(hub_next[i] - result.hub[i]));
    }
    result.authority = auth_next;
    result.hub = hub_next;
    result.iterations = iter;
    if (delta < params.tolerance) {
      result.converged = true;
      break;
    }
  }
  return result;
}

// Ways to fold the two endorsement vectors into one score per vertex.
enum class HitsVariant {
  kAuthority,  // the authority vector as-is
  kHub,        // the hub vector as-is
  kAverage,    // arithmetic mean of the two
  kMax,        // the larger of the two, per vertex
};

inline VertexScores hits_rank(const HitsResult& scores, HitsVariant variant) {
  if (scores.authority.size() != scores.hub.size())
    throw GraphError("authority and hub vectors differ in length");
  const std::size_t n = scores.authority.size();
  VertexScores out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    switch (variant) {
      case HitsVariant::kAuthority:
        out[i] = scores.authority[i];
        break;
      case HitsVariant::kHub:
        out[i] = scores.hub[i];
        break;
      case HitsVariant::kAverage:
        out[i] = 0.5 * (scores.authority[i] + scores.hub[i]);
        break;
      case HitsVariant::kMax:
        out[i] = std::max(scores.authority[i], scores.hub[i]);
        break;
    }
  }
  return out;
}

// Credit each vertex with the position-discounted weight of every path
// reaching it from the start: an edge sitting at position i of a path
// contributes its weight divided by i. Dynamic program indexed by path
// length, so a vertex only stores tables up to the longest path that
// can end there.
inline VertexScores positional_power(const WordGraph& g) {
  const TopologicalOrder topo = topological_order(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> depth(n, 0);
  for (VertexId v : topo.order)
    for (std::uint32_t ei : g.in_edges(v))
      depth[v] = std::max(depth[v], depth[g.edge(ei).src] + 1);
  // counts[v][k]: paths of k edges from start to v; shares[v][k]: total
  // discounted weight accumulated over exactly those paths.
  std::vector<std::vector<double>> counts(n);
  std::vector<std::vector<double>> shares(n);
  VertexScores out(n, 0.0);
  for (VertexId v : topo.order) {
    counts[v].assign(depth[v] + 1, 0.0);
    shares[v].assign(depth[v] + 1, 0.0);
    if (v == g.start()) counts[v][0] = 1.0;
    for (std::uint32_t ei : g.in_edges(v)) {
      const Edge& e = g.edge(ei);
      for (std::size_t k = 1; k <= depth[v]; ++k) {
        if (k - 1 >= counts[e.src].size()) continue;
        const double c = counts[e.src][k - 1];
        const double s = shares[e.src][k - 1];
        if (c == 0.0 && s == 0.0) continue;
        counts[v][k] += c;
        shares[v][k] += s + c * e.weight / static_cast<double>(k);
      }
    }
    for (double s : shares[v]) out[v] += s;
  }
  return out;
}

struct PageRankResult {
  VertexScores scores;
  bool converged = false;
  std::uint32_t iterations = 0;
  // Total mass after each sweep, before rescaling; the update conserves
  // mass, so every entry should sit at 1 up to rounding.
  std::vector<double> iteration_sums;
};

// Random-surfer stationary distribution: with probability `damping`
// follow a uniformly random outgoing edge — mass parked on sinks is
// spread evenly over all vertices — otherwise jump anywhere. Sweeps run
// until no entry moves by more than the tolerance.
inline PageRankResult pagerank(const WordGraph& g,
                               const IterationParams& params = {}) {
  const std::size_t n = g.vertex_count();
  PageRankResult result;
  result.scores.assign(n, 1.0 / static_cast<double>(n));
  VertexScores next(n, 0.0);
  for (std::uint32_t iter = 1; iter <= params.max_iterations; ++iter) {
    double dangling = 0.0;
    for (VertexId v = 0; v < n; ++v)
      if (g.out_edges(v).empty()) dangling += result.scores[v];
    const double base = (1.0 - params.damping) / static_cast<double>(n) +
                        params.damping * dangling / static_cast<double>(n);
    for (VertexId v = 0; v < n; ++v) {
      double inflow = 0.0;
      for (std::uint32_t ei : g.in_edges(v)) {
        const Edge& e = g.edge(ei);
        inflow += result.scores[e.src] /
                  static_cast<double>(g.out_edges(e.src).size());
      }
      next[v] = base + params.damping * inflow;
    }
    double sum = 0.0;
    for (double x : next) sum += x;
    result.iteration_sums.push_back(sum);
    for (double& x : next) x /= sum;
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      delta = std::max(delta, std::abs(next[i] - result.scores[i]));
    result.scores = next;
    result.iterations = iter;
    if (delta < params.tolerance) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace wordgraph
