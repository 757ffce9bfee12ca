#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "wordgraph/errors.hpp"

namespace wordgraph {

// Dense vertex index in [0, vertex_count). Ids are stable for the
// lifetime of one graph value; mutating operations return new graphs.
using VertexId = std::uint32_t;

struct Edge {
  VertexId src = 0;
  VertexId tgt = 0;
  std::string label;
  double weight = 0.0;
};

inline bool edge_less(const Edge& a, const Edge& b) {
  if (a.src != b.src) return a.src < b.src;
  if (a.tgt != b.tgt) return a.tgt < b.tgt;
  if (a.label != b.label) return a.label < b.label;
  return a.weight < b.weight;
}

// Directed acyclic multigraph with labeled, weighted edges, a unique
// start vertex (the only one with in-degree 0) and a unique end vertex
// (the only one with out-degree 0). Every vertex lies on a start-to-end
// path. Parallel edges are allowed and counted individually everywhere.
//
// The degenerate single-vertex graph (start == end, no edges) is
// accepted so ranking operations have a well-defined base case.
//
// Immutable after construction; safe to read from multiple threads.
class WordGraph {
public:
  WordGraph(std::size_t vertex_count, VertexId start, VertexId end,
            std::vector<Edge> edges)
      : vertex_count_(vertex_count),
        start_(start),
        end_(end),
        edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end(), edge_less);
    build_adjacency();
    check_invariants();
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  VertexId start() const { return start_; }
  VertexId end() const { return end_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  // Indices into edges() with tgt == v / src == v.
  const std::vector<std::uint32_t>& in_edges(VertexId v) const {
    require_vertex(v);
    return in_[v];
  }
  const std::vector<std::uint32_t>& out_edges(VertexId v) const {
    require_vertex(v);
    return out_[v];
  }

private:
  std::size_t vertex_count_;
  VertexId start_;
  VertexId end_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::vector<std::vector<std::uint32_t>> out_;

  void require_vertex(VertexId v) const {
    if (v >= vertex_count_)
      throw GraphError("unknown vertex id " + std::to_string(v));
  }

  void build_adjacency() {
    in_.assign(vertex_count_, {});
    out_.assign(vertex_count_, {});
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.src >= vertex_count_ || e.tgt >= vertex_count_)
        throw GraphError("edge endpoint out of range: " +
                         std::to_string(e.src) + " -> " +
                         std::to_string(e.tgt));
      out_[e.src].push_back(i);
      in_[e.tgt].push_back(i);
    }
  }

  void check_invariants() const;
};

inline std::size_t in_degree(const WordGraph& g, VertexId v) {
  return g.in_edges(v).size();
}

inline std::size_t out_degree(const WordGraph& g, VertexId v) {
  return g.out_edges(v).size();
}

// Topological order with start first and end last; positions are the
// 1-based ranks of the order, so position[src] < position[tgt] holds
// for every edge.
struct TopologicalOrder {
  std::vector<VertexId> order;
  std::vector<std::uint32_t> position;
};

// Kahn's algorithm with ties broken by ascending VertexId, which makes
// the order deterministic. Throws GraphError when a cycle remains.
inline TopologicalOrder topological_order_of(std::size_t vertex_count,
                                             const std::vector<Edge>& edges) {
  std::vector<std::uint32_t> remaining(vertex_count, 0);
  std::vector<std::vector<VertexId>> succ(vertex_count);
  for (const Edge& e : edges) {
    ++remaining[e.tgt];
    succ[e.src].push_back(e.tgt);
  }

  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < vertex_count; ++v)
    if (remaining[v] == 0) ready.push(v);

  TopologicalOrder topo;
  topo.order.reserve(vertex_count);
  topo.position.assign(vertex_count, 0);
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    topo.position[v] = static_cast<std::uint32_t>(topo.order.size() + 1);
    topo.order.push_back(v);
    for (VertexId w : succ[v])
      if (--remaining[w] == 0) ready.push(w);
  }
  if (topo.order.size() != vertex_count)
    throw GraphError("cycle detected: topological order covers " +
                     std::to_string(topo.order.size()) + " of " +
                     std::to_string(vertex_count) + " vertices");
  return topo;
}

inline TopologicalOrder topological_order(const WordGraph& g) {
  return topological_order_of(g.vertex_count(), g.edges());
}

// Re-checks every word-graph invariant; construction runs this, and
// property tests call it on operation outputs.
inline void validate(const WordGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw GraphError("graph has no vertices");
  if (g.start() >= n || g.end() >= n)
    throw GraphError("start or end vertex out of range");

  if (n == 1) {
    if (g.start() != g.end() || g.edge_count() != 0)
      throw GraphError("single-vertex graph must be edge-free");
    return;
  }
  if (g.start() == g.end())
    throw GraphError("start and end must be distinct");

  for (const Edge& e : g.edges()) {
    if (e.src == e.tgt)
      throw GraphError("self-loop at vertex " + std::to_string(e.src));
    if (e.label.empty()) throw GraphError("edge with empty label");
    if (!std::isfinite(e.weight)) throw GraphError("edge weight not finite");
  }

  for (VertexId v = 0; v < n; ++v) {
    if ((in_degree(g, v) == 0) != (v == g.start()))
      throw GraphError("vertex " + std::to_string(v) +
                       (v == g.start() ? " is start but has incoming edges"
                                       : " has in-degree 0 but is not start"));
    if ((out_degree(g, v) == 0) != (v == g.end()))
      throw GraphError("vertex " + std::to_string(v) +
                       (v == g.end() ? " is end but has outgoing edges"
                                     : " has out-degree 0 but is not end"));
  }

  topological_order(g);  // throws on cycles

  // Loose connectivity: with the degree conditions above, following
  // in-edges from any vertex must bottom out at start, and out-edges
  // at end, so reachability both ways is what remains to check.
  std::vector<char> from_start(n, 0);
  std::vector<VertexId> stack{g.start()};
  from_start[g.start()] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (std::uint32_t ei : g.out_edges(v)) {
      const VertexId w = g.edge(ei).tgt;
      if (!from_start[w]) {
        from_start[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<char> to_end(n, 0);
  stack.push_back(g.end());
  to_end[g.end()] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (std::uint32_t ei : g.in_edges(v)) {
      const VertexId w = g.edge(ei).src;
      if (!to_end[w]) {
        to_end[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (VertexId v = 0; v < n; ++v)
    if (!from_start[v] || !to_end[v])
      throw GraphError("vertex " + std::to_string(v) +
                       " is not on any start-to-end path");
}

inline void WordGraph::check_invariants() const { validate(*this); }

}  // namespace wordgraph
