#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wordgraph/graph.hpp"

namespace wordgraph {

// Rebuilds the graph so that its set of start-to-end label sequences is
// unchanged but no two distinct paths carry the same sequence.
//
// Vertices of the output correspond to groups of input vertices that
// are reachable by reading the same prefix: identically labeled
// outgoing hypotheses are followed together, and a fresh vertex is
// created per (group, label). Edges into the input end vertex are
// routed straight to the single output end vertex so that sequences
// which are proper prefixes of others survive. When several input
// edges collapse into one output edge, the largest weight is kept.
inline WordGraph reduce_to_unique_label_sequences(const WordGraph& g) {
  if (g.vertex_count() == 1) return g;

  using Group = std::vector<VertexId>;  // sorted, deduplicated
  std::map<Group, std::uint32_t> group_ids;
  std::vector<Group> groups;

  const auto intern = [&](Group&& grp) {
    auto [it, inserted] =
        group_ids.emplace(std::move(grp), static_cast<std::uint32_t>(groups.size()));
    if (inserted) groups.push_back(it->first);
    return it->second;
  };

  struct PendingEdge {
    std::uint32_t src_group;
    bool to_end;
    std::uint32_t tgt_group;  // meaningful when !to_end
    std::string label;
    double weight;
  };

  std::vector<PendingEdge> pending;
  std::queue<std::uint32_t> work;
  work.push(intern(Group{g.start()}));

  std::vector<char> expanded;
  while (!work.empty()) {
    const std::uint32_t gid = work.front();
    work.pop();
    if (gid < expanded.size() && expanded[gid]) continue;
    if (gid >= expanded.size()) expanded.resize(gid + 1, 0);
    expanded[gid] = 1;

    // Gather outgoing edges of the whole group, keyed by label.
    struct Bucket {
      Group interior;
      double interior_weight = 0.0;
      bool has_interior = false;
      bool has_final = false;
      double final_weight = 0.0;
    };
    std::map<std::string, Bucket> buckets;
    for (VertexId v : groups[gid]) {
      for (std::uint32_t ei : g.out_edges(v)) {
        const Edge& e = g.edge(ei);
        Bucket& b = buckets[e.label];
        if (e.tgt == g.end()) {
          b.final_weight = b.has_final ? std::max(b.final_weight, e.weight)
                                       : e.weight;
          b.has_final = true;
        } else {
          b.interior_weight = b.has_interior
                                  ? std::max(b.interior_weight, e.weight)
                                  : e.weight;
          b.has_interior = true;
          b.interior.push_back(e.tgt);
        }
      }
    }

    for (auto& [label, bucket] : buckets) {
      if (bucket.has_interior) {
        std::sort(bucket.interior.begin(), bucket.interior.end());
        bucket.interior.erase(
            std::unique(bucket.interior.begin(), bucket.interior.end()),
            bucket.interior.end());
        const std::uint32_t tgt = intern(std::move(bucket.interior));
        pending.push_back(
            PendingEdge{gid, false, tgt, label, bucket.interior_weight});
        if (tgt >= expanded.size() || !expanded[tgt]) work.push(tgt);
      }
      if (bucket.has_final)
        pending.push_back(PendingEdge{gid, true, 0, label, bucket.final_weight});
    }
  }

  // Groups were created in traversal order with the start group first;
  // the output end vertex takes the last id.
  const VertexId out_end = static_cast<VertexId>(groups.size());
  std::vector<Edge> edges;
  edges.reserve(pending.size());
  for (auto& pe : pending)
    edges.push_back(Edge{pe.src_group, pe.to_end ? out_end : pe.tgt_group,
                         std::move(pe.label), pe.weight});

  return WordGraph(groups.size() + 1, 0, out_end, std::move(edges));
}

namespace detail {

inline bool reachable(const WordGraph& g, VertexId from, VertexId to) {
  if (from == to) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (std::uint32_t ei : g.out_edges(v)) {
      const VertexId w = g.edge(ei).tgt;
      if (w == to) return true;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace detail

// Folds keep into the surviving vertex: every edge incident to `merged`
// is redirected to `keep` unless an edge with the same other endpoint
// and the same label already exists there. Fails if any directed path
// connects the two vertices, since merging would close it into a cycle.
// The result is re-indexed to dense ids (ids above `merged` shift down).
inline WordGraph merge_vertices(const WordGraph& g, VertexId keep,
                                VertexId merged) {
  if (keep >= g.vertex_count() || merged >= g.vertex_count())
    throw GraphError("unknown vertex id in merge");
  if (keep == merged) throw GraphError("cannot merge a vertex with itself");
  if (detail::reachable(g, keep, merged) || detail::reachable(g, merged, keep))
    throw GraphError("merging vertices " + std::to_string(keep) + " and " +
                     std::to_string(merged) + " would create a cycle");

  const auto remap = [&](VertexId v) -> VertexId {
    if (v == merged) v = keep;
    return v > merged ? v - 1 : v;
  };

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  const auto duplicate = [&](const Edge& e) {
    return std::any_of(edges.begin(), edges.end(), [&](const Edge& f) {
      return f.src == e.src && f.tgt == e.tgt && f.label == e.label;
    });
  };
  // Untouched edges first so the guard keeps `keep`'s originals.
  for (const Edge& e : g.edges())
    if (e.src != merged && e.tgt != merged)
      edges.push_back(Edge{remap(e.src), remap(e.tgt), e.label, e.weight});
  for (const Edge& e : g.edges()) {
    if (e.src != merged && e.tgt != merged) continue;
    Edge moved{remap(e.src), remap(e.tgt), e.label, e.weight};
    if (!duplicate(moved)) edges.push_back(std::move(moved));
  }

  return WordGraph(g.vertex_count() - 1, remap(g.start()), remap(g.end()),
                   std::move(edges));
}

// Compression pass used by the CLI: deduplicate label sequences, then
// repeatedly merge interior vertices whose outgoing (label, target,
// weight) profiles are identical, which shares common suffixes without
// changing the sequence set. Vertices with equal profiles have the same
// immediate successors, so no such merge can close a cycle.
inline WordGraph compress(const WordGraph& g) {
  WordGraph out = reduce_to_unique_label_sequences(g);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::vector<std::tuple<VertexId, std::string, double>>,
             std::vector<VertexId>>
        classes;
    for (VertexId v = 0; v < out.vertex_count(); ++v) {
      if (v == out.start() || v == out.end()) continue;
      std::vector<std::tuple<VertexId, std::string, double>> sig;
      sig.reserve(out.out_edges(v).size());
      for (std::uint32_t ei : out.out_edges(v)) {
        const Edge& e = out.edge(ei);
        sig.emplace_back(e.tgt, e.label, e.weight);
      }
      std::sort(sig.begin(), sig.end());
      classes[std::move(sig)].push_back(v);
    }

    // Ids above a removed vertex shift down by one, so adjust the
    // not-yet-merged members as merges are applied.
    for (auto& [sig, members] : classes) {
      if (members.size() < 2) continue;
      changed = true;
      VertexId keep = members[0];
      for (std::size_t i = 1; i < members.size(); ++i) {
        const VertexId victim = members[i];
        out = merge_vertices(out, keep, victim);
        const auto shift = [victim](VertexId& v) {
          if (v > victim) --v;
        };
        shift(keep);
        for (auto& [sig2, members2] : classes)
          for (VertexId& m : members2) shift(m);
      }
    }
  }
  return out;
}

}  // namespace wordgraph
