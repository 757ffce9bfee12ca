#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "wordgraph/graph.hpp"

namespace wordgraph {

// Unsigned 128-bit counter for path and derivation counts; the cap is
// the type's range (2^128), and exceeding it raises OverflowError
// instead of wrapping.
using BigCount = unsigned __int128;

inline BigCount checked_add(BigCount a, BigCount b, const char* what) {
  BigCount sum = a + b;
  if (sum < a) throw OverflowError(std::string(what) + " exceeds the 2^128 cap");
  return sum;
}

inline std::string to_string(BigCount value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits += static_cast<char>('0' + static_cast<unsigned>(value % 10));
    value /= 10;
  }
  return std::string(digits.rbegin(), digits.rend());
}

// Average number of edges alive per topological position: sweeping the
// vertices in topological order, each vertex first retires its incoming
// edges and then opens its outgoing ones; the running count is summed
// and divided by |V|.
inline double density(const WordGraph& g) {
  const TopologicalOrder topo = topological_order(g);
  long long dens = 0;
  long long total = 0;
  for (VertexId v : topo.order) {
    dens -= static_cast<long long>(in_degree(g, v));
    dens += static_cast<long long>(out_degree(g, v));
    total += dens;
  }
  return static_cast<double>(total) / static_cast<double>(g.vertex_count());
}

// Number of distinct start-to-v paths for every vertex v; parallel
// edges count individually. Dynamic program over the topological order.
inline std::vector<BigCount> path_counts(const WordGraph& g) {
  const TopologicalOrder topo = topological_order(g);
  std::vector<BigCount> paths(g.vertex_count(), 0);
  paths[g.start()] = 1;
  for (VertexId v : topo.order) {
    for (std::uint32_t ei : g.in_edges(v))
      paths[v] = checked_add(paths[v], paths[g.edge(ei).src], "path count");
  }
  return paths;
}

// Number of distinct start-to-end paths.
inline BigCount count_paths(const WordGraph& g) {
  return path_counts(g)[g.end()];
}

// Work count of a parser that extends partial derivations one edge at a
// time: every vertex seeds a length-1 derivation, and each round i
// extends the predecessors' round i-1 derivations across each incoming
// edge. Returns the total number of extensions performed.
//
// With start_only set, only the start vertex seeds a derivation, which
// turns the result into the number of nonempty paths from start.
inline BigCount parser_steps(const WordGraph& g, bool start_only = false) {
  const TopologicalOrder topo = topological_order(g);
  const std::size_t n = g.vertex_count();

  // deriv_v[i] is zero beyond the longest edge path ending at v, so the
  // per-vertex tables only need that many rounds.
  std::vector<std::size_t> depth(n, 0);
  for (VertexId v : topo.order)
    for (std::uint32_t ei : g.in_edges(v))
      depth[v] = std::max(depth[v], depth[g.edge(ei).src] + 1);

  // deriv[v][i-1] holds deriv_v[i] for i in 1..depth[v]+1.
  std::vector<std::vector<BigCount>> deriv(n);
  BigCount total = 0;
  for (VertexId v : topo.order) {
    deriv[v].assign(depth[v] + 1, 0);
    deriv[v][0] = (!start_only || v == g.start()) ? 1 : 0;
    for (std::size_t i = 2; i <= depth[v] + 1 && i <= n; ++i) {
      for (std::uint32_t ei : g.in_edges(v)) {
        const auto& pred = deriv[g.edge(ei).src];
        if (i - 2 < pred.size())
          deriv[v][i - 1] = checked_add(deriv[v][i - 1], pred[i - 2],
                                        "derivation count");
      }
      total = checked_add(total, deriv[v][i - 1], "derivation count");
    }
  }
  return total;
}

}  // namespace wordgraph
