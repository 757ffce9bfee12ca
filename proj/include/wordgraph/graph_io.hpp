#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wordgraph/graph.hpp"

namespace wordgraph {

// Text dump, one edge per line "src<TAB>tgt<TAB>label<TAB>weight"
// (weight with 6 decimals), preceded by "#vertices N start S end E".
// Edges appear sorted by (src, tgt, label, weight), so writing a parsed
// dump reproduces it byte-for-byte.
inline std::string write_graph(const WordGraph& g) {
  std::string out = "#vertices " + std::to_string(g.vertex_count()) +
                    " start " + std::to_string(g.start()) + " end " +
                    std::to_string(g.end()) + "\n";
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof(buf), "%.6f", e.weight);
    out += std::to_string(e.src);
    out += '\t';
    out += std::to_string(e.tgt);
    out += '\t';
    out += e.label;
    out += '\t';
    out += buf;
    out += '\n';
  }
  return out;
}

inline WordGraph read_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header))
    throw ParseError("graph dump is empty");

  std::size_t vertex_count = 0;
  unsigned long start = 0, end = 0;
  {
    std::istringstream hs(header);
    std::string kw_vertices, kw_start, kw_end;
    if (!(hs >> kw_vertices >> vertex_count >> kw_start >> start >> kw_end >>
          end) ||
        kw_vertices != "#vertices" || kw_start != "start" || kw_end != "end")
      throw ParseError("bad graph dump header: " + header);
  }

  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Edge e;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = (t1 == std::string::npos) ? t1 : line.find('\t', t1 + 1);
    std::size_t t3 = (t2 == std::string::npos) ? t2 : line.find('\t', t2 + 1);
    if (t3 == std::string::npos)
      throw ParseError("bad graph dump edge at line " + std::to_string(lineno));
    try {
      e.src = static_cast<VertexId>(std::stoul(line.substr(0, t1)));
      e.tgt = static_cast<VertexId>(std::stoul(line.substr(t1 + 1, t2 - t1 - 1)));
      e.weight = std::stod(line.substr(t3 + 1));
    } catch (const std::exception&) {
      throw ParseError("bad number in graph dump at line " +
                       std::to_string(lineno));
    }
    e.label = line.substr(t2 + 1, t3 - t2 - 1);
    edges.push_back(std::move(e));
  }
  return WordGraph(vertex_count, static_cast<VertexId>(start),
                   static_cast<VertexId>(end), std::move(edges));
}

inline WordGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open graph dump: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graph(buf.str());
}

}  // namespace wordgraph
