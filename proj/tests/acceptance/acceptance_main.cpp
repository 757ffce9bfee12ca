// Acceptance gate: one pass/fail line per published behavioral
// guarantee, checked against independent oracles (exhaustive
// enumeration, dense linear algebra) and the shipped corpus. Exits
// nonzero when any guarantee fails.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/rng.hpp"
#include "wordgraph/wordgraph.hpp"

namespace {

namespace fs = std::filesystem;
using namespace wordgraph;
using testsupport::SplitMix64;

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
  if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

// Runs a criterion body, turning exceptions into failures.
template <typename Fn>
void criterion(const std::string& name, Fn body) {
  try {
    std::string detail;
    const bool ok = body(detail);
    report(name, ok, detail);
  } catch (const std::exception& e) {
    report(name, false, std::string("exception: ") + e.what());
  }
}

std::string data_file(const std::string& name) {
  return (fs::path(WG_DATA_DIR) / name).string();
}

WordGraph lattice_fixture() {
  return read_graph_file(data_file("fixtures/five_stage_lattice.wg"));
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CliRun {
  int code = -1;
  std::string out;
  double seconds = 0.0;
};

CliRun run_cli(const std::string& args) {
  const fs::path root = fs::temp_directory_path() / "wordgraph_acceptance";
  fs::create_directories(root);
  const fs::path out_path = root / "stdout.txt";
  const std::string cmd = std::string(WG_CLI_PATH) + " " + args + " 1>" +
                          out_path.string() + " 2>/dev/null";
  const auto begin = std::chrono::steady_clock::now();
  const int raw = std::system(cmd.c_str());
  const auto end = std::chrono::steady_clock::now();
  CliRun run;
  run.code = WEXITSTATUS(raw);
  run.out = slurp(out_path);
  run.seconds = std::chrono::duration<double>(end - begin).count();
  return run;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// --- criteria -------------------------------------------------------------

bool exact_path_counts(std::string& detail) {
  SplitMix64 rng(101);
  int checked = 0;
  const auto begin = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 200; ++trial) {
    const WordGraph g = testsupport::random_word_graph(rng, 12, 8);
    std::vector<std::vector<std::uint32_t>> paths;
    try {
      paths = testsupport::enumerate_paths(g, g.end(), 500);
    } catch (const std::runtime_error&) {
      continue;  // too many paths to enumerate; skip this sample
    }
    ++checked;
    if (count_paths(g) != static_cast<BigCount>(paths.size())) {
      detail = "trial " + std::to_string(trial) + ": counted " +
               to_string(count_paths(g)) + ", enumerated " +
               std::to_string(paths.size());
      return false;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - begin)
          .count();
  if (checked < 100) {
    detail = "only " + std::to_string(checked) + " graphs were enumerable";
    return false;
  }
  if (secs >= 5.0) {
    detail = "took " + std::to_string(secs) + "s, budget is 5s";
    return false;
  }
  detail.clear();
  return true;
}

bool prefix_extremes(std::string& detail) {
  SplitMix64 rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const WordGraph g = testsupport::random_word_graph(rng, 12, 8);
    PrefixScores p;
    try {
      p = prefix_scores(g);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto [lo, hi] = testsupport::extreme_path_sums(g, v);
        if (!close(p.min_score[v], lo, 1e-9) ||
            !close(p.max_score[v], hi, 1e-9)) {
          detail = "trial " + std::to_string(trial) + " vertex " +
                   std::to_string(v);
          return false;
        }
      }
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  const WordGraph fixture = lattice_fixture();
  const PrefixScores p = prefix_scores(fixture);
  if (!close(p.min_score[fixture.end()], -1.125, 1e-12) ||
      !close(p.max_score[fixture.end()], 1.125, 1e-12)) {
    detail = "five-stage lattice extremes off";
    return false;
  }
  return true;
}

bool discounted_power(std::string& detail) {
  SplitMix64 rng(303);
  for (int trial = 0; trial < 150; ++trial) {
    const WordGraph g = testsupport::random_word_graph(rng);
    VertexScores scores;
    try {
      scores = positional_power(g);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == g.start()) continue;
        const double brute = testsupport::positional_power_brute(g, v);
        if (!close(scores[v], brute, 1e-9)) {
          detail = "trial " + std::to_string(trial) + " vertex " +
                   std::to_string(v) + ": " + std::to_string(scores[v]) +
                   " vs " + std::to_string(brute);
          return false;
        }
      }
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  return true;
}

bool reference_fraction(std::string& detail) {
  SplitMix64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    const WordGraph g = testsupport::random_word_graph(rng);
    ReferenceRanker ranker(g);
    try {
      for (int r = 0; r < 5; ++r) {
        // Generator weights sit on the 1/16 grid; a 1/32 offset keeps
        // references strictly between achievable path sums.
        const double ref =
            (static_cast<double>(rng.below(417)) - 208.0) / 16.0 + 1.0 / 32.0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          const double expected = testsupport::path_fraction_below(g, v, ref);
          if (!close(ranker.rank(v, ref), expected, 1e-9)) {
            detail = "trial " + std::to_string(trial) + " vertex " +
                     std::to_string(v) + " ref " + std::to_string(ref);
            return false;
          }
        }
      }
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  // Exact clamps at and beyond the reachable band.
  const WordGraph band(2, 0, 1, {{0, 1, "a", 0.0}, {0, 1, "b", 1.0}});
  if (reference_rank(band, 1, -0.5) != 0.0 ||
      reference_rank(band, 1, 0.0) != 0.0 ||
      reference_rank(band, 1, 1.0) != 1.0 ||
      reference_rank(band, 1, 1.5) != 1.0) {
    detail = "clamps are not exact";
    return false;
  }
  return true;
}

bool endorsement_oracle(std::string& detail) {
  SplitMix64 rng(505);
  IterationParams params;
  params.tolerance = 1e-12;
  params.max_iterations = 5000;
  for (int trial = 0; trial < 100; ++trial) {
    const WordGraph g = testsupport::random_word_graph(rng);
    const HitsResult r = hits(g, params);
    if (!r.converged) {
      detail = "trial " + std::to_string(trial) + " did not converge";
      return false;
    }
    const double cos =
        testsupport::cosine(r.authority, testsupport::hits_authority_oracle(g));
    if (cos < 1.0 - 1e-6) {
      detail = "trial " + std::to_string(trial) +
               " cosine=" + std::to_string(cos);
      return false;
    }
  }
  const HitsResult single = hits(WordGraph(2, 0, 1, {{0, 1, "a", 1.0}}));
  if (!close(single.authority[0], 0.0, 1e-12) ||
      !close(single.authority[1], 1.0, 1e-12) ||
      !close(single.hub[0], 1.0, 1e-12) || !close(single.hub[1], 0.0, 1e-12)) {
    detail = "single-edge endorsement off";
    return false;
  }
  return true;
}

bool surfer_oracle(std::string& detail) {
  SplitMix64 rng(606);
  IterationParams params;
  params.tolerance = 1e-12;
  params.max_iterations = 5000;
  for (int trial = 0; trial < 100; ++trial) {
    const WordGraph g = testsupport::random_word_graph(rng);
    const PageRankResult r = pagerank(g, params);
    if (!r.converged) {
      detail = "trial " + std::to_string(trial) + " did not converge";
      return false;
    }
    const std::vector<double> oracle = testsupport::pagerank_oracle(g);
    for (std::size_t i = 0; i < oracle.size(); ++i)
      if (!close(r.scores[i], oracle[i], 1e-6)) {
        detail = "trial " + std::to_string(trial) + " component " +
                 std::to_string(i);
        return false;
      }
    for (double sum : r.iteration_sums)
      if (!close(sum, 1.0, 1e-9)) {
        detail = "trial " + std::to_string(trial) +
                 " leaked mass: " + std::to_string(sum);
        return false;
      }
  }
  const PageRankResult two = pagerank(WordGraph(2, 0, 1, {{0, 1, "a", 1.0}}));
  if (!close(two.scores[0], 0.3509, 5e-5) ||
      !close(two.scores[1], 0.6491, 5e-5)) {
    detail = "two-vertex closed form off";
    return false;
  }
  return true;
}

bool structural_validity(const WordGraph& g) {
  if (in_degree(g, g.start()) != 0) return false;
  if (out_degree(g, g.end()) != 0) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != g.start() && in_degree(g, v) == 0) return false;
    if (v != g.end() && out_degree(g, v) == 0) return false;
  }
  return topological_order(g).order.size() == g.vertex_count();
}

bool rewrites_preserve_sequences(std::string& detail) {
  SplitMix64 rng(707);
  for (int trial = 0; trial < 100; ++trial) {
    const WordGraph g = testsupport::random_word_graph(rng, 9, 6, 3);
    try {
      const auto original = testsupport::label_sequence_set(g);
      const WordGraph reduced = reduce_to_unique_label_sequences(g);
      const WordGraph compressed = compress(g);
      if (!structural_validity(reduced) || !structural_validity(compressed)) {
        detail = "trial " + std::to_string(trial) + " broke an invariant";
        return false;
      }
      const auto rseq = testsupport::label_sequences(reduced);
      const std::set<std::vector<std::string>> runique(rseq.begin(),
                                                       rseq.end());
      if (rseq.size() != runique.size()) {
        detail = "trial " + std::to_string(trial) + " kept duplicates";
        return false;
      }
      if (runique != original ||
          testsupport::label_sequence_set(compressed) != original) {
        detail = "trial " + std::to_string(trial) + " changed the sequences";
        return false;
      }
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  return true;
}

bool fixture_statistics(std::string& detail) {
  const WordGraph g = lattice_fixture();
  if (count_paths(g) != 3125) {
    detail = "paths " + to_string(count_paths(g));
    return false;
  }
  if (!close(density(g), 25.0 / 6.0, 1e-9)) {
    detail = "density " + std::to_string(density(g));
    return false;
  }
  const BigCount steps = parser_steps(g);
  if (steps != 4875 || steps != testsupport::count_all_paths_brute(g)) {
    detail = "subpath work " + to_string(steps);
    return false;
  }
  return true;
}

bool metric_arithmetic(std::string& detail) {
  WordRanking r;
  r.algorithm = "demo";
  for (const auto& [w, s] : std::vector<std::pair<std::string, double>>{
           {"a", 4.0}, {"b", 3.0}, {"c", 2.0}, {"d", 1.0}})
    r.entries.push_back({w, s});
  const ConfusionCounts c = confusion(r, GoldSet{{"a", "c"}}, 2);
  if (c.tp != 1 || c.fp != 1 || c.fn != 1 || c.tn != 1) {
    detail = "confusion example split incorrectly";
    return false;
  }
  ConfusionCounts hand;
  hand.tp = 2;
  hand.fp = 2;
  hand.fn = 3;
  if (!close(precision(hand), 0.5, 1e-12) ||
      !close(recall(hand), 0.4, 1e-12) ||
      !close(f1(hand), 4.0 / 9.0, 1e-12)) {
    detail = "hand metrics off";
    return false;
  }
  const double f = f1(0.36, 0.40);
  if (!close(f, 0.379, 5e-4) || !close(f, 0.37, 0.01)) {
    detail = "f1(0.36, 0.40) = " + std::to_string(f);
    return false;
  }
  if (precision(ConfusionCounts{}) != 0.0 || recall(ConfusionCounts{}) != 0.0 ||
      f1(0.0, 0.0) != 0.0) {
    detail = "zero conventions violated";
    return false;
  }
  return true;
}

bool corpus_evaluation(std::string& detail) {
  const fs::path root = fs::temp_directory_path() / "wordgraph_acceptance";
  fs::create_directories(root);
  const fs::path base = root / "corpus_report";
  const std::string args = "eval --corpus " + data_file("corpus_bn.pos") +
                           " --stopwords " + data_file("stopwords_bn.txt") +
                           " --stem-rules " + data_file("stem_rules_bn.txt") +
                           " --output " + base.string();
  const CliRun first = run_cli(args);
  if (first.code != 0) {
    detail = "exit code " + std::to_string(first.code);
    return false;
  }
  if (first.seconds >= 60.0) {
    detail = "took " + std::to_string(first.seconds) + "s, budget is 60s";
    return false;
  }
  const std::string tsv = slurp(base.string() + ".tsv");

  std::istringstream lines(tsv);
  std::string line;
  std::getline(lines, line);
  if (line != "algorithm\twords\tprecision\trecall\tf1") {
    detail = "header was: " + line;
    return false;
  }
  const char* expected[] = {"minmax", "refscore", "hits-r1", "ppf",
                            "pagerank"};
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::istringstream cols(line);
    std::string algorithm;
    std::size_t words = 0;
    double p = 0.0, rec = 0.0, f = 0.0;
    cols >> algorithm >> words >> p >> rec >> f;
    if (rows >= 5 || algorithm != expected[rows]) {
      detail = "unexpected row: " + line;
      return false;
    }
    if (words < 500 || words > 5000) {
      detail = algorithm + " ranked " + std::to_string(words) + " words";
      return false;
    }
    for (double metric : {p, rec, f})
      if (metric < 0.0 || metric > 1.0) {
        detail = algorithm + " metric out of range: " + line;
        return false;
      }
    ++rows;
  }
  if (rows != 5) {
    detail = std::to_string(rows) + " rows";
    return false;
  }

  const CliRun second = run_cli(args);
  if (second.code != 0 || slurp(base.string() + ".tsv") != tsv) {
    detail = "rerun changed the report";
    return false;
  }

  const std::string golden =
      slurp(fs::path(WG_GOLDEN_DIR) / "eval_report.tsv");
  if (golden.empty()) {
    detail = "golden eval_report.tsv is missing";
    return false;
  }
  if (tsv != golden) {
    detail = "report deviates from the golden copy";
    return false;
  }
  return true;
}

bool subcommand_determinism(std::string& detail) {
  const std::string rank_args = "rank --corpus " +
                                data_file("sample_corpus.pos") +
                                " --algorithm refscore";
  const std::string eval_args = "eval --corpus " + data_file("sample_corpus.pos");
  const std::string stats_args =
      "graph-stats --graph " + data_file("fixtures/five_stage_lattice.wg");
  for (const auto& [name, args] :
       std::vector<std::pair<std::string, std::string>>{
           {"rank", rank_args}, {"eval", eval_args}, {"graph-stats",
                                                      stats_args}}) {
    const CliRun a = run_cli(args);
    const CliRun b = run_cli(args);
    if (a.code != 0 || b.code != 0) {
      detail = name + " exited " + std::to_string(a.code) + "/" +
               std::to_string(b.code);
      return false;
    }
    if (a.out.empty() || a.out != b.out) {
      detail = name + " output changed between runs";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion("exact 128-bit path counts match exhaustive enumeration",
            exact_path_counts);
  criterion("accumulated-weight extremes match enumerated path sums",
            prefix_extremes);
  criterion("position-discounted power matches brute-force enumeration",
            discounted_power);
  criterion("reference rank equals the enumerated path fraction",
            reference_fraction);
  criterion("endorsement scores align with the dense eigenvector oracle",
            endorsement_oracle);
  criterion("random-surfer scores match the dense stationary solve",
            surfer_oracle);
  criterion("graph rewrites preserve label sequences and invariants",
            rewrites_preserve_sequences);
  criterion("five-stage lattice statistics are exact", fixture_statistics);
  criterion("confusion counts and metrics follow the standard formulas",
            metric_arithmetic);
  criterion("full-corpus evaluation is fast, sane, and reproducible",
            corpus_evaluation);
  criterion("all subcommands emit byte-identical output across runs",
            subcommand_determinism);

  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
