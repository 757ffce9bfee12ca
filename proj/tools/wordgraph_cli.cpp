// Command-line front end: builds word graphs from POS-tagged corpora,
// ranks their words, evaluates rankings against a gold set, and dumps
// structural statistics. Diagnostics go to stderr, data to stdout or
// the requested output files.

#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wordgraph/wordgraph.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitEmptyInput = 3;
constexpr int kExitNotConverged = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wordgraph::ConfigError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw wordgraph::ConfigError("cannot write file: " + path);
  out << content;
  if (!out) throw wordgraph::ConfigError("write failed: " + path);
}

// Flags shared by the corpus-consuming subcommands.
struct PipelineOptions {
  std::string corpus_path;
  std::string stopwords_path;
  std::string stem_rules_path;
  std::string weighting = "bigram";
  bool compress_graph = false;
};

struct IterationOptions {
  double damping = 0.85;
  double tolerance = 1e-8;
  unsigned max_iterations = 100;

  wordgraph::IterationParams params() const {
    if (damping <= 0.0 || damping >= 1.0)
      throw wordgraph::ConfigError(
          "damping must lie strictly between 0 and 1");
    if (tolerance <= 0.0)
      throw wordgraph::ConfigError("tolerance must be positive");
    if (max_iterations == 0)
      throw wordgraph::ConfigError("max iteration count must be positive");
    return {damping, tolerance, max_iterations};
  }
};

void add_pipeline_flags(CLI::App& cmd, PipelineOptions& opts,
                        bool corpus_required) {
  auto* corpus =
      cmd.add_option("--corpus", opts.corpus_path, "POS-tagged corpus file");
  if (corpus_required) corpus->required();
  cmd.add_option("--stopwords", opts.stopwords_path,
                 "stop-word list (one word per line)");
  cmd.add_option("--stem-rules", opts.stem_rules_path,
                 "suffix-strip rules (one suffix per line)");
  cmd.add_option("--weighting", opts.weighting, "edge weighting scheme")
      ->check(CLI::IsMember({"bigram", "uniform", "logcount"}))
      ->capture_default_str();
  cmd.add_flag("--compress", opts.compress_graph,
               "deduplicate label sequences and share suffixes before "
               "ranking");
}

void add_iteration_flags(CLI::App& cmd, IterationOptions& opts) {
  cmd.add_option("--damping", opts.damping,
                 "follow probability for the random surfer")
      ->capture_default_str();
  cmd.add_option("--tol", opts.tolerance, "iteration convergence tolerance")
      ->capture_default_str();
  cmd.add_option("--max-iter", opts.max_iterations, "iteration cap")
      ->capture_default_str();
}

wordgraph::Weighting parse_weighting(const std::string& name) {
  if (name == "bigram") return wordgraph::Weighting::kBigram;
  if (name == "uniform") return wordgraph::Weighting::kUniform;
  if (name == "logcount") return wordgraph::Weighting::kLogCount;
  throw wordgraph::ConfigError("unknown weighting scheme: " + name);
}

std::string validated_algorithm(const std::string& id) {
  for (const char* known : wordgraph::kAlgorithmIds)
    if (id == known) return id;
  std::string valid;
  for (const char* known : wordgraph::kAlgorithmIds) {
    if (!valid.empty()) valid += ", ";
    valid += known;
  }
  throw wordgraph::ConfigError("unknown algorithm identifier: " + id +
                               " (valid: " + valid + ")");
}

wordgraph::RefScorePolicy parse_ref_score(const std::string& text) {
  if (text == "auto") return wordgraph::RefScorePolicy::midpoint();
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return wordgraph::RefScorePolicy::fixed(value);
  } catch (const std::exception&) {
    throw wordgraph::ConfigError("--ref-score expects a number or 'auto', got: " +
                                 text);
  }
}

std::size_t parse_top_k(const std::string& text) {
  if (text == "auto") return 0;  // resolved to the gold-set size downstream
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used != text.size() || value <= 0) throw std::invalid_argument(text);
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw wordgraph::ConfigError(
        "--top-k expects a positive integer or 'auto', got: " + text);
  }
}

std::set<std::string> parse_gold_tags(const std::string& csv) {
  std::set<std::string> tags;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string tag =
        csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tag.empty()) tags.insert(tag);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (tags.empty())
    throw wordgraph::ConfigError("--gold-tags lists no usable tag: " + csv);
  return tags;
}

struct PipelineResult {
  wordgraph::TokenizedDocument document;
  wordgraph::PreprocessConfig config;
  wordgraph::WordGraph graph;
};

PipelineResult run_pipeline(const PipelineOptions& opts) {
  wordgraph::PreprocessConfig config;
  if (!opts.stem_rules_path.empty())
    config.stem_rules = wordgraph::load_stem_rules(opts.stem_rules_path);
  // Stop words are matched against stems, so push the entries through
  // the same stemmer they will be compared under.
  if (!opts.stopwords_path.empty())
    for (const auto& word : wordgraph::load_stop_words(opts.stopwords_path))
      config.stop_words.insert(wordgraph::stem(word, config));

  const std::string bytes = read_file(opts.corpus_path);
  wordgraph::TokenizedDocument doc =
      wordgraph::parse_pos_file(bytes, opts.corpus_path);
  wordgraph::PreprocessStats stats;
  doc = wordgraph::preprocess(doc, config, &stats);
  if (doc.sentences.empty())
    throw wordgraph::EmptyInputError(
        "preprocessing removed every sentence from " + opts.corpus_path);

  wordgraph::WeightingConfig weighting{parse_weighting(opts.weighting)};
  wordgraph::WordGraph graph = wordgraph::build_word_graph(doc, weighting);
  if (opts.compress_graph) graph = wordgraph::compress(graph);
  return {std::move(doc), std::move(config), std::move(graph)};
}

void print_graph_diagnostics(const wordgraph::WordGraph& g) {
  std::cerr << "graph: vertices=" << g.vertex_count()
            << " edges=" << g.edge_count()
            << " density=" << wordgraph::density(g);
  try {
    std::cerr << " paths=" << wordgraph::to_string(wordgraph::count_paths(g));
  } catch (const wordgraph::OverflowError&) {
    std::cerr << " paths=>2^128";
  }
  std::cerr << "\n";
}

void emit(const std::string& content, const std::string& output_path) {
  if (output_path.empty())
    std::cout << content;
  else
    write_file(output_path, content);
}

// --- rank ---------------------------------------------------------------

struct RankOptions {
  PipelineOptions pipeline;
  IterationOptions iteration;
  std::string algorithm = "pagerank";
  std::string ref_score = "auto";
  std::string aggregate = "sum";
  std::string format = "tsv";
  std::string output_path;
  bool strict = false;
};

int run_rank(const RankOptions& opts) {
  const std::string algorithm = validated_algorithm(opts.algorithm);
  const PipelineResult pipe = run_pipeline(opts.pipeline);
  print_graph_diagnostics(pipe.graph);

  const wordgraph::WordRanking ranking = wordgraph::rank_words(
      pipe.graph, algorithm, opts.iteration.params(),
      parse_ref_score(opts.ref_score),
      wordgraph::parse_aggregate(opts.aggregate));

  emit(opts.format == "json" ? wordgraph::write_ranking_json(ranking)
                             : wordgraph::write_ranking_tsv(ranking),
       opts.output_path);

  if (!ranking.converged) {
    std::cerr << "warning: " << algorithm << " did not converge within "
              << opts.iteration.max_iterations << " iterations\n";
    if (opts.strict) return kExitNotConverged;
  }
  return kExitOk;
}

// --- eval ---------------------------------------------------------------

struct EvalOptions {
  PipelineOptions pipeline;
  IterationOptions iteration;
  std::string gold_path;
  std::string gold_tags;
  std::string top_k = "auto";
  std::string ref_score = "auto";
  std::string aggregate = "sum";
  std::string format = "tsv";
  std::string output_base;
  std::string plot_csv_path;
  bool strict = false;
};

int run_eval(const EvalOptions& opts) {
  const PipelineResult pipe = run_pipeline(opts.pipeline);
  print_graph_diagnostics(pipe.graph);

  wordgraph::GoldSet gold;
  if (!opts.gold_path.empty()) {
    gold = wordgraph::load_gold(opts.gold_path, &pipe.config);
  } else {
    const std::set<std::string> tags = opts.gold_tags.empty()
                                           ? wordgraph::kDefaultGoldTags
                                           : parse_gold_tags(opts.gold_tags);
    gold = wordgraph::derive_gold_from_pos(pipe.document, tags);
  }
  std::cerr << "gold: " << gold.relevant.size() << " words\n";

  const wordgraph::EvalReport report = wordgraph::compare_algorithms(
      pipe.graph, gold, opts.iteration.params(), parse_top_k(opts.top_k),
      wordgraph::parse_aggregate(opts.aggregate),
      parse_ref_score(opts.ref_score), &std::cerr);

  if (opts.output_base.empty()) {
    std::cout << (opts.format == "json" ? wordgraph::write_report_json(report)
                                        : wordgraph::write_report_tsv(report));
  } else {
    write_file(opts.output_base + ".tsv", wordgraph::write_report_tsv(report));
    write_file(opts.output_base + ".json",
               wordgraph::write_report_json(report));
  }
  if (!opts.plot_csv_path.empty())
    write_file(opts.plot_csv_path, wordgraph::write_report_plot_csv(report));

  bool all_converged = true;
  for (const wordgraph::EvalRow& row : report.rows) {
    if (!row.converged) {
      all_converged = false;
      std::cerr << "warning: " << row.algorithm << " did not converge within "
                << opts.iteration.max_iterations << " iterations\n";
    }
  }
  if (!all_converged && opts.strict) return kExitNotConverged;
  return kExitOk;
}

// --- graph-stats --------------------------------------------------------

struct StatsOptions {
  PipelineOptions pipeline;
  std::string graph_path;
  std::string output_path;
};

int run_graph_stats(const StatsOptions& opts) {
  std::optional<wordgraph::WordGraph> graph;
  if (!opts.graph_path.empty()) {
    graph = wordgraph::read_graph_file(opts.graph_path);
    if (opts.pipeline.compress_graph) graph = wordgraph::compress(*graph);
  } else {
    graph = run_pipeline(opts.pipeline).graph;
  }

  nlohmann::ordered_json doc;
  doc["vertices"] = graph->vertex_count();
  doc["edges"] = graph->edge_count();
  doc["start"] = graph->start();
  doc["end"] = graph->end();
  doc["density"] = wordgraph::density(*graph);
  try {
    doc["path_count"] = wordgraph::to_string(wordgraph::count_paths(*graph));
    doc["path_count_overflow"] = false;
  } catch (const wordgraph::OverflowError&) {
    doc["path_count"] = nullptr;
    doc["path_count_overflow"] = true;
  }
  try {
    doc["parser_steps"] = wordgraph::to_string(wordgraph::parser_steps(*graph));
    doc["parser_steps_overflow"] = false;
  } catch (const wordgraph::OverflowError&) {
    doc["parser_steps"] = nullptr;
    doc["parser_steps_overflow"] = true;
  }
  // Construction re-validates, so reaching this point settles the flag.
  doc["topologically_valid"] = true;

  emit(doc.dump(2) + "\n", opts.output_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word-graph builder, word ranker, and evaluation harness"};
  app.require_subcommand(1);

  RankOptions rank_opts;
  CLI::App* rank_cmd =
      app.add_subcommand("rank", "rank the corpus vocabulary");
  add_pipeline_flags(*rank_cmd, rank_opts.pipeline, /*corpus_required=*/true);
  add_iteration_flags(*rank_cmd, rank_opts.iteration);
  rank_cmd->add_option("--algorithm", rank_opts.algorithm, "ranking algorithm")
      ->capture_default_str();
  rank_cmd->add_option("--ref-score", rank_opts.ref_score,
                       "reference score, a number or 'auto'")
      ->capture_default_str();
  rank_cmd->add_option("--aggregate", rank_opts.aggregate,
                       "word score aggregation")
      ->check(CLI::IsMember({"sum", "max", "mean"}))
      ->capture_default_str();
  rank_cmd->add_option("--format", rank_opts.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  rank_cmd->add_option("--output", rank_opts.output_path,
                       "write the ranking here instead of stdout");
  rank_cmd->add_flag("--strict", rank_opts.strict,
                     "fail when an iterative scorer does not converge");

  EvalOptions eval_opts;
  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "score all ranking algorithms against a gold set");
  add_pipeline_flags(*eval_cmd, eval_opts.pipeline, /*corpus_required=*/true);
  add_iteration_flags(*eval_cmd, eval_opts.iteration);
  eval_cmd->add_option("--gold", eval_opts.gold_path,
                       "gold word list; derived from POS tags when absent");
  eval_cmd->add_option("--gold-tags", eval_opts.gold_tags,
                       "comma-separated POS tags marking relevant words");
  eval_cmd->add_option("--top-k", eval_opts.top_k,
                       "prediction cutoff, a count or 'auto' (= gold size)")
      ->capture_default_str();
  eval_cmd->add_option("--ref-score", eval_opts.ref_score,
                       "reference score, a number or 'auto'")
      ->capture_default_str();
  eval_cmd->add_option("--aggregate", eval_opts.aggregate,
                       "word score aggregation")
      ->check(CLI::IsMember({"sum", "max", "mean"}))
      ->capture_default_str();
  eval_cmd->add_option("--format", eval_opts.format,
                       "stdout format when --output is not given")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  eval_cmd->add_option("--output", eval_opts.output_base,
                       "base path; writes <base>.tsv and <base>.json");
  eval_cmd->add_option("--plot-csv", eval_opts.plot_csv_path,
                       "also write plot-ready CSV metrics here");
  eval_cmd->add_flag("--strict", eval_opts.strict,
                     "fail when an iterative scorer does not converge");

  StatsOptions stats_opts;
  CLI::App* stats_cmd = app.add_subcommand(
      "graph-stats", "structural statistics of the word graph");
  add_pipeline_flags(*stats_cmd, stats_opts.pipeline,
                     /*corpus_required=*/false);
  stats_cmd
      ->add_option("--graph", stats_opts.graph_path,
                   "read a graph dump instead of building from a corpus")
      ->excludes("--corpus");
  stats_cmd->add_option("--output", stats_opts.output_path,
                        "write the stats here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (rank_cmd->parsed()) return run_rank(rank_opts);
    if (eval_cmd->parsed()) return run_eval(eval_opts);
    if (stats_opts.graph_path.empty() && stats_opts.pipeline.corpus_path.empty())
      throw wordgraph::ConfigError("graph-stats needs --corpus or --graph");
    return run_graph_stats(stats_opts);
  } catch (const wordgraph::EmptyInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEmptyInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
