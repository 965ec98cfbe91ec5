#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "lcos/errors.hpp"
#include "lcos/pipeline.hpp"

namespace {

std::vector<std::string> read_verbs_file(const std::string& path) {
  const std::string text = lcos::read_file(path);
  std::vector<std::string> verbs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t");
    line = line.substr(begin, end - begin + 1);
    if (line.empty() || line[0] == '#') continue;
    verbs.push_back(line);
  }
  if (verbs.empty()) {
    throw lcos::ValidationError("verb file " + path + " lists no verbs");
  }
  return verbs;
}

struct CliState {
  lcos::RunConfig config;
  std::string oracle = "replay";
  std::string format = "json";
  std::string coe_norm = "per_pair";
  std::string parse_failure = "count_false";
  std::string verbs_file;
  std::string cache;
  std::string out_dir = ".";

  void apply() {
    config.mode = lcos::parse_oracle_mode(oracle);
    config.coe.normalization = lcos::parse_normalization(coe_norm);
    if (format == "dot") {
      config.dot_exports = true;
    } else if (format != "json") {
      throw lcos::ValidationError("unknown format '" + format +
                                  "' (expected json or dot)");
    }
    if (parse_failure == "count_false") {
      config.on_parse_failure = lcos::ParseFailurePolicy::count_false;
    } else if (parse_failure == "next_verb") {
      config.on_parse_failure = lcos::ParseFailurePolicy::next_verb;
    } else {
      throw lcos::ValidationError("unknown parse-failure policy '" +
                                  parse_failure + "'");
    }
    if (!verbs_file.empty()) {
      config.verbs = read_verbs_file(verbs_file);
    }
    if (!cache.empty()) {
      config.cache_path = cache;
    }
    config.out_dir = out_dir;
  }
};

void add_common_options(CLI::App* cmd, CliState& state) {
  cmd->add_option("--out", state.out_dir, "Output directory");
  cmd->add_option("--scc-cap", state.config.scc_cap,
                  "Largest strongly connected component the exact solver accepts");
  cmd->add_option("--coe-norm", state.coe_norm,
                  "COE normalization: per_vertex, per_pair or per_desc_edge");
  cmd->add_flag("--coe-lenient-removed", state.config.coe.lenient_removed,
                "Exclude reference edges touching removed vertices from the COE");
  cmd->add_flag("--ni-fixpoint", state.config.noninformative_fixpoint,
                "Repeat non-informative vertex removal until stable");
  cmd->add_flag("--expand-removed", state.config.expand_removed_view,
                "Also write orders with removed vertices re-inserted everywhere");
  cmd->add_option("--format", state.format, "json (default) or dot");
}

void add_query_options(CLI::App* cmd, CliState& state) {
  cmd->add_option("--oracle", state.oracle, "live, replay or synthetic");
  cmd->add_option("--endpoint", state.config.endpoint,
                  "Chat-completions endpoint (default $LCOS_ENDPOINT)");
  cmd->add_option("--api-key", state.config.api_key,
                  "Bearer token for the endpoint (default $LCOS_API_KEY)");
  cmd->add_option("--model", state.config.model, "Model name");
  cmd->add_option("--cache", state.cache,
                  "Response cache file (default <out>/<dataset>_cache.jsonl)");
  cmd->add_option("--repeats", state.config.repeats,
                  "Repetitions per ordered pair");
  cmd->add_option("--retry-limit", state.config.retry_limit,
                  "Retries per (pair, verb) after a parse failure");
  cmd->add_option("--on-parse-failure", state.parse_failure,
                  "count_false (default) or next_verb");
  cmd->add_option("--verbs", state.verbs_file,
                  "File with one causal verb per line");
  cmd->add_option("--seed", state.config.seed, "Seed for the synthetic oracle");
  cmd->add_option("--parallelism", state.config.parallelism,
                  "Concurrent oracle queries in live mode");
  cmd->add_option("--temperature", state.config.temperature,
                  "Sampling temperature for live queries");
  cmd->add_option("--noise-descendant", state.config.noise.p_descendant,
                  "Synthetic: P(true) when the target descends from the source");
  cmd->add_option("--noise-ancestor", state.config.noise.p_ancestor,
                  "Synthetic: P(true) when the source descends from the target");
  cmd->add_option("--noise-unrelated", state.config.noise.p_unrelated,
                  "Synthetic: P(true) for unrelated pairs");
  cmd->add_flag("--noise-deterministic", state.config.noise.deterministic,
                "Synthetic: write expected counts instead of sampling");
}

int protected_main(int argc, char** argv) {
  CLI::App app{"Causal order discovery from pairwise oracle answers"};
  app.require_subcommand(1);

  CliState state;
  std::string dataset_file;
  std::string matrix_file;
  std::string distribution_file;
  std::string edges_file;
  std::string converted_name = "converted";
  std::string converted_out;

  CLI::App* query = app.add_subcommand(
      "query", "Build the consistency matrix for a dataset");
  query->add_option("--dataset", dataset_file, "Dataset JSON file")
      ->required();
  add_query_options(query, state);
  add_common_options(query, state);

  CLI::App* solve = app.add_subcommand(
      "solve", "Derive the optimal-order distribution from a matrix");
  solve->add_option("--matrix", matrix_file, "Matrix JSON or CSV file")
      ->required();
  solve->add_flag("--verify", state.config.verify,
                  "Cross-check against brute force (<= 8 informative vertices)");
  add_common_options(solve, state);

  CLI::App* eval = app.add_subcommand(
      "eval", "Score a distribution against a dataset's reference edges");
  eval->add_option("--distribution", distribution_file,
                   "Distribution JSON file")
      ->required();
  eval->add_option("--dataset", dataset_file, "Dataset JSON file")->required();
  add_common_options(eval, state);

  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "Run query, solve and eval in sequence");
  pipeline->add_option("--dataset", dataset_file, "Dataset JSON file")
      ->required();
  pipeline->add_flag(
      "--verify", state.config.verify,
      "Cross-check against brute force (<= 8 informative vertices)");
  add_query_options(pipeline, state);
  add_common_options(pipeline, state);

  CLI::App* convert = app.add_subcommand(
      "convert", "Turn an edge-list file into a dataset JSON");
  convert->add_option("--edges", edges_file, "Edge list (one 'A B' per line)")
      ->required();
  convert->add_option("--name", converted_name, "Dataset name");
  convert->add_option("--out-file", converted_out,
                      "Write here instead of stdout");

  CLI11_PARSE(app, argc, argv);
  state.apply();

  if (query->parsed()) {
    const lcos::QueryOutput out =
        lcos::cmd_query(lcos::load_dataset(dataset_file), state.config);
    std::cout << "matrix: " << out.matrix_file.string() << "\n";
    if (out.cache_file.has_value()) {
      std::cout << "cache: " << out.cache_file->string() << "\n";
    }
  } else if (solve->parsed()) {
    const lcos::SolveOutput out =
        lcos::cmd_solve_file(matrix_file, state.config);
    std::cout << "distribution: " << out.distribution_file.string() << " ("
              << out.distribution.tournaments.size() << " orders, score "
              << lcos::to_fraction_string(out.distribution.score) << ")\n";
    if (out.verified) std::cout << "verified against brute force\n";
  } else if (eval->parsed()) {
    const lcos::EvalOutput out =
        lcos::cmd_eval_file(distribution_file, dataset_file, state.config);
    std::cout << out.table_row << "\n";
    std::cout << "report: " << out.report_file.string() << "\n";
  } else if (pipeline->parsed()) {
    const lcos::PipelineOutput out =
        lcos::run_pipeline(lcos::load_dataset(dataset_file), state.config);
    std::cout << "matrix: " << out.query.matrix_file.string() << "\n";
    std::cout << "distribution: " << out.solve.distribution_file.string()
              << " (" << out.solve.distribution.tournaments.size()
              << " orders, score "
              << lcos::to_fraction_string(out.solve.distribution.score)
              << ")\n";
    if (out.eval.has_value()) {
      std::cout << out.eval->table_row << "\n";
    } else {
      std::cout << "no reference edges; evaluation skipped\n";
    }
    std::cout << "summary: " << out.summary_file.string() << "\n";
  } else if (convert->parsed()) {
    const lcos::Dataset dataset = lcos::dataset_from_edge_list(
        lcos::read_file(edges_file), converted_name);
    const std::string text = dataset.to_json().dump(2) + "\n";
    if (converted_out.empty()) {
      std::cout << text;
    } else {
      lcos::atomic_write(converted_out, text);
      std::cout << "dataset: " << converted_out << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return protected_main(argc, argv);
  } catch (const lcos::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
