#include "lcos/pipeline.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "lcos/dot.hpp"
#include "lcos/errors.hpp"
#include "lcos/oracle.hpp"

namespace lcos {

OracleMode parse_oracle_mode(const std::string& text) {
  if (text == "live") return OracleMode::live;
  if (text == "replay") return OracleMode::replay;
  if (text == "synthetic") return OracleMode::synthetic;
  throw ValidationError("unknown oracle mode '" + text +
                        "' (expected live, replay or synthetic)");
}

std::string to_string(OracleMode mode) {
  switch (mode) {
    case OracleMode::live:
      return "live";
    case OracleMode::replay:
      return "replay";
    case OracleMode::synthetic:
      return "synthetic";
  }
  throw ValidationError("unknown oracle mode");
}

PromptTemplate RunConfig::prompt_template() const {
  PromptTemplate tmpl = PromptTemplate::defaults();
  tmpl.verbs = verbs;
  tmpl.validate();
  return tmpl;
}

void atomic_write(const std::filesystem::path& path,
                  const std::string& content) {
  std::filesystem::create_directories(path.parent_path().empty()
                                          ? "."
                                          : path.parent_path());
  const std::filesystem::path temp = path.string() + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ValidationError("cannot write " + temp.string());
    }
    out << content;
    out.flush();
    if (!out) {
      throw ValidationError("short write to " + temp.string());
    }
  }
  std::filesystem::rename(temp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot read " + path.string());
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ConsistencyMatrix load_matrix_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (path.extension() == ".csv") {
    return ConsistencyMatrix::from_csv(text);
  }
  try {
    return ConsistencyMatrix::from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("matrix file " + path.string() + ": " + e.what());
  }
}

OrderDistribution load_distribution_file(const std::filesystem::path& path) {
  try {
    return OrderDistribution::from_json(nlohmann::json::parse(read_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("distribution file " + path.string() + ": " +
                          e.what());
  }
}

namespace {

std::string env_or(const char* name, const std::string& fallback) {
  const char* value = std::getenv(name);
  return value != nullptr && *value != '\0' ? value : fallback;
}

std::string dump_json(const nlohmann::ordered_json& j) {
  return j.dump(2) + "\n";
}

std::filesystem::path output_path(const RunConfig& config,
                                  const std::string& stem,
                                  const std::string& suffix) {
  return config.out_dir / (stem + suffix);
}

}  // namespace

QueryOutput cmd_query(const Dataset& dataset, const RunConfig& config) {
  dataset.validate();
  if (config.repeats < 1) {
    throw ValidationError("repeats must be >= 1");
  }
  std::filesystem::create_directories(config.out_dir);
  const std::filesystem::path matrix_file =
      output_path(config, dataset.name, "_matrix.json");

  if (config.mode == OracleMode::synthetic) {
    if (!dataset.true_edges.has_value()) {
      throw ValidationError(
          "synthetic mode needs a dataset with reference edges");
    }
    const ConsistencyMatrix matrix = synth_matrix(
        dataset.true_dag(), config.repeats, config.noise, config.seed);
    atomic_write(matrix_file, dump_json(matrix.to_json()));
    return {matrix, matrix_file, std::nullopt};
  }

  const PromptTemplate tmpl = config.prompt_template();
  const std::filesystem::path cache_file =
      config.cache_path.empty()
          ? output_path(config, dataset.name, "_cache.jsonl")
          : config.cache_path;

  BuildOptions build;
  build.dataset_id = dataset.name;
  build.repeats = config.repeats;
  build.retry_limit = config.retry_limit;
  build.on_parse_failure = config.on_parse_failure;
  build.parallelism = config.parallelism;

  if (config.mode == OracleMode::replay) {
    if (!std::filesystem::exists(cache_file)) {
      throw IncompleteMatrixError("replay cache " + cache_file.string() +
                                  " does not exist");
    }
    ResponseCache cache = ResponseCache::open(cache_file, dataset.name,
                                              config.model, tmpl.stable_hash());
    build.allow_queries = false;
    const ConsistencyMatrix matrix =
        build_matrix(dataset.variables, tmpl, nullptr, cache, build);
    atomic_write(matrix_file, dump_json(matrix.to_json()));
    return {matrix, matrix_file, cache_file};
  }

  // Live mode; explicit flags beat the environment.
  HttpOracle::Options http;
  http.endpoint = config.endpoint.empty() ? env_or("LCOS_ENDPOINT", "")
                                          : config.endpoint;
  http.model = config.model;
  http.api_key =
      config.api_key.empty() ? env_or("LCOS_API_KEY", "") : config.api_key;
  http.temperature = config.temperature;
  HttpOracle oracle(http);

  ResponseCache cache = ResponseCache::open(cache_file, dataset.name,
                                            oracle.id(), tmpl.stable_hash());
  const ConsistencyMatrix matrix =
      build_matrix(dataset.variables, tmpl, &oracle, cache, build);
  atomic_write(matrix_file, dump_json(matrix.to_json()));
  return {matrix, matrix_file, cache_file};
}

SolveOutput cmd_solve(const ConsistencyMatrix& matrix, const std::string& stem,
                      const RunConfig& config) {
  std::filesystem::create_directories(config.out_dir);
  AssembleOptions options;
  options.scc_cap = config.scc_cap;
  options.noninformative_fixpoint = config.noninformative_fixpoint;

  SolveOutput output{assemble_distribution(matrix, options),
                     output_path(config, stem, "_distribution.json"), false};

  if (config.verify) {
    const int informative = output.distribution.tournaments.empty()
                                ? 0
                                : output.distribution.tournaments.front().size();
    if (informative > 8) {
      throw ValidationError(
          "--verify needs at most 8 informative vertices (got " +
          std::to_string(informative) + ")");
    }
    const OrderDistribution reference =
        brute_force_distribution(matrix, options);
    if (reference.score != output.distribution.score ||
        reference.removed != output.distribution.removed ||
        reference.tournaments != output.distribution.tournaments) {
      throw VerificationError(
          "solver disagrees with the brute-force oracle on stem '" + stem +
          "'");
    }
    output.verified = true;
  }

  nlohmann::ordered_json j = output.distribution.to_json();
  if (output.verified) j["verified"] = true;
  atomic_write(output.distribution_file, dump_json(j));

  if (config.dot_exports) {
    const SemiCompleteDigraph graph = SemiCompleteDigraph::from_matrix(matrix);
    atomic_write(output_path(config, stem, "_graph.dot"), to_dot(graph));
    for (std::size_t k = 0; k < output.distribution.tournaments.size(); ++k) {
      atomic_write(output_path(config, stem,
                               "_order_" + std::to_string(k) + ".dot"),
                   to_dot(output.distribution.tournaments[k]));
    }
  }

  if (config.expand_removed_view) {
    const auto expanded = expand_removed(output.distribution);
    nlohmann::ordered_json ej;
    ej["orders"] = nlohmann::ordered_json::array();
    for (const auto& t : expanded) ej["orders"].push_back(t.order);
    ej["count"] = expanded.size();
    atomic_write(output_path(config, stem, "_expanded.json"), dump_json(ej));
  }
  return output;
}

SolveOutput cmd_solve_file(const std::filesystem::path& matrix_file,
                           const RunConfig& config) {
  std::string stem = matrix_file.stem().string();
  const std::string suffix = "_matrix";
  if (stem.size() > suffix.size() &&
      stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0) {
    stem.resize(stem.size() - suffix.size());
  }
  return cmd_solve(load_matrix_file(matrix_file), stem, config);
}

namespace {

std::string format_table_row(const CoeReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << report.graph_name << "  best " << to_double(report.best) << "  avg "
      << to_double(report.average) << "  std " << report.stddev << "  orders "
      << report.per_member.size() << "  V " << report.vertex_count << "  E "
      << report.pair_count << "  norm " << to_string(report.normalization);
  return out.str();
}

}  // namespace

EvalOutput cmd_eval(const OrderDistribution& distribution,
                    const Dataset& dataset, const RunConfig& config) {
  dataset.validate();
  if (!dataset.true_edges.has_value()) {
    throw ValidationError("dataset '" + dataset.name +
                          "' has no reference edges to evaluate against");
  }
  std::filesystem::create_directories(config.out_dir);
  const DescendantGraph closure = DescendantGraph::from_dag(dataset.true_dag());
  EvalOutput output;
  output.report =
      evaluate_distribution(closure, distribution, config.coe, dataset.name);
  output.report_file = output_path(config, dataset.name, "_report.json");
  output.table_row = format_table_row(output.report);
  atomic_write(output.report_file, dump_json(output.report.to_json()));
  return output;
}

EvalOutput cmd_eval_file(const std::filesystem::path& distribution_file,
                         const std::filesystem::path& dataset_file,
                         const RunConfig& config) {
  return cmd_eval(load_distribution_file(distribution_file),
                  load_dataset(dataset_file.string()), config);
}

PipelineOutput run_pipeline(const Dataset& dataset, const RunConfig& config) {
  PipelineOutput output{cmd_query(dataset, config),
                        SolveOutput{OrderDistribution{}, {}, false},
                        std::nullopt,
                        {}};
  output.solve = cmd_solve(output.query.matrix, dataset.name, config);
  if (dataset.true_edges.has_value()) {
    output.eval = cmd_eval(output.solve.distribution, dataset, config);
  }

  nlohmann::ordered_json summary;
  summary["dataset"] = dataset.name;
  summary["oracle"] = to_string(config.mode);
  summary["matrix_file"] = output.query.matrix_file.filename().string();
  summary["distribution_file"] =
      output.solve.distribution_file.filename().string();
  summary["score"] = to_fraction_string(output.solve.distribution.score);
  summary["removed"] = output.solve.distribution.removed;
  summary["n_orders"] = output.solve.distribution.tournaments.size();
  if (output.solve.verified) summary["verified"] = true;
  if (output.eval.has_value()) {
    summary["report_file"] = output.eval->report_file.filename().string();
    summary["best"] = to_double(output.eval->report.best);
    summary["avg"] = to_double(output.eval->report.average);
    summary["std"] = output.eval->report.stddev;
  }
  if (config.expand_removed_view) {
    const auto expanded = expand_removed(output.solve.distribution);
    summary["n_orders_expanded"] = expanded.size();
  }
  output.summary_file = output_path(config, dataset.name, "_summary.json");
  atomic_write(output.summary_file, dump_json(summary));
  return output;
}

}  // namespace lcos
