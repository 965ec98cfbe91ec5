#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "lcos/builder.hpp"
#include "lcos/dataset.hpp"
#include "lcos/matrix.hpp"
#include "lcos/metrics.hpp"
#include "lcos/synthetic.hpp"
#include "lcos/tournament.hpp"

namespace lcos {

enum class OracleMode { live, replay, synthetic };

OracleMode parse_oracle_mode(const std::string& text);
std::string to_string(OracleMode mode);

// Everything a run needs beyond the dataset. One seed drives all randomness.
struct RunConfig {
  OracleMode mode = OracleMode::replay;
  std::string endpoint;            // falls back to $LCOS_ENDPOINT
  std::string model = "llama3.1:8b";
  std::string api_key;             // falls back to $LCOS_API_KEY
  std::filesystem::path cache_path;  // default: <out>/<dataset>_cache.jsonl
  int repeats = 10;
  int retry_limit = 3;
  ParseFailurePolicy on_parse_failure = ParseFailurePolicy::count_false;
  std::vector<std::string> verbs = default_verbs();
  std::uint64_t seed = 0;
  int scc_cap = 20;
  bool noninformative_fixpoint = false;
  SyntheticNoise noise;
  CoeOptions coe;
  double temperature = 0.0;
  int parallelism = 4;
  std::filesystem::path out_dir = ".";
  bool verify = false;
  bool dot_exports = false;  // --format dot
  bool expand_removed_view = false;

  PromptTemplate prompt_template() const;
};

void atomic_write(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

// Dispatches on extension: .csv or .json.
ConsistencyMatrix load_matrix_file(const std::filesystem::path& path);
OrderDistribution load_distribution_file(const std::filesystem::path& path);

struct QueryOutput {
  ConsistencyMatrix matrix;
  std::filesystem::path matrix_file;
  std::optional<std::filesystem::path> cache_file;
};

// Obtains the consistency matrix per config.mode and writes it. Live and
// replay runs go through the response cache, so interrupted runs resume and
// recorded runs replay without a network.
QueryOutput cmd_query(const Dataset& dataset, const RunConfig& config);

struct SolveOutput {
  OrderDistribution distribution;
  std::filesystem::path distribution_file;
  bool verified = false;
};

SolveOutput cmd_solve(const ConsistencyMatrix& matrix, const std::string& stem,
                      const RunConfig& config);
SolveOutput cmd_solve_file(const std::filesystem::path& matrix_file,
                           const RunConfig& config);

struct EvalOutput {
  CoeReport report;
  std::filesystem::path report_file;
  std::string table_row;  // one formatted summary line
};

EvalOutput cmd_eval(const OrderDistribution& distribution,
                    const Dataset& dataset, const RunConfig& config);
EvalOutput cmd_eval_file(const std::filesystem::path& distribution_file,
                         const std::filesystem::path& dataset_file,
                         const RunConfig& config);

struct PipelineOutput {
  QueryOutput query;
  SolveOutput solve;
  std::optional<EvalOutput> eval;  // absent when the dataset has no reference
  std::filesystem::path summary_file;
};

PipelineOutput run_pipeline(const Dataset& dataset, const RunConfig& config);

}  // namespace lcos
