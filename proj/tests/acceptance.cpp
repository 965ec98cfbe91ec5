// Acceptance gate: one pass/fail line per criterion, exit 0 only when every
// criterion holds. Each criterion enforces its own wall-clock budget, so a
// regression in solver complexity fails loudly rather than just slowly.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lcos/dataset.hpp"
#include "lcos/errors.hpp"
#include "lcos/matrix.hpp"
#include "lcos/metrics.hpp"
#include "lcos/mtr.hpp"
#include "lcos/pipeline.hpp"
#include "lcos/rational.hpp"
#include "lcos/semicomplete.hpp"
#include "lcos/synthetic.hpp"
#include "lcos/tournament.hpp"
#include "lcos/true_dag.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using lcos::AcyclicTournament;
using lcos::Rational;

const fs::path kData = LCOS_DATA_DIR;

std::string fraction(const Rational& r) { return lcos::to_fraction_string(r); }

lcos::ConsistencyMatrix random_matrix(std::mt19937_64& rng, int n,
                                      int repeats) {
  std::vector<lcos::VariableSpec> vars;
  for (int v = 0; v < n; ++v) vars.push_back({"v" + std::to_string(v), ""});
  lcos::ConsistencyMatrix m(vars, repeats);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        m.set_numerator(i, j, static_cast<int>(rng() % (repeats + 1)));
  return m;
}

std::vector<std::vector<std::string>> order_lists(
    const lcos::OrderDistribution& d) {
  std::vector<std::vector<std::string>> out;
  for (const auto& t : d.tournaments) out.push_back(t.order);
  return out;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

// --- criterion bodies ------------------------------------------------------

// Exact agreement between the staged solver and the all-permutations oracle
// on random matrices over 4-7 variables with scores from {0, 0.1, ..., 1.0}.
bool oracle_equivalence(std::string& detail) {
  std::mt19937_64 rng(20250825);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const auto matrix = random_matrix(rng, n, 10);
    const auto fast = lcos::assemble_distribution(matrix);
    const auto slow = lcos::brute_force_distribution(matrix);
    if (fast.score != slow.score || fast.removed != slow.removed ||
        order_lists(fast) != order_lists(slow)) {
      std::ostringstream why;
      why << "divergence on trial " << trial << " (n=" << n
          << "): staged score " << fraction(fast.score) << " with "
          << fast.tournaments.size() << " orders vs brute "
          << fraction(slow.score) << " with " << slow.tournaments.size();
      detail = why.str();
      return false;
    }
  }
  detail = "500 matrices, staged == brute force";
  return true;
}

// The shipped printed-matrix fixture must resolve to its published answer.
bool printed_fixture(std::string& detail) {
  const auto matrix = lcos::load_matrix_file(kData / "uwxyz_matrix.json");
  const auto d = lcos::assemble_distribution(matrix);
  const std::vector<std::vector<std::string>> expected = {
      {"Z", "W", "X", "Y"}, {"Z", "X", "W", "Y"}};
  if (d.removed != std::vector<std::string>{"U"}) {
    detail = "removed set differs";
    return false;
  }
  if (d.score != Rational(9, 2)) {
    detail = "score " + fraction(d.score) + " != 9/2";
    return false;
  }
  if (order_lists(d) != expected) {
    detail = "order set differs";
    return false;
  }
  detail = "removed {U}, orders {ZWXY, ZXWY}, score 9/2";
  return true;
}

// No sampled order may ever beat an emitted tournament.
bool maximality(std::string& detail) {
  std::mt19937_64 rng(31337);
  long long comparisons = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 5);
    const auto matrix = random_matrix(rng, n, 10);
    const auto d = lcos::assemble_distribution(matrix);

    std::vector<std::string> informative;
    for (const auto& v : matrix.variables()) {
      if (std::find(d.removed.begin(), d.removed.end(), v.name) ==
          d.removed.end()) {
        informative.push_back(v.name);
      }
    }
    // Every member carries the distribution score.
    for (const auto& t : d.tournaments) {
      if (lcos::tournament_score(matrix, t) != d.score) {
        detail = "member score drifts from the distribution score";
        return false;
      }
    }
    for (int sample = 0; sample < 1000; ++sample) {
      std::vector<std::string> order = informative;
      std::shuffle(order.begin(), order.end(), rng);
      ++comparisons;
      if (lcos::tournament_score(matrix, AcyclicTournament(order)) > d.score) {
        std::ostringstream why;
        why << "sampled order beats the distribution on trial " << trial;
        detail = why.str();
        return false;
      }
    }
  }
  std::ostringstream ok;
  ok << comparisons << " sampled orders, zero violations";
  detail = ok.str();
  return true;
}

lcos::SccProblem problem_from_weights(
    const std::vector<std::string>& names,
    const std::vector<std::vector<Rational>>& w) {
  const int n = static_cast<int>(names.size());
  auto p = lcos::SccProblem::make(names);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      p.set_weight(i, j, w[i][j]);
      p.set_weight(j, i, w[j][i]);
      if (w[i][j] > w[j][i]) p.add_edge(i, j);
      if (w[j][i] > w[i][j]) p.add_edge(j, i);
      // Ties carry weights but no edge, as after tie-stripping.
    }
  }
  return p;
}

bool engines_match(const lcos::SccProblem& p, std::string& detail,
                   const std::string& label) {
  const auto dp = lcos::enumerate_optimal(p);
  const auto brute = lcos::brute_force_optimal(p);
  const auto pruned = lcos::enumerate_optimal_exclusion(p);
  lcos::ExclusionOptions no_prune;
  no_prune.prune_supersets = false;
  const auto unpruned = lcos::enumerate_optimal_exclusion(p, no_prune);
  if (dp != brute || pruned != brute || unpruned != brute) {
    detail = label + ": engines disagree (dp " + std::to_string(dp.size()) +
             ", brute " + std::to_string(brute.size()) + ", pruned " +
             std::to_string(pruned.size()) + ", unpruned " +
             std::to_string(unpruned.size()) + ")";
    return false;
  }
  std::set<std::vector<int>> seen;
  for (const auto& solution : dp) {
    if (!seen.insert(solution.order).second) {
      detail = label + ": duplicate order emitted";
      return false;
    }
  }
  return true;
}

// The exclusion-search reference engine, with and without superset pruning,
// must match brute force and the production engine on every 3-vertex weight
// grid over {0, 1/4, 1/2, 3/4, 1} and on random 5-vertex instances.
bool exclusion_soundness(std::string& detail) {
  const std::vector<std::string> names3 = {"a", "b", "c"};
  const std::vector<std::pair<int, int>> dirs = {{0, 1}, {1, 0}, {0, 2},
                                                 {2, 0}, {1, 2}, {2, 1}};
  int grid_count = 0;
  std::vector<int> levels(6, 0);
  while (true) {
    std::vector<std::vector<Rational>> w(3, std::vector<Rational>(3, Rational(0)));
    for (int k = 0; k < 6; ++k) {
      w[dirs[k].first][dirs[k].second] = Rational(levels[k], 4);
    }
    const auto p = problem_from_weights(names3, w);
    if (!engines_match(p, detail,
                       "grid #" + std::to_string(grid_count))) {
      return false;
    }
    ++grid_count;
    int k = 0;
    while (k < 6 && ++levels[k] == 5) levels[k++] = 0;
    if (k == 6) break;
  }

  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> names5;
    for (int v = 0; v < 5; ++v) names5.push_back("v" + std::to_string(v));
    std::vector<std::vector<Rational>> w(5, std::vector<Rational>(5, Rational(0)));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (i != j) w[i][j] = Rational(static_cast<int>(rng() % 5), 4);
    const auto p = problem_from_weights(names5, w);
    if (!engines_match(p, detail, "random #" + std::to_string(trial))) {
      return false;
    }
  }
  detail = std::to_string(grid_count) + " grid + 200 random instances agree";
  return true;
}

// With perfectly separated related-pair answers (p_true=1, p_false=0) and
// coin-flip unrelated pairs, the best member always reconstructs the truth.
bool zero_noise_recovery(std::string& detail) {
  std::mt19937_64 rng(60901);
  lcos::SyntheticNoise noise;
  noise.p_descendant = 1.0;
  noise.p_ancestor = 0.0;
  noise.p_unrelated = 0.5;

  for (int run = 0; run < 50; ++run) {
    const int n = 4 + static_cast<int>(rng() % 6);  // 4..9
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    std::shuffle(names.begin(), names.end(), rng);

    lcos::TrueDag dag;
    dag.vertices = names;
    std::sort(dag.vertices.begin(), dag.vertices.end());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 10 < 8) dag.edges.push_back({names[i], names[j]});
    dag.validate();

    const auto matrix =
        lcos::synth_matrix(dag, 10, noise, rng());
    const auto d = lcos::assemble_distribution(matrix);
    const auto closure = lcos::DescendantGraph::from_dag(dag);
    const auto report =
        lcos::evaluate_distribution(closure, d, lcos::CoeOptions{}, "zn");
    if (report.best != Rational(0)) {
      std::ostringstream why;
      why << "run " << run << " (n=" << n << "): best COE "
          << fraction(report.best) << " != 0 over " << d.tournaments.size()
          << " orders";
      detail = why.str();
      return false;
    }
  }
  detail = "50 dense DAGs recovered with best COE 0";
  return true;
}

// The worked chain example, checked as exact rationals.
bool coe_unit_values(std::string& detail) {
  lcos::TrueDag dag;
  dag.vertices = {"A", "B", "C"};
  dag.edges = {{"A", "B"}, {"B", "C"}};
  const auto closure = lcos::DescendantGraph::from_dag(dag);

  const std::vector<std::vector<std::string>> orders = {
      {"A", "B", "C"}, {"B", "A", "C"}, {"C", "B", "A"}};
  const std::vector<int> expect_raw = {0, 1, 3};
  const std::vector<Rational> expect_norm = {Rational(0), Rational(1, 3),
                                             Rational(1)};
  for (std::size_t k = 0; k < orders.size(); ++k) {
    const auto value = lcos::causal_order_error(
        closure, AcyclicTournament(orders[k]), {}, lcos::CoeOptions{});
    if (value.raw != expect_raw[k] || value.normalized != expect_norm[k]) {
      detail = "order " + std::to_string(k) + ": raw " +
               std::to_string(value.raw) + ", per_pair " +
               fraction(value.normalized);
      return false;
    }
  }
  detail = "raw {0,1,3}, per_pair {0, 1/3, 1}";
  return true;
}

// Identical seeds must reproduce identical artifact bytes in both offline
// oracle modes.
bool determinism(std::string& detail) {
  const fs::path root =
      fs::temp_directory_path() / ("lcos-accept-" + std::to_string(::getpid()));
  fs::create_directories(root);

  const auto cancer = lcos::load_dataset((kData / "cancer.json").string());
  lcos::RunConfig synth;
  synth.mode = lcos::OracleMode::synthetic;
  synth.seed = 123;

  std::vector<std::string> synth_files;
  for (const auto* leg : {"synth-a", "synth-b"}) {
    lcos::RunConfig config = synth;
    config.out_dir = root / leg;
    fs::create_directories(config.out_dir);
    const auto out = lcos::run_pipeline(cancer, config);
    synth_files.push_back(slurp(out.solve.distribution_file) + "\x1d" +
                          slurp(out.eval->report_file) + "\x1d" +
                          slurp(out.query.matrix_file) + "\x1d" +
                          slurp(out.summary_file));
  }
  if (synth_files[0] != synth_files[1] || synth_files[0].empty()) {
    detail = "synthetic runs with one seed differ";
    return false;
  }

  const auto demo5 = lcos::load_dataset((kData / "demo5.json").string());
  lcos::RunConfig replay;
  replay.mode = lcos::OracleMode::replay;
  replay.model = "fixture-v1";
  replay.cache_path = kData / "demo5_cache.jsonl";

  std::vector<std::string> replay_files;
  for (const auto* leg : {"replay-a", "replay-b"}) {
    lcos::RunConfig config = replay;
    config.out_dir = root / leg;
    fs::create_directories(config.out_dir);
    const auto out = lcos::run_pipeline(demo5, config);
    replay_files.push_back(slurp(out.solve.distribution_file) + "\x1d" +
                           slurp(out.eval->report_file));
  }
  if (replay_files[0] != replay_files[1] || replay_files[0].empty()) {
    detail = "replay runs over one fixture differ";
    return false;
  }
  fs::remove_all(root);
  detail = "matrix, distribution, report, summary bytes identical";
  return true;
}

// Recorded-fixture smoke run: the checked-in 5-variable cache must replay to
// exactly the distribution and report it was recorded for.
bool fixture_smoke(std::string& detail) {
  const fs::path root = fs::temp_directory_path() /
                        ("lcos-smoke-" + std::to_string(::getpid()));
  fs::create_directories(root);

  const auto dataset = lcos::load_dataset((kData / "demo5.json").string());
  lcos::RunConfig config;
  config.mode = lcos::OracleMode::replay;
  config.model = "fixture-v1";
  config.cache_path = kData / "demo5_cache.jsonl";
  config.out_dir = root;
  config.verify = true;

  const auto out = lcos::run_pipeline(dataset, config);
  const auto& d = out.solve.distribution;
  const std::vector<std::vector<std::string>> expected = {
      {"A", "B", "C", "D"}, {"A", "B", "D", "C"}};
  if (d.removed != std::vector<std::string>{"E"} ||
      fraction(d.score) != "37/10" || order_lists(d) != expected) {
    detail = "distribution differs from the recorded answer";
    return false;
  }
  if (!out.solve.verified) {
    detail = "verification marker missing";
    return false;
  }
  if (!out.eval.has_value() || out.eval->report.best != Rational(0) ||
      out.eval->report.average != Rational(1, 20)) {
    detail = "report differs from the recorded answer";
    return false;
  }
  fs::remove_all(root);
  detail = "replayed 206-record cache: 2 orders, score 37/10, best COE 0";
  return true;
}

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"oracle equivalence: staged solver == brute force on 500 random "
       "matrices (4-7 vars)",
       120.0, oracle_equivalence},
      {"printed-matrix fixture: {U} removed, orders {ZWXY, ZXWY}, score 9/2",
       1.0, printed_fixture},
      {"maximality: no sampled order beats the distribution (100 matrices x "
       "1000 samples, 10-14 vars)",
       60.0, maximality},
      {"exclusion-search soundness: pruned == unpruned == brute force == "
       "subset DP on 5^6 grids + 200 random 5-vertex instances",
       60.0, exclusion_soundness},
      {"zero-noise recovery: best COE 0 on 50/50 dense DAGs (n <= 9)", 120.0,
       zero_noise_recovery},
      {"coe unit values: chain A->B->C gives raw {0,1,3}, per_pair {0,1/3,1}",
       5.0, coe_unit_values},
      {"determinism: identical seeds give byte-identical artifacts", 30.0,
       determinism},
      {"recorded-fixture smoke: demo5 cache replays to its exact "
       "distribution",
       30.0, fixture_smoke},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& criterion = criteria[k];
    std::string detail;
    bool ok = false;
    const auto start = Clock::now();
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (ok && elapsed > criterion.budget_seconds) {
      ok = false;
      detail = "over time budget";
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  [" << (k + 1) << "/"
         << criteria.size() << "] " << criterion.name << " (" << std::fixed
         << std::setprecision(2) << elapsed << "s";
    if (!detail.empty()) line << "; " << detail;
    line << ")";
    std::cout << line.str() << "\n";
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
