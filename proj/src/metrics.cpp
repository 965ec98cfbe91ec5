#include "lcos/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "lcos/errors.hpp"

namespace lcos {

DescendantGraph DescendantGraph::from_dag(const TrueDag& dag) {
  dag.validate();
  DescendantGraph closure;
  closure.vertices = dag.vertices;
  const auto reach = dag.descendants();
  const int n = static_cast<int>(dag.vertices.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (reach[i][j]) closure.edges.emplace_back(i, j);
    }
  }
  return closure;
}

namespace {

int normalization_vertex_count(const AcyclicTournament& tournament,
                               const std::vector<std::string>& removed,
                               const CoeOptions& options) {
  if (options.lenient_removed) return tournament.size();
  return tournament.size() + static_cast<int>(removed.size());
}

}  // namespace

CoeValue causal_order_error(const DescendantGraph& closure,
                            const AcyclicTournament& tournament,
                            const std::vector<std::string>& removed,
                            const CoeOptions& options) {
  const std::unordered_set<std::string> removed_set(removed.begin(),
                                                    removed.end());
  for (const auto& name : closure.vertices) {
    if (!tournament.contains(name) && !removed_set.count(name)) {
      throw ValidationError("closure vertex '" + name +
                            "' is neither ordered nor removed");
    }
  }

  int raw = 0;
  int counted_edges = 0;
  for (const auto& [i, j] : closure.edges) {
    const std::string& a = closure.vertices[i];
    const std::string& b = closure.vertices[j];
    const bool a_ordered = tournament.contains(a);
    const bool b_ordered = tournament.contains(b);
    if (a_ordered && b_ordered) {
      ++counted_edges;
      if (!tournament.before(a, b)) ++raw;
    } else if (!options.lenient_removed) {
      // The order says nothing about this pair, which the strict reading
      // scores as a miss.
      ++counted_edges;
      ++raw;
    }
  }

  CoeValue value;
  value.raw = raw;
  const int n = normalization_vertex_count(tournament, removed, options);
  std::int64_t denominator = 0;
  switch (options.normalization) {
    case CoeNormalization::per_vertex:
      denominator = n;
      break;
    case CoeNormalization::per_pair:
      denominator = static_cast<std::int64_t>(n) * (n - 1) / 2;
      break;
    case CoeNormalization::per_desc_edge:
      denominator = counted_edges;
      break;
  }
  value.normalized =
      denominator == 0 ? Rational(0) : Rational(raw, denominator);
  return value;
}

CoeReport evaluate_distribution(const DescendantGraph& closure,
                                const OrderDistribution& distribution,
                                const CoeOptions& options,
                                const std::string& graph_name) {
  if (distribution.tournaments.empty()) {
    throw ValidationError("distribution has no orders to evaluate");
  }
  CoeReport report;
  report.graph_name = graph_name;
  report.normalization = options.normalization;

  for (const AcyclicTournament& t : distribution.tournaments) {
    report.per_member.push_back(
        causal_order_error(closure, t, distribution.removed, options));
  }

  const int n = normalization_vertex_count(distribution.tournaments.front(),
                                           distribution.removed, options);
  report.vertex_count = n;
  report.pair_count = n * (n - 1) / 2;

  report.best = report.per_member.front().normalized;
  Rational sum(0);
  for (const CoeValue& value : report.per_member) {
    report.best = std::min(report.best, value.normalized);
    sum += value.normalized;
  }
  const auto count = static_cast<std::int64_t>(report.per_member.size());
  report.average = sum / Rational(count);

  if (count > 1) {
    const double mean = to_double(report.average);
    double acc = 0.0;
    for (const CoeValue& value : report.per_member) {
      const double d = to_double(value.normalized) - mean;
      acc += d * d;
    }
    report.stddev = std::sqrt(acc / static_cast<double>(count - 1));
  }
  return report;
}

nlohmann::ordered_json CoeReport::to_json() const {
  nlohmann::ordered_json j;
  j["graph"] = graph_name;
  j["best"] = to_double(best);
  j["avg"] = to_double(average);
  j["std"] = stddev;
  j["n_orders"] = per_member.size();
  j["V"] = vertex_count;
  j["E"] = pair_count;
  j["normalization"] = to_string(normalization);
  j["best_exact"] = to_fraction_string(best);
  j["avg_exact"] = to_fraction_string(average);
  return j;
}

std::string to_string(CoeNormalization normalization) {
  switch (normalization) {
    case CoeNormalization::per_vertex:
      return "per_vertex";
    case CoeNormalization::per_pair:
      return "per_pair";
    case CoeNormalization::per_desc_edge:
      return "per_desc_edge";
  }
  throw ValidationError("unknown normalization mode");
}

CoeNormalization parse_normalization(const std::string& text) {
  if (text == "per_vertex") return CoeNormalization::per_vertex;
  if (text == "per_pair") return CoeNormalization::per_pair;
  if (text == "per_desc_edge") return CoeNormalization::per_desc_edge;
  throw ValidationError("unknown normalization '" + text +
                        "' (expected per_vertex, per_pair or per_desc_edge)");
}

}  // namespace lcos
