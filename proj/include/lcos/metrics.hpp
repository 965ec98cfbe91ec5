#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "lcos/order.hpp"
#include "lcos/rational.hpp"
#include "lcos/tournament.hpp"
#include "lcos/true_dag.hpp"

namespace lcos {

// Transitive closure of the reference DAG: an edge for every (ancestor,
// proper descendant) pair. Causal order error counts closure edges an order
// fails to respect.
struct DescendantGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;  // indices into vertices

  static DescendantGraph from_dag(const TrueDag& dag);

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

enum class CoeNormalization {
  per_vertex,     // raw / |V(t)|; can exceed 1
  per_pair,       // raw / (n * (n - 1) / 2); the default
  per_desc_edge,  // raw / |closure edges|
};

struct CoeOptions {
  CoeNormalization normalization = CoeNormalization::per_pair;
  // Strict (default): closure edges touching a removed vertex count as
  // violations and removed vertices count toward the denominator. Lenient:
  // such edges leave both the numerator and the denominator.
  bool lenient_removed = false;
};

struct CoeValue {
  int raw = 0;
  Rational normalized{0};
};

// Error of one order against the closure. Closure vertices must appear in
// the order or in `removed`.
CoeValue causal_order_error(const DescendantGraph& closure,
                            const AcyclicTournament& tournament,
                            const std::vector<std::string>& removed,
                            const CoeOptions& options);

// Distribution-level report: best (minimum) and average error across
// members, with the sample standard deviation of the normalized values.
struct CoeReport {
  std::string graph_name;
  CoeNormalization normalization = CoeNormalization::per_pair;
  std::vector<CoeValue> per_member;
  Rational best{0};
  Rational average{0};
  double stddev = 0.0;
  // Size of the evaluated order: V vertices and V*(V-1)/2 pairs. Under the
  // strict removed-vertex treatment V includes the removed vertices.
  int vertex_count = 0;
  int pair_count = 0;

  nlohmann::ordered_json to_json() const;
};

CoeReport evaluate_distribution(const DescendantGraph& closure,
                                const OrderDistribution& distribution,
                                const CoeOptions& options,
                                const std::string& graph_name);

std::string to_string(CoeNormalization normalization);
CoeNormalization parse_normalization(const std::string& text);

}  // namespace lcos
