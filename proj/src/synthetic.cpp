#include "lcos/synthetic.hpp"

#include <cmath>
#include <random>

#include "lcos/errors.hpp"

namespace lcos {

ConsistencyMatrix synth_matrix(const TrueDag& dag, int repeats,
                               const SyntheticNoise& noise,
                               std::uint64_t seed) {
  dag.validate();
  for (double p : {noise.p_descendant, noise.p_ancestor, noise.p_unrelated}) {
    if (p < 0.0 || p > 1.0) {
      throw ValidationError("synthetic answer probabilities must lie in [0,1]");
    }
  }
  std::vector<VariableSpec> variables;
  variables.reserve(dag.vertices.size());
  for (const auto& name : dag.vertices) {
    variables.push_back({name, name});
  }
  ConsistencyMatrix matrix(std::move(variables), repeats);

  const auto reach = dag.descendants();
  std::mt19937_64 rng(seed);
  const int n = matrix.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double p = noise.p_unrelated;
      if (reach[i][j]) {
        p = noise.p_descendant;
      } else if (reach[j][i]) {
        p = noise.p_ancestor;
      }
      int m;
      if (noise.deterministic) {
        m = static_cast<int>(std::lround(p * repeats));
      } else {
        std::binomial_distribution<int> dist(repeats, p);
        m = dist(rng);
      }
      matrix.set_numerator(i, j, m);
    }
  }
  return matrix;
}

}  // namespace lcos
