#pragma once

#include <cstdint>

#include "lcos/matrix.hpp"
#include "lcos/true_dag.hpp"

namespace lcos {

// Answer model for the synthetic oracle: the probability that a single query
// "does i cause j?" comes back true, depending on where (i, j) sits in the
// reference graph's descendant relation.
struct SyntheticNoise {
  double p_descendant = 0.9;  // j is a proper descendant of i
  double p_ancestor = 0.1;    // i is a proper descendant of j
  double p_unrelated = 0.5;   // neither
  // Skip sampling and write round(p * repeats) directly into each cell.
  bool deterministic = false;
};

// Builds the consistency matrix a noisy-but-unbiased oracle would produce:
// each cell is Binomial(repeats, p) with p from the table above. Sampling
// order is fixed (row-major), so one seed always yields one matrix.
ConsistencyMatrix synth_matrix(const TrueDag& dag, int repeats,
                               const SyntheticNoise& noise, std::uint64_t seed);

}  // namespace lcos
