#pragma once

// Degree-weighted Bernoulli edge sampling with inverse-probability weights.

#include <cstdint>
#include <optional>
#include <span>

#include "specsparse/graph.h"

namespace specsparse {

enum class SampleMode { kPaper, kPractical };

const char* to_string(SampleMode m);

struct SampleParams {
  double epsilon = 0.5;
  double fail_prob = 0.1;
  double lambda = 1.0;
  SampleMode mode = SampleMode::kPaper;
  // Used verbatim in practical mode; required there.
  std::optional<double> upsilon_override;
};

struct SampleResult {
  WeightedGraph graph;
  std::size_t kept_edges = 0;
  double upsilon_used = 0.0;
  std::uint64_t seed = 0;
  SampleMode mode = SampleMode::kPaper;
};

// Paper mode: k = max(log2(3/p), log2 n), upsilon = (12k / (eps lambda))^2.
// Practical mode: the override. Throws std::invalid_argument on parameters
// out of range or an upsilon that is not > 1.
double sample_upsilon(const SampleParams& params, std::size_t n);

// min(1, upsilon / min(d_i, d_j)).
double edge_probability(std::int64_t d_i, std::int64_t d_j, double upsilon);

// Keeps each edge of F independently with its probability, computed from the
// context degrees, at weight 1/p. The coin for edge (u, v) is a pure function
// of (seed, u, v). F must consist of weight-1 edges inside S. The n used for
// paper-mode k is the number of vertices with positive context degree.
SampleResult sample_subgraph(const VertexSet& s, std::span<const Edge> f, const DegreeContext& ctx,
                             const SampleParams& params, std::uint64_t seed);

}  // namespace specsparse
