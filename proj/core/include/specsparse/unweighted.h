#pragma once

// Sparsification of unweighted graphs: cut the graph into pieces of high
// inner conductance, sample each piece, recurse on the edges between pieces.

#include <cstdint>
#include <optional>
#include <vector>

#include "specsparse/graph.h"
#include "specsparse/partitioning.h"
#include "specsparse/sampling.h"

namespace specsparse {

struct SparsifyConfig {
  double epsilon = 0.5;
  double fail_prob = 0.1;
  SampleMode mode = SampleMode::kPractical;
  // Practical mode: a graph with at most this many edges is returned as is,
  // and pieces are sampled with upsilon = 2 * target / (non-isolated vertices)
  // unless upsilon_override is set. Required in practical mode.
  std::optional<std::size_t> target_edges;
  std::optional<double> upsilon_override;
  // Replaces the conductance target (2 log_{29/28} vol V)^{-1}.
  std::optional<double> phi_override;
  double c3 = 1.0;
  std::uint64_t seed = 1;
  ContractConstants constants;
  PartitionConfig partition;
};

struct SparsifyStats {
  std::size_t sparsify_calls = 0;
  std::size_t max_depth = 0;
  std::size_t partition_and_sample_calls = 0;
  std::size_t pieces = 0;
  std::size_t sampled_edges_in = 0;
  std::size_t sampled_edges_out = 0;
  // Top-level piece splits whose boundary exceeded half the edges.
  std::size_t boundary_half_violations = 0;
  // Calls whose boundary graph was no smaller than the input and was
  // therefore kept unsampled to guarantee termination.
  std::size_t stalled_recursions = 0;

  void merge(const SparsifyStats& other);
};

struct Piece {
  VertexSet vertices;
  WeightedGraph sampled;
};

struct PieceList {
  std::vector<Piece> pieces;
  std::vector<Edge> boundary;  // input edges between different pieces
};

// Recursive partition-and-sample of g on vertex set V = all vertices. g must
// have unit weights. In practical mode, `upsilon` replaces the derived value.
PieceList partition_and_sample(const WeightedGraph& g, double phi, double eps_hat, double p_hat, std::uint64_t seed,
                               const SparsifyConfig& cfg, std::optional<double> upsilon = std::nullopt,
                               SparsifyStats* stats = nullptr);

// Throws GraphError on weighted input and std::invalid_argument on bad
// parameters (epsilon and p must lie in (0, 1); practical mode needs a target).
WeightedGraph unwted_sparsify(const WeightedGraph& g, const SparsifyConfig& cfg, SparsifyStats* stats = nullptr);

}  // namespace specsparse
