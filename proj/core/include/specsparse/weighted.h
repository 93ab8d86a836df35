#pragma once

// Sparsification of weighted graphs: binary decomposition of integral
// weights, truncation of real weights to a few leading bits, level graphs,
// contraction of heavy components and pullback.

#include <cstdint>
#include <span>
#include <vector>

#include "specsparse/exact.h"
#include "specsparse/graph.h"
#include "specsparse/unweighted.h"

namespace specsparse {

// G = sum_i 2^i G_i with weight-1 graphs G_i, for integral weights >= 1.
// Entry i is G_i (possibly empty); the vector has bit_length(max weight) entries.
std::vector<WeightedGraph> bit_decomposition(const WeightedGraph& g);

// Sparsifies each G_i with failure budget p/u (u = number of bit planes) and
// returns sum_i 2^i G~_i.
WeightedGraph bounded_sparsify(const WeightedGraph& g, const SparsifyConfig& cfg, SparsifyStats* stats = nullptr);

struct EdgeTruncation {
  int r = 0;            // Q <= 2^r w < 2Q
  std::int64_t q = 0;   // floor(2^r w), in [Q, 2Q)
  Dyadic z;             // q 2^-r
};

struct Level {
  int index = 0;                        // i: edges here carry 2^-i
  std::vector<std::uint32_t> edge_ids;  // into g.edges()
  WeightedGraph graph;                  // weight-1 edges, all n vertices
};

struct LevelDecomposition {
  std::int64_t Q = 0;
  std::vector<EdgeTruncation> truncation;  // aligned with g.edges()
  std::vector<Level> levels;               // nonempty levels, ascending index

  // Number of levels containing edge `id`.
  std::size_t multiplicity(std::size_t id) const;
};

// Requires every weight in (0, 1] and eps in (0, 1); Q = ceil(6/eps).
LevelDecomposition truncate_weights(const WeightedGraph& g, double eps);

// Partition of a subset W of the vertices into clusters 0..k-1.
struct ClusterMap {
  std::vector<std::int64_t> cluster_of;  // length n; -1 outside W
  std::size_t num_clusters = 0;

  // Clusters are numbered in the given order.
  static ClusterMap from_parts(std::size_t n, std::span<const VertexSet> parts);
  std::vector<VertexSet> clusters() const;
  bool mapped(VertexId v) const { return cluster_of[v] >= 0; }
};

// Quotient graph on num_clusters vertices; weights of edges between the same
// pair of clusters add up and edges inside a cluster are dropped. Throws
// GraphError if an endpoint is unmapped.
WeightedGraph contract(std::span<const Edge> edges, const ClusterMap& pi);

enum class PullbackStrategy { kFirst, kRandom };

// For every edge (c, d) of h_tilde picks one candidate (u, v) with
// {pi(u), pi(v)} = {c, d} and gives it the weight of (c, d). kFirst takes the
// lexicographically least candidate; kRandom draws uniformly using
// (seed, c, d). Candidates with an unmapped endpoint are ignored. Throws
// GraphError when some edge has no candidate.
WeightedGraph pullback(const WeightedGraph& h_tilde, const ClusterMap& pi, std::span<const Edge> candidates,
                       std::size_t n, PullbackStrategy strategy, std::uint64_t seed = 0);

struct LevelReport {
  int index = 0;
  std::size_t level_edges = 0;
  std::size_t clusters = 0;  // k_i (before subdivision for the blow-up variant)
  std::size_t parts = 0;     // clusters after subdivision
  std::size_t contracted_edges = 0;
  std::size_t sparsified_edges = 0;
};

struct WeightedSparsifyStats {
  std::int64_t Q = 0;
  int l = 0;
  std::size_t cluster_sum = 0;    // sum over levels of k_i
  std::size_t cluster_bound = 0;  // 2 n l
  std::size_t subdivided_clusters = 0;
  std::vector<LevelReport> levels;
  SparsifyStats inner;
};

struct WeightedSparsifyConfig {
  SparsifyConfig base;
  double c8 = 1.0;
};

// Requires weights in (0, 1]. In paper mode eps must lie in (1/n, 1/3), in
// practical mode in (0, 1).
WeightedGraph sparsify(const WeightedGraph& g, const WeightedSparsifyConfig& cfg,
                       WeightedSparsifyStats* stats = nullptr);

struct BlowUpReport {
  std::vector<double> edge;    // aligned with g.edges()
  std::vector<double> vertex;  // 0 for isolated vertices

  double max_vertex() const;
};

// Edge blow-up w~/w (0 when dropped); vertex blow-up is the mean over incident
// edges. Throws GraphError if h has an edge absent from g.
BlowUpReport blow_up(const WeightedGraph& g, const WeightedGraph& h);

// Splits `cluster` greedily, in ascending id order, into parts whose boundary
// in `level` lies in [2^delta, 2^(delta+2)]. A cluster whose boundary is
// already at most 2^(delta+2) comes back unchanged. Throws
// std::invalid_argument if a vertex has level degree >= 2^(delta+1).
std::vector<VertexSet> greedy_subdivide(const VertexSet& cluster, const WeightedGraph& level, int delta);

struct Sparsify2Result {
  WeightedGraph graph;
  BlowUpReport blowup;
};

Sparsify2Result sparsify2(const WeightedGraph& g, const WeightedSparsifyConfig& cfg,
                          WeightedSparsifyStats* stats = nullptr);

}  // namespace specsparse
