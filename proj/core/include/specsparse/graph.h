#pragma once

// Immutable weighted undirected graphs with global vertex identities.
//
// Subgraphs never renumber vertices: an induced subgraph G(S) has the same
// vertex count as G and simply carries fewer edges. This keeps sums of
// graphs built on different vertex subsets meaningful without any index
// translation.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace specsparse {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Thrown for malformed graph input (self-loops, bad weights, bad ids).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WeightedGraph {
 public:
  struct Arc {
    VertexId to;
    std::uint32_t edge;  // index into edges()
  };

  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t n);

  // Validates, canonicalises (u < v, sorted) and merges parallel edges by
  // adding their weights.
  WeightedGraph(std::size_t n, std::span<const Edge> raw_edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  std::span<const Arc> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  double weighted_degree(VertexId v) const { return wdeg_[v]; }
  std::int64_t unweighted_degree(VertexId v) const {
    return static_cast<std::int64_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const double> weighted_degrees() const { return wdeg_; }

  double total_weight() const;
  double max_weight() const;
  bool has_unit_weights() const;
  bool has_integral_weights() const;

  // Index of edge (u,v) in edges(), or -1.
  std::int64_t find_edge(VertexId u, VertexId v) const;

  WeightedGraph scaled(double factor) const;
  // Same edges, every weight replaced by 1.
  WeightedGraph unit_weighted() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_index();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> adj_;
  std::vector<double> wdeg_;
};

inline WeightedGraph build_graph(std::size_t n, std::span<const Edge> raw_edges) {
  return WeightedGraph(n, raw_edges);
}

// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts and validates; duplicates are rejected.
  explicit VertexSet(std::vector<VertexId> ids);

  static VertexSet all(std::size_t n);
  static VertexSet from_mask(std::span<const char> mask);

  std::span<const VertexId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(VertexId v) const;
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  // Throws GraphError unless every id is < n.
  void check_bound(std::size_t n) const;
  std::vector<char> mask(std::size_t n) const;

  VertexSet set_minus(const VertexSet& other) const;
  VertexSet set_union(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<VertexId> ids_;
};

// Degrees "as in the original graph". Measuring volumes against a context
// realises G{B}: the induced subgraph G(B) plus the self-loops that restore
// every vertex's original degree. The loops are never stored because they
// contribute nothing to the Laplacian quadratic form.
struct DegreeContext {
  std::vector<std::int64_t> degrees;

  static DegreeContext of(const WeightedGraph& g);
  std::size_t size() const { return degrees.size(); }
};

std::int64_t volume(const VertexSet& s, const DegreeContext& ctx);

// G(S): same vertex count, edges with both endpoints in S.
WeightedGraph induced_subgraph(const WeightedGraph& g, const VertexSet& s);

// Laplacian sum: weights of shared edges add.
WeightedGraph graph_sum(const WeightedGraph& g, const WeightedGraph& h);

// Graph on n vertices with exactly the given edges (already canonical or not).
WeightedGraph edge_subgraph(std::size_t n, std::span<const Edge> edges);

// Edges with one endpoint in S and the other in B - S. Requires S within B.
std::vector<Edge> boundary_edges(const VertexSet& s, const VertexSet& b, const WeightedGraph& g);

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  VertexId find(VertexId v);
  bool unite(VertexId a, VertexId b);
  std::size_t num_sets() const { return sets_; }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t sets_;
};

// Maximal connected sets of V = {0..n-1} under the given edges, ordered by
// smallest member.
std::vector<VertexSet> connected_components(std::size_t n, std::span<const Edge> active_edges);
inline std::vector<VertexSet> connected_components(const WeightedGraph& g,
                                                   std::span<const Edge> active_edges) {
  return connected_components(g.num_vertices(), active_edges);
}

struct Decomposition {
  std::vector<VertexSet> parts;
  std::vector<Edge> boundary;
};

// Validates that parts are disjoint and cover V, then collects the edges of
// g running between different parts.
Decomposition make_decomposition(const WeightedGraph& g, std::vector<VertexSet> parts);

}  // namespace specsparse
