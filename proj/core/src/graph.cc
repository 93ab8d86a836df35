#include "specsparse/graph.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace specsparse {
namespace {

std::string describe(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " + std::to_string(e.w) + ")";
}

bool edge_key_less(const Edge& a, const Edge& b) {
  return a.u != b.u ? a.u < b.u : a.v < b.v;
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n) : n_(n) { build_index(); }

WeightedGraph::WeightedGraph(std::size_t n, std::span<const Edge> raw_edges) : n_(n) {
  if (n > std::numeric_limits<VertexId>::max()) throw GraphError("vertex count too large");
  edges_.reserve(raw_edges.size());
  for (const Edge& e : raw_edges) {
    if (e.u >= n || e.v >= n) throw GraphError("edge " + describe(e) + " has an endpoint >= n = " + std::to_string(n));
    if (e.u == e.v) throw GraphError("edge " + describe(e) + " is a self-loop");
    if (!(e.w > 0.0) || !std::isfinite(e.w))
      throw GraphError("edge " + describe(e) + " has a non-positive or non-finite weight");
    edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u, e.w});
  }
  std::stable_sort(edges_.begin(), edges_.end(), edge_key_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (out > 0 && edges_[out - 1].u == edges_[i].u && edges_[out - 1].v == edges_[i].v) {
      edges_[out - 1].w += edges_[i].w;
    } else {
      edges_[out++] = edges_[i];
    }
  }
  edges_.resize(out);
  if (edges_.size() > std::numeric_limits<std::uint32_t>::max()) throw GraphError("too many edges");
  build_index();
}

void WeightedGraph::build_index() {
  offsets_.assign(n_ + 1, 0);
  wdeg_.assign(n_, 0.0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adj_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so each adjacency list comes out sorted by
  // neighbour id.
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adj_[fill[e.u]++] = Arc{e.v, i};
    wdeg_[e.u] += e.w;
    wdeg_[e.v] += e.w;
  }
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adj_[fill[e.v]++] = Arc{e.u, i};
  }
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }
}

double WeightedGraph::total_weight() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.w;
  return s;
}

double WeightedGraph::max_weight() const {
  double m = 0.0;
  for (const Edge& e : edges_) m = std::max(m, e.w);
  return m;
}

bool WeightedGraph::has_unit_weights() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
}

bool WeightedGraph::has_integral_weights() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.w >= 1.0 && e.w == std::floor(e.w) && e.w < 0x1p53; });
}

std::int64_t WeightedGraph::find_edge(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  if (v >= n_) return -1;
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v, 0.0}, edge_key_less);
  if (it != edges_.end() && it->u == u && it->v == v) return it - edges_.begin();
  return -1;
}

WeightedGraph WeightedGraph::scaled(double factor) const {
  std::vector<Edge> out(edges_.begin(), edges_.end());
  for (Edge& e : out) e.w *= factor;
  return WeightedGraph(n_, out);
}

WeightedGraph WeightedGraph::unit_weighted() const {
  std::vector<Edge> out(edges_.begin(), edges_.end());
  for (Edge& e : out) e.w = 1.0;
  return WeightedGraph(n_, out);
}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw GraphError("vertex set contains a duplicate id");
}

VertexSet VertexSet::all(std::size_t n) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

VertexSet VertexSet::from_mask(std::span<const char> mask) {
  VertexSet s;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) s.ids_.push_back(static_cast<VertexId>(v));
  return s;
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::check_bound(std::size_t n) const {
  if (!ids_.empty() && ids_.back() >= n)
    throw GraphError("vertex id " + std::to_string(ids_.back()) + " out of range for n = " + std::to_string(n));
}

std::vector<char> VertexSet::mask(std::size_t n) const {
  check_bound(n);
  std::vector<char> m(n, 0);
  for (VertexId v : ids_) m[v] = 1;
  return m;
}

VertexSet VertexSet::set_minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  VertexSet out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

DegreeContext DegreeContext::of(const WeightedGraph& g) {
  DegreeContext ctx;
  ctx.degrees.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) ctx.degrees[v] = g.unweighted_degree(v);
  return ctx;
}

std::int64_t volume(const VertexSet& s, const DegreeContext& ctx) {
  s.check_bound(ctx.size());
  std::int64_t vol = 0;
  for (VertexId v : s) vol += ctx.degrees[v];
  return vol;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const VertexSet& s) {
  const std::vector<char> in = s.mask(g.num_vertices());
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (in[e.u] && in[e.v]) kept.push_back(e);
  return WeightedGraph(g.num_vertices(), kept);
}

WeightedGraph graph_sum(const WeightedGraph& g, const WeightedGraph& h) {
  if (g.num_vertices() != h.num_vertices())
    throw GraphError("graph_sum: vertex counts differ (" + std::to_string(g.num_vertices()) + " vs " +
                     std::to_string(h.num_vertices()) + ")");
  std::vector<Edge> all(g.edges().begin(), g.edges().end());
  all.insert(all.end(), h.edges().begin(), h.edges().end());
  return WeightedGraph(g.num_vertices(), all);
}

WeightedGraph edge_subgraph(std::size_t n, std::span<const Edge> edges) { return WeightedGraph(n, edges); }

std::vector<Edge> boundary_edges(const VertexSet& s, const VertexSet& b, const WeightedGraph& g) {
  if (!s.is_subset_of(b)) throw GraphError("boundary_edges: S is not a subset of B");
  const std::vector<char> in_s = s.mask(g.num_vertices());
  const std::vector<char> in_b = b.mask(g.num_vertices());
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (!in_b[e.u] || !in_b[e.v]) continue;
    if (in_s[e.u] != in_s[e.v]) out.push_back(e);
  }
  return out;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), VertexId{0});
}

VertexId UnionFind::find(VertexId v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

bool UnionFind::unite(VertexId a, VertexId b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --sets_;
  return true;
}

std::vector<VertexSet> connected_components(std::size_t n, std::span<const Edge> active_edges) {
  UnionFind uf(n);
  for (const Edge& e : active_edges) {
    if (e.u >= n || e.v >= n) throw GraphError("connected_components: edge endpoint out of range");
    uf.unite(e.u, e.v);
  }
  std::vector<std::int64_t> slot(n, -1);
  std::vector<std::vector<VertexId>> groups;
  for (VertexId v = 0; v < n; ++v) {
    const VertexId r = uf.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[r])].push_back(v);
  }
  std::vector<VertexSet> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.emplace_back(std::move(g));
  return out;
}

Decomposition make_decomposition(const WeightedGraph& g, std::vector<VertexSet> parts) {
  const std::size_t n = g.num_vertices();
  std::vector<std::int64_t> owner(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    parts[i].check_bound(n);
    for (VertexId v : parts[i]) {
      if (owner[v] >= 0) throw GraphError("decomposition parts overlap at vertex " + std::to_string(v));
      owner[v] = static_cast<std::int64_t>(i);
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (owner[v] < 0) throw GraphError("decomposition does not cover vertex " + std::to_string(v));
  Decomposition d;
  for (const Edge& e : g.edges())
    if (owner[e.u] != owner[e.v]) d.boundary.push_back(e);
  d.parts = std::move(parts);
  return d;
}

}  // namespace specsparse
