#include "specsparse/weighted.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "specsparse/rng.h"

namespace specsparse {

std::vector<WeightedGraph> bit_decomposition(const WeightedGraph& g) {
  if (!g.has_integral_weights()) throw GraphError("bit_decomposition: weights must be integers >= 1");
  const auto wmax = static_cast<std::uint64_t>(g.max_weight());
  const int u = std::bit_width(wmax);
  std::vector<std::vector<Edge>> planes(static_cast<std::size_t>(u));
  for (const Edge& e : g.edges()) {
    const auto w = static_cast<std::uint64_t>(e.w);
    for (int i = 0; i < u; ++i)
      if (w >> i & 1U) planes[static_cast<std::size_t>(i)].push_back(Edge{e.u, e.v, 1.0});
  }
  std::vector<WeightedGraph> out;
  out.reserve(planes.size());
  for (auto& p : planes) out.emplace_back(g.num_vertices(), p);
  return out;
}

WeightedGraph bounded_sparsify(const WeightedGraph& g, const SparsifyConfig& cfg, SparsifyStats* stats) {
  const std::vector<WeightedGraph> planes = bit_decomposition(g);
  const double u = static_cast<double>(std::max<std::size_t>(planes.size(), 1));
  std::vector<Edge> out;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    if (planes[i].num_edges() == 0) continue;
    SparsifyConfig inner = cfg;
    inner.fail_prob = cfg.fail_prob / u;
    inner.seed = derive_seed(cfg.seed, i);
    const WeightedGraph s = unwted_sparsify(planes[i], inner, stats);
    for (const Edge& e : s.edges()) out.push_back(Edge{e.u, e.v, std::ldexp(e.w, static_cast<int>(i))});
  }
  return WeightedGraph(g.num_vertices(), out);
}

std::size_t LevelDecomposition::multiplicity(std::size_t id) const {
  return static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(truncation.at(id).q)));
}

LevelDecomposition truncate_weights(const WeightedGraph& g, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("truncate_weights: epsilon must lie in (0, 1)");
  LevelDecomposition out;
  out.Q = static_cast<std::int64_t>(std::ceil(6.0 / eps));
  const auto q_lo = static_cast<double>(out.Q);
  std::map<int, std::vector<std::uint32_t>> by_level;
  out.truncation.reserve(g.num_edges());
  for (std::uint32_t id = 0; id < g.num_edges(); ++id) {
    const double w = g.edge(id).w;
    if (!(w > 0.0 && w <= 1.0))
      throw GraphError("truncate_weights: weight " + std::to_string(w) + " outside (0, 1]; scale the graph first");
    int r = static_cast<int>(std::ceil(std::log2(q_lo / w)));
    while (std::ldexp(w, r) < q_lo) ++r;
    while (std::ldexp(w, r - 1) >= q_lo) --r;
    EdgeTruncation t;
    t.r = r;
    t.q = static_cast<std::int64_t>(std::floor(std::ldexp(w, r)));
    t.z = Dyadic(t.q, -r);
    for (int b = 0; b < 63; ++b)
      if (t.q >> b & 1) by_level[r - b].push_back(id);
    out.truncation.push_back(t);
  }
  for (auto& [index, ids] : by_level) {
    std::vector<Edge> edges;
    edges.reserve(ids.size());
    for (std::uint32_t id : ids) edges.push_back(Edge{g.edge(id).u, g.edge(id).v, 1.0});
    out.levels.push_back(Level{index, std::move(ids), WeightedGraph(g.num_vertices(), edges)});
  }
  return out;
}

ClusterMap ClusterMap::from_parts(std::size_t n, std::span<const VertexSet> parts) {
  ClusterMap pi;
  pi.cluster_of.assign(n, -1);
  pi.num_clusters = parts.size();
  for (std::size_t c = 0; c < parts.size(); ++c) {
    parts[c].check_bound(n);
    for (VertexId v : parts[c]) {
      if (pi.cluster_of[v] >= 0) throw GraphError("cluster map: vertex " + std::to_string(v) + " in two clusters");
      pi.cluster_of[v] = static_cast<std::int64_t>(c);
    }
  }
  return pi;
}

std::vector<VertexSet> ClusterMap::clusters() const {
  std::vector<std::vector<VertexId>> sets(num_clusters);
  for (VertexId v = 0; v < cluster_of.size(); ++v)
    if (cluster_of[v] >= 0) sets[static_cast<std::size_t>(cluster_of[v])].push_back(v);
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(std::move(s));
  return out;
}

WeightedGraph contract(std::span<const Edge> edges, const ClusterMap& pi) {
  std::vector<Edge> out;
  for (const Edge& e : edges) {
    if (e.u >= pi.cluster_of.size() || e.v >= pi.cluster_of.size() || !pi.mapped(e.u) || !pi.mapped(e.v))
      throw GraphError("contract: edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has an unmapped endpoint");
    const auto a = static_cast<VertexId>(pi.cluster_of[e.u]);
    const auto b = static_cast<VertexId>(pi.cluster_of[e.v]);
    if (a != b) out.push_back(Edge{a, b, e.w});
  }
  return WeightedGraph(pi.num_clusters, out);
}

WeightedGraph pullback(const WeightedGraph& h_tilde, const ClusterMap& pi, std::span<const Edge> candidates,
                       std::size_t n, PullbackStrategy strategy, std::uint64_t seed) {
  if (pi.cluster_of.size() != n) throw std::invalid_argument("pullback: cluster map size must equal n");
  // Candidates grouped by canonical cluster pair, each group sorted by (u, v).
  std::map<std::pair<VertexId, VertexId>, std::vector<std::pair<VertexId, VertexId>>> groups;
  for (const Edge& e : candidates) {
    if (e.u >= n || e.v >= n || !pi.mapped(e.u) || !pi.mapped(e.v)) continue;
    auto a = static_cast<VertexId>(pi.cluster_of[e.u]);
    auto b = static_cast<VertexId>(pi.cluster_of[e.v]);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    groups[{a, b}].emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  for (auto& [key, list] : groups) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  std::vector<Edge> out;
  out.reserve(h_tilde.num_edges());
  for (const Edge& e : h_tilde.edges()) {
    auto it = groups.find({e.u, e.v});
    if (it == groups.end())
      throw GraphError("pullback: no candidate edge between clusters " + std::to_string(e.u) + " and " +
                       std::to_string(e.v));
    const auto& list = it->second;
    std::size_t pick = 0;
    if (strategy == PullbackStrategy::kRandom) {
      const std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) | e.v;
      pick = std::min(list.size() - 1,
                      static_cast<std::size_t>(keyed_uniform(seed, key) * static_cast<double>(list.size())));
    }
    out.push_back(Edge{list[pick].first, list[pick].second, e.w});
  }
  return WeightedGraph(n, out);
}

double BlowUpReport::max_vertex() const {
  double m = 0.0;
  for (double x : vertex) m = std::max(m, x);
  return m;
}

BlowUpReport blow_up(const WeightedGraph& g, const WeightedGraph& h) {
  if (g.num_vertices() != h.num_vertices()) throw GraphError("blow_up: vertex counts differ");
  BlowUpReport rep;
  rep.edge.assign(g.num_edges(), 0.0);
  for (const Edge& e : h.edges()) {
    const std::int64_t id = g.find_edge(e.u, e.v);
    if (id < 0)
      throw GraphError("blow_up: edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") not in the original");
    rep.edge[static_cast<std::size_t>(id)] = e.w / g.edge(static_cast<std::size_t>(id)).w;
  }
  rep.vertex.assign(g.num_vertices(), 0.0);
  for (std::size_t id = 0; id < g.num_edges(); ++id) {
    rep.vertex[g.edge(id).u] += rep.edge[id];
    rep.vertex[g.edge(id).v] += rep.edge[id];
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto d = g.unweighted_degree(v);
    if (d > 0) rep.vertex[v] /= static_cast<double>(d);
  }
  return rep;
}

std::vector<VertexSet> greedy_subdivide(const VertexSet& cluster, const WeightedGraph& level, int delta) {
  if (delta < 0 || delta > 60) throw std::invalid_argument("greedy_subdivide: delta out of range");
  const std::size_t n = level.num_vertices();
  cluster.check_bound(n);
  const std::int64_t lo = std::int64_t{1} << delta;
  const std::int64_t hi = lo << 2;
  for (VertexId v : cluster)
    if (level.unweighted_degree(v) >= 2 * lo)
      throw std::invalid_argument("greedy_subdivide: vertex " + std::to_string(v) + " has degree >= 2^(delta+1)");

  std::vector<char> in_rest = cluster.mask(n);
  std::int64_t rest_boundary = 0;
  for (VertexId v : cluster)
    for (const auto& arc : level.neighbors(v))
      if (!in_rest[arc.to]) ++rest_boundary;
  if (rest_boundary <= hi) return {cluster};

  std::vector<VertexSet> parts;
  std::vector<char> in_new(n, 0);
  std::vector<VertexId> order(cluster.begin(), cluster.end());
  std::size_t next = 0;
  while (rest_boundary > hi) {
    std::vector<VertexId> fresh;
    std::int64_t new_boundary = 0;
    while (new_boundary <= lo) {
      const VertexId v = order[next++];
      in_rest[v] = 0;
      in_new[v] = 1;
      fresh.push_back(v);
      for (const auto& arc : level.neighbors(v)) {
        new_boundary += in_new[arc.to] ? -1 : 1;
        rest_boundary += in_rest[arc.to] ? 1 : -1;
      }
    }
    for (VertexId v : fresh) in_new[v] = 0;
    parts.emplace_back(std::move(fresh));
  }
  parts.emplace_back(std::vector<VertexId>(order.begin() + static_cast<std::ptrdiff_t>(next), order.end()));
  return parts;
}

namespace {

enum class Variant { kContractFirst, kBucketedRandom };

void validate_weighted(const WeightedGraph& g, const WeightedSparsifyConfig& cfg) {
  for (const Edge& e : g.edges())
    if (!(e.w > 0.0 && e.w <= 1.0)) throw GraphError("sparsify: weights must lie in (0, 1]; scale the graph first");
  const double eps = cfg.base.epsilon;
  const double n = static_cast<double>(g.num_vertices());
  if (cfg.base.mode == SampleMode::kPaper) {
    if (!(eps > 1.0 / n && eps < 1.0 / 3.0)) throw std::invalid_argument("sparsify: epsilon must lie in (1/n, 1/3)");
    if (!(cfg.base.fail_prob > 0.0 && cfg.base.fail_prob < 0.5))
      throw std::invalid_argument("sparsify: p must lie in (0, 1/2)");
  } else {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("sparsify: epsilon must lie in (0, 1)");
    if (!(cfg.base.fail_prob > 0.0 && cfg.base.fail_prob < 1.0))
      throw std::invalid_argument("sparsify: p must lie in (0, 1)");
  }
  if (!(cfg.c8 > 0.0)) throw std::invalid_argument("sparsify: c8 must be positive");
}

WeightedGraph run_levels(const WeightedGraph& g, const WeightedSparsifyConfig& cfg, Variant variant,
                         WeightedSparsifyStats& stats) {
  validate_weighted(g, cfg);
  const std::size_t n = g.num_vertices();
  const double eps = cfg.base.epsilon;
  const double b = 6.0 / eps;
  const double c = 6.0 / eps;
  const double nd = static_cast<double>(std::max<std::size_t>(n, 1));
  const int l = static_cast<int>(std::ceil(std::log2(2.0 * b * c * c * nd * nd * nd)));
  const double log_n = std::max(1.0, std::log2(nd));

  SparsifyConfig inner = cfg.base;
  inner.epsilon = eps / 6.0;
  inner.fail_prob = variant == Variant::kContractFirst ? cfg.base.fail_prob / (2.0 * nd * l)
                                                       : cfg.base.fail_prob / (cfg.c8 * nd * l * log_n);

  const LevelDecomposition dec = truncate_weights(g, eps);
  stats.Q = dec.Q;
  stats.l = l;
  stats.cluster_bound = 2 * n * static_cast<std::size_t>(l);

  std::vector<int> bucket(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    const auto d = static_cast<std::uint64_t>(g.unweighted_degree(v));
    bucket[v] = d > 0 ? std::bit_width(d) - 1 : 0;
  }

  UnionFind uf(n);
  std::size_t merged = 0;
  std::vector<Edge> out;
  for (const Level& level : dec.levels) {
    const int i = level.index;
    while (merged < dec.levels.size() && dec.levels[merged].index <= i - l) {
      for (const Edge& e : dec.levels[merged].graph.edges()) uf.unite(e.u, e.v);
      ++merged;
    }
    const std::uint64_t level_seed = derive_seed(cfg.base.seed, static_cast<std::uint64_t>(i));

    // Cluster key: heavy component, plus the degree bucket for the blow-up variant.
    auto key_of = [&](VertexId v) -> std::uint64_t {
      const std::uint64_t root = uf.find(v);
      return variant == Variant::kContractFirst ? root : (root << 7) | static_cast<std::uint64_t>(bucket[v]);
    };
    std::map<std::uint64_t, bool> has_boundary;
    for (const Edge& e : level.graph.edges()) {
      const auto ku = key_of(e.u);
      const auto kv = key_of(e.v);
      const bool crossing = ku != kv;
      has_boundary[ku] = has_boundary[ku] || crossing;
      has_boundary[kv] = has_boundary[kv] || crossing;
    }
    // Member lists, vertices visited in ascending order so each list is sorted
    // and clusters come out ordered by smallest member.
    std::map<std::uint64_t, std::size_t> slot;
    std::vector<std::vector<VertexId>> members;
    std::vector<int> member_bucket;
    for (VertexId v = 0; v < n; ++v) {
      if (level.graph.unweighted_degree(v) == 0) continue;
      const auto k = key_of(v);
      if (!has_boundary[k]) continue;
      auto [it, inserted] = slot.try_emplace(k, members.size());
      if (inserted) {
        members.emplace_back();
        member_bucket.push_back(bucket[v]);
      }
      members[it->second].push_back(v);
    }

    LevelReport rep;
    rep.index = i;
    rep.level_edges = level.graph.num_edges();
    rep.clusters = members.size();
    stats.cluster_sum += members.size();

    std::vector<VertexSet> parts;
    for (std::size_t j = 0; j < members.size(); ++j) {
      VertexSet cl(std::move(members[j]));
      if (variant == Variant::kBucketedRandom) {
        auto split = greedy_subdivide(cl, level.graph, member_bucket[j]);
        if (split.size() > 1) ++stats.subdivided_clusters;
        for (auto& s : split) parts.push_back(std::move(s));
      } else {
        parts.push_back(std::move(cl));
      }
    }
    rep.parts = parts.size();
    if (parts.empty()) {
      stats.levels.push_back(rep);
      continue;
    }
    const ClusterMap pi = ClusterMap::from_parts(n, parts);

    std::vector<Edge> inside;
    for (const Edge& e : level.graph.edges())
      if (pi.mapped(e.u) && pi.mapped(e.v)) inside.push_back(e);
    const WeightedGraph h = contract(inside, pi);
    rep.contracted_edges = h.num_edges();

    SparsifyConfig level_cfg = inner;
    level_cfg.seed = derive_seed(level_seed, 1);
    const WeightedGraph h_tilde = bounded_sparsify(h, level_cfg, &stats.inner);
    rep.sparsified_edges = h_tilde.num_edges();

    const WeightedGraph pulled =
        variant == Variant::kContractFirst
            ? pullback(h_tilde, pi, inside, n, PullbackStrategy::kFirst)
            : pullback(h_tilde, pi, g.edges(), n, PullbackStrategy::kRandom, derive_seed(level_seed, 2));
    for (const Edge& e : pulled.edges()) out.push_back(Edge{e.u, e.v, std::ldexp(e.w, -i)});
    stats.levels.push_back(rep);
  }
  return WeightedGraph(n, out);
}

}  // namespace

WeightedGraph sparsify(const WeightedGraph& g, const WeightedSparsifyConfig& cfg, WeightedSparsifyStats* stats) {
  WeightedSparsifyStats local;
  return run_levels(g, cfg, Variant::kContractFirst, stats ? *stats : local);
}

Sparsify2Result sparsify2(const WeightedGraph& g, const WeightedSparsifyConfig& cfg, WeightedSparsifyStats* stats) {
  WeightedSparsifyStats local;
  Sparsify2Result res;
  res.graph = run_levels(g, cfg, Variant::kBucketedRandom, stats ? *stats : local);
  res.blowup = blow_up(g, res.graph);
  return res;
}

}  // namespace specsparse
