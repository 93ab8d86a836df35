#include "specsparse/cuts.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace specsparse {

Rational Cut::ratio() const {
  const std::int64_t small = std::min(vol_set, vol_complement);
  if (small <= 0) return Rational(1, 1);
  return Rational(boundary_count, small);
}

namespace {

void check_context(const WeightedGraph& g, const DegreeContext& ctx) {
  if (ctx.size() != g.num_vertices())
    throw std::invalid_argument("degree context has " + std::to_string(ctx.size()) + " entries for a graph with " +
                                std::to_string(g.num_vertices()) + " vertices");
}

// B relabelled 0..k-1 with neighbour bitmasks, for exhaustive enumeration.
struct SmallSubgraph {
  std::vector<VertexId> ids;
  std::vector<std::int64_t> deg;
  std::vector<std::uint32_t> nbrs;
  std::vector<std::int64_t> inner_deg;

  SmallSubgraph(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx) {
    check_context(g, ctx);
    b.check_bound(g.num_vertices());
    if (b.size() > kMaxExactVertices)
      throw std::invalid_argument("exact cut oracle limited to " + std::to_string(kMaxExactVertices) +
                                  " vertices; got " + std::to_string(b.size()) + ", use sweep_cut instead");
    ids.assign(b.begin(), b.end());
    const std::size_t k = ids.size();
    deg.resize(k);
    nbrs.assign(k, 0);
    inner_deg.assign(k, 0);
    std::vector<std::int64_t> local(g.num_vertices(), -1);
    for (std::size_t i = 0; i < k; ++i) {
      local[ids[i]] = static_cast<std::int64_t>(i);
      deg[i] = ctx.degrees[ids[i]];
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (const auto& arc : g.neighbors(ids[i])) {
        const auto j = local[arc.to];
        if (j < 0) continue;
        nbrs[i] |= std::uint32_t{1} << j;
        ++inner_deg[i];
      }
    }
  }

  std::size_t size() const { return ids.size(); }

  VertexSet members(std::uint32_t mask) const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (mask >> i & 1U) out.push_back(ids[i]);
    return VertexSet(std::move(out));
  }

  // Calls visit(mask, boundary, vol) for every nonempty proper subset.
  template <typename Visit>
  void for_each_subset(Visit&& visit) const {
    const std::size_t k = ids.size();
    if (k < 2) return;
    const std::uint32_t full = (k == 32) ? ~0U : ((std::uint32_t{1} << k) - 1);
    std::vector<std::int64_t> vol(std::size_t{1} << k, 0);
    std::vector<std::int32_t> cut(std::size_t{1} << k, 0);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      const int low = std::countr_zero(mask);
      const std::uint32_t rest = mask & (mask - 1);
      vol[mask] = vol[rest] + deg[static_cast<std::size_t>(low)];
      cut[mask] = cut[rest] + static_cast<std::int32_t>(inner_deg[static_cast<std::size_t>(low)]) -
                  2 * std::popcount(nbrs[static_cast<std::size_t>(low)] & rest);
      visit(mask, static_cast<std::int64_t>(cut[mask]), vol[mask]);
    }
  }
};

// True when the sorted member list of a precedes that of b.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  const std::uint32_t diff = a ^ b;
  const std::uint32_t t = diff & (~diff + 1);
  const std::uint32_t above = ~((t << 1) - 1);  // bits strictly above t
  const bool a_has = (a & t) != 0;
  const std::uint32_t other = a_has ? b : a;
  // The list lacking t continues with something larger than t, unless it
  // stops there, in which case it is a prefix of the other one.
  const bool other_ends = (other & (above | t)) == 0;
  return a_has ? !other_ends : other_ends;
}

Rational ratio_of(std::int64_t boundary, std::int64_t vol_s, std::int64_t vol_c) {
  const std::int64_t small = std::min(vol_s, vol_c);
  return small <= 0 ? Rational(1, 1) : Rational(boundary, small);
}

}  // namespace

Cut conductance(const WeightedGraph& g, const VertexSet& s, const VertexSet& b, const DegreeContext& ctx) {
  check_context(g, ctx);
  if (!s.is_subset_of(b)) throw GraphError("conductance: S is not a subset of B");
  Cut c;
  c.set = s;
  c.boundary_count = static_cast<std::int64_t>(boundary_edges(s, b, g).size());
  c.vol_set = volume(s, ctx);
  c.vol_complement = volume(b, ctx) - c.vol_set;
  return c;
}

Cut conductance(const WeightedGraph& g, const VertexSet& s, const DegreeContext& ctx) {
  return conductance(g, s, VertexSet::all(g.num_vertices()), ctx);
}

Cut sweep_cut(const WeightedGraph& g, const VertexSet& b, std::span<const double> ordering, const DegreeContext& ctx) {
  check_context(g, ctx);
  b.check_bound(g.num_vertices());
  if (ordering.size() != g.num_vertices()) throw std::invalid_argument("sweep_cut: ordering length must equal n");
  std::vector<VertexId> order(b.begin(), b.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId x, VertexId y) { return ordering[x] < ordering[y]; });

  const std::vector<char> in_b = b.mask(g.num_vertices());
  std::vector<char> in_s(g.num_vertices(), 0);
  const std::int64_t vol_b = volume(b, ctx);
  std::int64_t vol_s = 0;
  std::int64_t boundary = 0;
  std::size_t best_len = 0;
  Rational best(1, 1);
  std::int64_t best_boundary = 0, best_vol = 0;
  bool found = false;
  for (std::size_t t = 0; t + 1 < order.size(); ++t) {
    const VertexId v = order[t];
    in_s[v] = 1;
    vol_s += ctx.degrees[v];
    for (const auto& arc : g.neighbors(v)) {
      if (!in_b[arc.to]) continue;
      boundary += in_s[arc.to] ? -1 : 1;
    }
    if (2 * vol_s > vol_b) break;
    const Rational r = ratio_of(boundary, vol_s, vol_b - vol_s);
    if (!found || r < best) {
      found = true;
      best = r;
      best_len = t + 1;
      best_boundary = boundary;
      best_vol = vol_s;
    }
  }
  Cut c;
  if (!found) {
    c.vol_complement = vol_b;
    return c;
  }
  c.set = VertexSet(std::vector<VertexId>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_len)));
  c.boundary_count = best_boundary;
  c.vol_set = best_vol;
  c.vol_complement = vol_b - best_vol;
  return c;
}

Cut sweep_cut(const WeightedGraph& g, std::span<const double> ordering, const DegreeContext& ctx) {
  return sweep_cut(g, VertexSet::all(g.num_vertices()), ordering, ctx);
}

Cut exact_sparsest_cut(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx) {
  const SmallSubgraph sub(g, b, ctx);
  const std::int64_t vol_b = std::accumulate(sub.deg.begin(), sub.deg.end(), std::int64_t{0});
  Cut c;
  c.vol_complement = vol_b;
  if (sub.size() < 2) return c;
  bool found = false;
  std::uint32_t best_mask = 0;
  Rational best;
  std::int64_t best_vol = 0, best_boundary = 0;
  sub.for_each_subset([&](std::uint32_t mask, std::int64_t boundary, std::int64_t vol) {
    const Rational r = ratio_of(boundary, vol, vol_b - vol);
    bool better = !found;
    if (!better) {
      const auto cmp = r <=> best;
      better = cmp < 0 || (cmp == 0 && (vol < best_vol || (vol == best_vol && lex_less(mask, best_mask))));
    }
    if (better) {
      found = true;
      best = r;
      best_mask = mask;
      best_vol = vol;
      best_boundary = boundary;
    }
  });
  c.set = sub.members(best_mask);
  c.boundary_count = best_boundary;
  c.vol_set = best_vol;
  c.vol_complement = vol_b - best_vol;
  return c;
}

std::optional<Cut> max_volume_sparse_cut(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx,
                                         double phi) {
  const SmallSubgraph sub(g, b, ctx);
  const std::int64_t vol_b = std::accumulate(sub.deg.begin(), sub.deg.end(), std::int64_t{0});
  bool found = false;
  std::uint32_t best_mask = 0;
  std::int64_t best_vol = 0, best_boundary = 0;
  sub.for_each_subset([&](std::uint32_t mask, std::int64_t boundary, std::int64_t vol) {
    if (2 * vol > vol_b) return;
    if (compare_exact(ratio_of(boundary, vol, vol_b - vol), phi) > 0) return;
    if (!found || vol > best_vol || (vol == best_vol && lex_less(mask, best_mask))) {
      found = true;
      best_mask = mask;
      best_vol = vol;
      best_boundary = boundary;
    }
  });
  if (!found) return std::nullopt;
  Cut c;
  c.set = sub.members(best_mask);
  c.boundary_count = best_boundary;
  c.vol_set = best_vol;
  c.vol_complement = vol_b - best_vol;
  return c;
}

double ideal_decomposition_threshold(const DegreeContext& ctx) {
  const double vol = static_cast<double>(std::accumulate(ctx.degrees.begin(), ctx.degrees.end(), std::int64_t{0}));
  if (vol <= 1.0) return 1.0;
  return 1.0 / (2.0 * std::log(vol) / std::log(4.0 / 3.0));
}

std::vector<VertexSet> ideal_decomp(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx, double phi) {
  if (b.empty()) return {};
  const Cut sparsest = exact_sparsest_cut(g, b, ctx);
  if (compare_exact(sparsest.ratio(), phi) >= 0) return {b};
  const std::optional<Cut> s = max_volume_sparse_cut(g, b, ctx, phi);
  if (!s) return {b};  // unreachable: the sparsest cut's smaller side qualifies
  const VertexSet rest = b.set_minus(s->set);
  std::vector<VertexSet> out;
  if (4 * s->vol_set <= volume(b, ctx)) {
    out.push_back(rest);
  } else {
    out = ideal_decomp(g, rest, ctx, phi);
  }
  auto tail = ideal_decomp(g, s->set, ctx, phi);
  out.insert(out.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
  return out;
}

}  // namespace specsparse
