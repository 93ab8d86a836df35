#pragma once

// Conductance inside a vertex subset B, measured with external degrees, plus
// sweep cuts and exhaustive oracles for small B.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "specsparse/exact.h"
#include "specsparse/graph.h"

namespace specsparse {

struct Cut {
  VertexSet set;
  std::int64_t boundary_count = 0;  // |E(S, B - S)|, edges counted without weights
  std::int64_t vol_set = 0;
  std::int64_t vol_complement = 0;  // vol(B - S)

  // boundary / min(vol S, vol(B - S)); 1 when the smaller side has volume 0
  // (which covers S empty).
  Rational ratio() const;
  double conductance() const { return ratio().value(); }
};

// Exhaustive oracles refuse subsets larger than this.
inline constexpr std::size_t kMaxExactVertices = 20;

Cut conductance(const WeightedGraph& g, const VertexSet& s, const VertexSet& b, const DegreeContext& ctx);
Cut conductance(const WeightedGraph& g, const VertexSet& s, const DegreeContext& ctx);

// Orders the vertices of B by `ordering` (ties by id), scans every proper
// prefix whose volume is at most vol(B)/2 and returns the one of smallest
// conductance (earliest prefix on ties). Returns an empty cut when no prefix
// qualifies.
Cut sweep_cut(const WeightedGraph& g, const VertexSet& b, std::span<const double> ordering, const DegreeContext& ctx);
Cut sweep_cut(const WeightedGraph& g, std::span<const double> ordering, const DegreeContext& ctx);

// Minimum conductance over nonempty proper subsets of B; ties by smaller
// volume, then lexicographically smaller vertex list. |B| <= 1 yields the
// empty set with conductance 1.
Cut exact_sparsest_cut(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx);

// Among nonempty S within B with vol S <= vol(B)/2 and conductance <= phi,
// the one of largest volume (ties lexicographic), or nothing.
std::optional<Cut> max_volume_sparse_cut(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx,
                                         double phi);

// Default threshold (2 log_{4/3} vol V)^{-1}, with V taken from the context.
double ideal_decomposition_threshold(const DegreeContext& ctx);

// Exhaustive recursive decomposition of B: keeps B when its inner
// conductance reaches phi, otherwise splits off the largest sparse cut and
// recurses. Requires |B| <= kMaxExactVertices.
std::vector<VertexSet> ideal_decomp(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx, double phi);

}  // namespace specsparse
