#pragma once

// Deterministic graph families used by tests, benchmarks and the CLI.

#include <cstdint>

#include "specsparse/graph.h"

namespace specsparse {

WeightedGraph complete_graph(std::size_t n);

// Two copies of K_n on {0..n-1} and {n..2n-1} plus the bridge (n-1, n).
WeightedGraph joined_cliques(std::size_t n);

// n groups of k vertices in a ring, consecutive groups joined by complete
// bipartite graphs. Vertex (u, i), u in [0, n), i in [1, k], has id u*k + i-1.
// With `bridge`, adds the edge between (0, 1) and (n/2, 1).
WeightedGraph ring_bipartite(std::size_t n, std::size_t k, bool bridge = true);

// `count` copies of K_size arranged in a cycle; the last vertex of each clique
// is joined to the first vertex of the next.
WeightedGraph ring_of_cliques(std::size_t count, std::size_t size);

// Each pair independently with probability p.
WeightedGraph gnp(std::size_t n, double p, std::uint64_t seed);

WeightedGraph grid_graph(std::size_t rows, std::size_t cols);

// Pairing model; loops and repeated pairs are repaired by random switches
// with other pairs, so the result is close to but not exactly uniform. Throws
// std::invalid_argument if n*d is odd or d >= n, std::runtime_error if no
// simple pairing is found.
WeightedGraph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

// Same edges with weights drawn per edge: integers in [lo, hi] when
// `integral`, otherwise reals in [lo, hi).
WeightedGraph with_random_weights(const WeightedGraph& g, double lo, double hi, bool integral, std::uint64_t seed);

}  // namespace specsparse
