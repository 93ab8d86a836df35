#include "specsparse/generators.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "specsparse/rng.h"

namespace specsparse {

namespace {

void add_clique(std::vector<Edge>& out, VertexId first, std::size_t size) {
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = a + 1; b < size; ++b)
      out.push_back(Edge{static_cast<VertexId>(first + a), static_cast<VertexId>(first + b), 1.0});
}

}  // namespace

WeightedGraph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  add_clique(e, 0, n);
  return WeightedGraph(n, e);
}

WeightedGraph joined_cliques(std::size_t n) {
  if (n < 1) throw std::invalid_argument("joined_cliques: n must be >= 1");
  std::vector<Edge> e;
  add_clique(e, 0, n);
  add_clique(e, static_cast<VertexId>(n), n);
  e.push_back(Edge{static_cast<VertexId>(n - 1), static_cast<VertexId>(n), 1.0});
  return WeightedGraph(2 * n, e);
}

WeightedGraph ring_bipartite(std::size_t n, std::size_t k, bool bridge) {
  if (n < 3 || k < 1) throw std::invalid_argument("ring_bipartite: need n >= 3 and k >= 1");
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t w = (u + 1) % n;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        e.push_back(Edge{static_cast<VertexId>(u * k + i), static_cast<VertexId>(w * k + j), 1.0});
  }
  if (bridge) e.push_back(Edge{0, static_cast<VertexId>((n / 2) * k), 1.0});
  return WeightedGraph(n * k, e);
}

WeightedGraph ring_of_cliques(std::size_t count, std::size_t size) {
  if (count < 1 || size < 1) throw std::invalid_argument("ring_of_cliques: count and size must be >= 1");
  std::vector<Edge> e;
  for (std::size_t c = 0; c < count; ++c) add_clique(e, static_cast<VertexId>(c * size), size);
  if (count >= 2) {
    for (std::size_t c = 0; c < count; ++c) {
      if (count == 2 && c == 1) break;  // a 2-cycle would repeat the link
      const auto last = static_cast<VertexId>(c * size + size - 1);
      const auto first = static_cast<VertexId>(((c + 1) % count) * size);
      if (last != first) e.push_back(Edge{last, first, 1.0});
    }
  }
  return WeightedGraph(count * size, e);
}

WeightedGraph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp: p must lie in [0, 1]");
  std::vector<Edge> e;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (keyed_uniform(seed, (static_cast<std::uint64_t>(a) << 32) | b) < p) e.push_back(Edge{a, b, 1.0});
  return WeightedGraph(n, e);
}

WeightedGraph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.push_back(Edge{id(r, c), id(r, c + 1), 1.0});
      if (r + 1 < rows) e.push_back(Edge{id(r, c), id(r + 1, c), 1.0});
    }
  }
  return WeightedGraph(rows * cols, e);
}

WeightedGraph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if ((n * d) % 2 != 0 || d >= n) throw std::invalid_argument("random_regular: need n*d even and d < n");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> stubs;
  for (VertexId v = 0; v < n; ++v)
    for (std::size_t t = 0; t < d; ++t) stubs.push_back(v);
  std::shuffle(stubs.begin(), stubs.end(), rng);
  const std::size_t pairs = stubs.size() / 2;
  auto key = [](VertexId a, VertexId b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::multiset<std::pair<VertexId, VertexId>> used;
  for (std::size_t i = 0; i < pairs; ++i) used.insert(key(stubs[2 * i], stubs[2 * i + 1]));
  auto bad = [&](std::size_t i) {
    const VertexId a = stubs[2 * i], b = stubs[2 * i + 1];
    return a == b || used.count(key(a, b)) > 1;
  };
  // Repair loops and repeated pairs by random switches with other pairs.
  std::uniform_int_distribution<std::size_t> pick(0, pairs == 0 ? 0 : pairs - 1);
  const std::size_t budget = 1000 * (pairs + 1);
  for (std::size_t step = 0; step < budget; ++step) {
    std::size_t i = pairs;
    for (std::size_t t = 0; t < pairs; ++t)
      if (bad(t)) {
        i = t;
        break;
      }
    if (i == pairs) {
      std::vector<Edge> e;
      for (const auto& [a, b] : used) e.push_back(Edge{a, b, 1.0});
      return WeightedGraph(n, e);
    }
    const std::size_t j = pick(rng);
    if (j == i) continue;
    const VertexId a = stubs[2 * i], b = stubs[2 * i + 1], c = stubs[2 * j], x = stubs[2 * j + 1];
    if (a == x || c == b) continue;
    used.erase(used.find(key(a, b)));
    used.erase(used.find(key(c, x)));
    if (used.count(key(a, x)) || used.count(key(c, b)) || key(a, x) == key(c, b)) {
      used.insert(key(a, b));
      used.insert(key(c, x));
      continue;
    }
    std::swap(stubs[2 * i + 1], stubs[2 * j + 1]);
    used.insert(key(a, x));
    used.insert(key(c, b));
  }
  throw std::runtime_error("random_regular: no simple pairing found");
}

WeightedGraph with_random_weights(const WeightedGraph& g, double lo, double hi, bool integral, std::uint64_t seed) {
  if (!(lo > 0.0 && hi >= lo)) throw std::invalid_argument("with_random_weights: need 0 < lo <= hi");
  std::vector<Edge> e(g.edges().begin(), g.edges().end());
  for (Edge& x : e) {
    const double t = keyed_uniform(seed, (static_cast<std::uint64_t>(x.u) << 32) | x.v);
    if (integral) {
      const double span = std::floor(hi) - std::ceil(lo) + 1.0;
      x.w = std::ceil(lo) + std::min(span - 1.0, std::floor(t * span));
    } else {
      x.w = lo + t * (hi - lo);
    }
  }
  return WeightedGraph(g.num_vertices(), e);
}

}  // namespace specsparse
