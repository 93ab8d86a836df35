#include "specsparse/sampling.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "specsparse/rng.h"

namespace specsparse {

const char* to_string(SampleMode m) { return m == SampleMode::kPaper ? "paper" : "practical"; }

double sample_upsilon(const SampleParams& params, std::size_t n) {
  double upsilon = 0.0;
  if (params.mode == SampleMode::kPractical) {
    if (!params.upsilon_override) throw std::invalid_argument("practical sampling needs an upsilon override");
    upsilon = *params.upsilon_override;
  } else {
    if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
      throw std::invalid_argument("sample: epsilon must lie in (0, 1)");
    if (!(params.fail_prob > 0.0 && params.fail_prob < 1.0))
      throw std::invalid_argument("sample: failure probability must lie in (0, 1)");
    if (!(params.lambda > 0.0 && params.lambda <= 2.0)) throw std::invalid_argument("sample: lambda must lie in (0, 2]");
    const double k = std::max(std::log2(3.0 / params.fail_prob), std::log2(static_cast<double>(std::max<std::size_t>(n, 1))));
    const double root = 12.0 * k / (params.epsilon * params.lambda);
    upsilon = root * root;
  }
  if (!(upsilon > 1.0) || !std::isfinite(upsilon))
    throw std::invalid_argument("sample: upsilon must be a finite value > 1, got " + std::to_string(upsilon));
  return upsilon;
}

double edge_probability(std::int64_t d_i, std::int64_t d_j, double upsilon) {
  if (d_i < 1 || d_j < 1) throw std::invalid_argument("edge_probability: degrees must be >= 1");
  return std::min(1.0, upsilon / static_cast<double>(std::min(d_i, d_j)));
}

SampleResult sample_subgraph(const VertexSet& s, std::span<const Edge> f, const DegreeContext& ctx,
                             const SampleParams& params, std::uint64_t seed) {
  const std::size_t n = ctx.size();
  s.check_bound(n);
  const std::vector<char> in_s = s.mask(n);
  std::size_t active = 0;
  for (std::int64_t d : ctx.degrees)
    if (d > 0) ++active;

  SampleResult res;
  res.seed = seed;
  res.mode = params.mode;
  res.upsilon_used = sample_upsilon(params, active);

  std::vector<Edge> kept;
  for (const Edge& e : f) {
    if (e.u >= n || e.v >= n || !in_s[e.u] || !in_s[e.v])
      throw GraphError("sample: edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") is not inside S");
    if (e.w != 1.0) throw GraphError("sample: edges must have weight 1");
    const double p = edge_probability(ctx.degrees[e.u], ctx.degrees[e.v], res.upsilon_used);
    const VertexId a = std::min(e.u, e.v);
    const VertexId b = std::max(e.u, e.v);
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    if (p >= 1.0 || keyed_uniform(seed, key) < p) kept.push_back(Edge{a, b, 1.0 / p});
  }
  res.kept_edges = kept.size();
  res.graph = WeightedGraph(n, kept);
  return res;
}

}  // namespace specsparse
