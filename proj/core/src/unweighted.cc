#include "specsparse/unweighted.h"

#include <cmath>
#include <stdexcept>

#include "specsparse/rng.h"

namespace specsparse {

void SparsifyStats::merge(const SparsifyStats& o) {
  sparsify_calls += o.sparsify_calls;
  max_depth = std::max(max_depth, o.max_depth);
  partition_and_sample_calls += o.partition_and_sample_calls;
  pieces += o.pieces;
  sampled_edges_in += o.sampled_edges_in;
  sampled_edges_out += o.sampled_edges_out;
  boundary_half_violations += o.boundary_half_violations;
  stalled_recursions += o.stalled_recursions;
}

namespace {

enum SeedTag : std::uint64_t { kCutTag = 1, kSampleTag = 2, kSmallSideTag = 3, kLargeSideTag = 4, kBoundaryTag = 5 };

void require_unit_weights(const WeightedGraph& g, const char* who) {
  if (!g.has_unit_weights()) throw GraphError(std::string(who) + ": input must have unit weights");
}

std::vector<Edge> edges_within(const WeightedGraph& g, const VertexSet& s) {
  const std::vector<char> in = s.mask(g.num_vertices());
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (in[e.u] && in[e.v]) out.push_back(e);
  return out;
}

struct PieceBuilder {
  double phi;
  double eps_hat;
  double p_hat;
  const SparsifyConfig& cfg;
  std::optional<double> upsilon;
  SparsifyStats& stats;
  std::vector<Piece>& out;

  void sample_piece(const WeightedGraph& h, const VertexSet& s, const DegreeContext& ctx, double lambda,
                    std::uint64_t seed) {
    const std::vector<Edge> f = edges_within(h, s);
    SampleParams params;
    params.epsilon = eps_hat;
    params.fail_prob = p_hat;
    params.lambda = lambda;
    params.mode = cfg.mode;
    if (cfg.mode == SampleMode::kPractical) params.upsilon_override = upsilon;
    SampleResult res = sample_subgraph(s, f, ctx, params, seed);
    stats.sampled_edges_in += f.size();
    stats.sampled_edges_out += res.kept_edges;
    ++stats.pieces;
    out.push_back(Piece{s, std::move(res.graph)});
  }

  // h carries exactly the edges of G(V).
  void run(const WeightedGraph& h, const VertexSet& v, std::uint64_t seed) {
    ++stats.partition_and_sample_calls;
    const DegreeContext ctx = DegreeContext::of(h);
    const double f2 = cfg.constants.f2(phi, h.num_edges());
    const double lambda = std::min(2.0, f2 * f2 / 2.0);
    const PartitionOutcome cut = approx_cut(h, v, ctx, phi, p_hat, derive_seed(seed, kCutTag), cfg.partition);
    const VertexSet& d = cut.set;
    if (d.empty()) {
      sample_piece(h, v, ctx, lambda, derive_seed(seed, kSampleTag));
      return;
    }
    const VertexSet rest = v.set_minus(d);
    if (29 * volume(d, ctx) <= volume(v, ctx)) {
      sample_piece(h, rest, ctx, lambda, derive_seed(seed, kSampleTag));
      run(induced_subgraph(h, d), d, derive_seed(seed, kSmallSideTag));
    } else {
      run(induced_subgraph(h, rest), rest, derive_seed(seed, kLargeSideTag));
      run(induced_subgraph(h, d), d, derive_seed(seed, kSmallSideTag));
    }
  }
};

std::vector<Edge> boundary_of(const WeightedGraph& g, const std::vector<Piece>& pieces) {
  std::vector<std::int64_t> owner(g.num_vertices(), -1);
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (VertexId v : pieces[i].vertices) owner[v] = static_cast<std::int64_t>(i);
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (owner[e.u] != owner[e.v]) out.push_back(e);
  return out;
}

double log_base(double x, double base) { return std::log(x) / std::log(base); }

void validate(const SparsifyConfig& cfg) {
  const double hi = cfg.mode == SampleMode::kPaper ? 0.5 : 1.0;
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < hi) || !(cfg.fail_prob > 0.0 && cfg.fail_prob < hi))
    throw std::invalid_argument(cfg.mode == SampleMode::kPaper ? "epsilon and p must lie in (0, 1/2)"
                                                                : "epsilon and p must lie in (0, 1)");
  if (cfg.mode == SampleMode::kPractical && !cfg.target_edges)
    throw std::invalid_argument("practical mode needs a target edge count");
  if (cfg.phi_override && !(*cfg.phi_override > 0.0 && *cfg.phi_override < 1.0))
    throw std::invalid_argument("phi override must lie in (0, 1)");
}

WeightedGraph sparsify_rec(const WeightedGraph& g, const SparsifyConfig& cfg, std::uint64_t seed, std::size_t depth,
                           SparsifyStats& stats) {
  ++stats.sparsify_calls;
  stats.max_depth = std::max(stats.max_depth, depth);
  const std::size_t m = g.num_edges();
  const double n = static_cast<double>(g.num_vertices());
  const double vol = 2.0 * static_cast<double>(m);

  if (cfg.mode == SampleMode::kPaper) {
    const double threshold = cfg.c3 * n * std::pow(std::log2(n / cfg.fail_prob), 30) / (cfg.epsilon * cfg.epsilon);
    if (vol <= threshold) return g;
  } else if (m <= *cfg.target_edges) {
    return g;
  }

  const double phi = cfg.phi_override ? *cfg.phi_override : 1.0 / (2.0 * log_base(vol, 29.0 / 28.0));
  const double log_n = std::max(1.0, std::log2(n));
  const double p_hat = cfg.fail_prob / (6.0 * n * log_n);
  const double eps_hat =
      cfg.epsilon * std::log(2.0) * std::log(2.0) / ((1.0 + 2.0 * log_base(n, 29.0 / 28.0)) * (2.0 * log_n));

  std::optional<double> upsilon = cfg.upsilon_override;
  if (cfg.mode == SampleMode::kPractical && !upsilon) {
    std::size_t active = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      if (g.unweighted_degree(v) > 0) ++active;
    upsilon = std::max(2.0, 2.0 * static_cast<double>(*cfg.target_edges) / static_cast<double>(active));
  }

  PieceList pl = partition_and_sample(g, phi, eps_hat, p_hat, derive_seed(seed, kCutTag), cfg, upsilon, &stats);
  if (2 * pl.boundary.size() > m) ++stats.boundary_half_violations;

  std::vector<Edge> all;
  for (const Piece& piece : pl.pieces) all.insert(all.end(), piece.sampled.edges().begin(), piece.sampled.edges().end());
  const WeightedGraph g0(g.num_vertices(), pl.boundary);
  if (g0.num_edges() >= m) {
    ++stats.stalled_recursions;
    all.insert(all.end(), g0.edges().begin(), g0.edges().end());
  } else if (g0.num_edges() > 0) {
    const WeightedGraph s0 = sparsify_rec(g0, cfg, derive_seed(seed, kBoundaryTag), depth + 1, stats);
    all.insert(all.end(), s0.edges().begin(), s0.edges().end());
  }
  return WeightedGraph(g.num_vertices(), all);
}

}  // namespace

PieceList partition_and_sample(const WeightedGraph& g, double phi, double eps_hat, double p_hat, std::uint64_t seed,
                               const SparsifyConfig& cfg, std::optional<double> upsilon, SparsifyStats* stats) {
  require_unit_weights(g, "partition_and_sample");
  SparsifyStats local;
  SparsifyStats& st = stats ? *stats : local;
  PieceList pl;
  PieceBuilder builder{phi, eps_hat, p_hat, cfg, upsilon, st, pl.pieces};
  builder.run(g, VertexSet::all(g.num_vertices()), seed);
  pl.boundary = boundary_of(g, pl.pieces);
  return pl;
}

WeightedGraph unwted_sparsify(const WeightedGraph& g, const SparsifyConfig& cfg, SparsifyStats* stats) {
  require_unit_weights(g, "unwted_sparsify");
  validate(cfg);
  SparsifyStats local;
  return sparsify_rec(g, cfg, cfg.seed, 0, stats ? *stats : local);
}

}  // namespace specsparse
