#include "specsparse/partitioning.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specsparse/rng.h"

namespace specsparse {

namespace {

double log2_floor1(std::size_t m) { return std::max(1.0, std::log2(static_cast<double>(std::max<std::size_t>(m, 1)))); }

void check_unit_interval(const char* what, double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument(std::string(what) + " must lie in (0, 1)");
}

std::size_t ceil_log2(double x) {
  const double l = std::ceil(std::log2(x) - 1e-12);
  return l < 0.0 ? 0 : static_cast<std::size_t>(l);
}

std::size_t edges_inside(const WeightedGraph& g, const VertexSet& v) {
  const std::vector<char> in = v.mask(g.num_vertices());
  std::size_t m = 0;
  for (const Edge& e : g.edges())
    if (in[e.u] && in[e.v]) ++m;
  return m;
}

PartitionOutcome finish(const WeightedGraph& g, VertexSet d, const VertexSet& b, const DegreeContext& ctx,
                        std::size_t rounds, std::uint64_t seed) {
  PartitionOutcome out;
  const Cut c = conductance(g, d, b, ctx);
  out.ratio = c.ratio();
  out.conductance = out.ratio.value();
  const std::int64_t vol_b = c.vol_set + c.vol_complement;
  out.vol_fraction = vol_b > 0 ? static_cast<double>(c.vol_set) / static_cast<double>(vol_b) : 0.0;
  out.set = std::move(d);
  out.rounds_used = rounds;
  out.seed = seed;
  return out;
}

}  // namespace

double ContractConstants::f1(double tau, std::size_t m) const {
  const double l = log2_floor1(m);
  return c1 * tau * tau / (l * l * l);
}

double ContractConstants::f2(double phi, std::size_t m) const {
  const double l = log2_floor1(m);
  return c2 * phi * phi / (l * l * l * l);
}

const char* to_string(PartitionStage s) {
  switch (s) {
    case PartitionStage::kPartition:
      return "partition";
    case PartitionStage::kPartition2:
      return "partition2";
    case PartitionStage::kApproxCut:
      return "approx_cut";
  }
  return "?";
}

PartitionOutcome partition(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx, double tau, double p,
                           std::uint64_t seed, const PartitionConfig& cfg, PartitionTrace* trace, std::size_t depth) {
  check_unit_interval("partition: tau", tau);
  check_unit_interval("partition: p", p);
  const std::int64_t vol_b = volume(b, ctx);
  const std::size_t restarts = std::clamp<std::size_t>(ceil_log2(1.0 / p), 1, std::max<std::size_t>(cfg.max_restarts, 1));

  Cut best;
  bool have = false;
  if (vol_b > 0 && b.size() >= 2) {
    for (std::size_t r = 0; r < restarts; ++r) {
      SpectralOptions opts = cfg.spectral;
      opts.seed = derive_seed(seed, r);
      FiedlerResult f = approximate_fiedler(g, b, ctx, opts);
      for (int dir = 0; dir < 2; ++dir) {
        if (dir == 1)
          for (double& x : f.embedding) x = -x;
        Cut c = sweep_cut(g, b, f.embedding, ctx);
        if (c.set.empty()) continue;
        if (!have || c.ratio() < best.ratio()) {
          best = std::move(c);
          have = true;
        }
      }
    }
  }

  VertexSet d;
  // Sweep prefixes never exceed half the volume, so vol D <= (7/8) vol B
  // holds without trimming; the emptiness rule below enforces the
  // conductance bound.
  if (have && 8 * best.vol_set <= 7 * vol_b && compare_exact(best.ratio(), tau) <= 0) d = best.set;
  PartitionOutcome out = finish(g, std::move(d), b, ctx, restarts, seed);
  if (trace) {
    TraceEvent ev;
    ev.stage = PartitionStage::kPartition;
    ev.depth = depth;
    ev.round_limit = restarts;
    ev.threshold = tau;
    ev.fail_prob = p;
    ev.vol_current = vol_b;
    ev.vol_total = vol_b;
    ev.result_size = out.set.size();
    trace->events.push_back(ev);
  }
  return out;
}

PartitionOutcome partition2(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx, double theta,
                            double p, double eps, std::uint64_t seed, const PartitionConfig& cfg,
                            PartitionTrace* trace, std::size_t depth) {
  check_unit_interval("partition2: theta", theta);
  check_unit_interval("partition2: p", p);
  check_unit_interval("partition2: eps", eps);
  const std::size_t r = std::max<std::size_t>(1, ceil_log2(1.0 / eps));
  const std::int64_t vol_v = volume(b, ctx);
  VertexSet w = b;
  std::int64_t vol_w = vol_v;
  VertexSet d;
  std::size_t j = 0;
  while (j < r && 5 * vol_w >= 4 * vol_v) {
    ++j;
    const double inner_theta = theta / 9.0;
    const double inner_p = p / static_cast<double>(r);
    const PartitionOutcome dj = partition(g, w, ctx, inner_theta, inner_p, derive_seed(seed, j), cfg, trace, depth + 1);
    if (trace) {
      TraceEvent ev;
      ev.stage = PartitionStage::kPartition2;
      ev.depth = depth;
      ev.round = j;
      ev.round_limit = r;
      ev.threshold = inner_theta;
      ev.fail_prob = inner_p;
      ev.vol_current = vol_w;
      ev.vol_total = vol_v;
      ev.result_size = dj.set.size();
      trace->events.push_back(ev);
    }
    w = w.set_minus(dj.set);
    vol_w = volume(w, ctx);
    d = d.set_union(dj.set);
  }
  return finish(g, std::move(d), b, ctx, j, seed);
}

PartitionOutcome approx_cut(const WeightedGraph& g, const VertexSet& v, const DegreeContext& ctx, double phi,
                            double p, std::uint64_t seed, const PartitionConfig& cfg, PartitionTrace* trace) {
  check_unit_interval("approx_cut: phi", phi);
  check_unit_interval("approx_cut: p", p);
  const std::size_t m = edges_inside(g, v);
  const std::size_t r = m >= 2 ? ceil_log2(static_cast<double>(m)) : 0;
  const double eps = r > 0 ? std::min(1.0 / (2.0 * static_cast<double>(r)), 0.2) : 0.2;
  const std::int64_t vol_v = volume(v, ctx);
  VertexSet rest = v;
  std::int64_t vol_rest = vol_v;
  VertexSet d;
  std::size_t j = 0;
  while (j < r && 5 * vol_rest >= 4 * vol_v) {
    ++j;
    const double inner_phi = (2.0 / 23.0) * phi;
    const double inner_p = p / (2.0 * static_cast<double>(r));
    const PartitionOutcome dj =
        partition2(g, rest, ctx, inner_phi, inner_p, eps, derive_seed(seed, j), cfg, trace, 1);
    if (trace) {
      TraceEvent ev;
      ev.stage = PartitionStage::kApproxCut;
      ev.depth = 0;
      ev.round = j;
      ev.round_limit = r;
      ev.threshold = inner_phi;
      ev.fail_prob = inner_p;
      ev.epsilon = eps;
      ev.vol_current = vol_rest;
      ev.vol_total = vol_v;
      ev.result_size = dj.set.size();
      trace->events.push_back(ev);
    }
    rest = rest.set_minus(dj.set);
    vol_rest = volume(rest, ctx);
    d = d.set_union(dj.set);
  }
  return finish(g, std::move(d), v, ctx, j, seed);
}

PartitionOutcome approx_cut(const WeightedGraph& g, double phi, double p, std::uint64_t seed,
                            const PartitionConfig& cfg, PartitionTrace* trace) {
  return approx_cut(g, VertexSet::all(g.num_vertices()), DegreeContext::of(g), phi, p, seed, cfg, trace);
}

}  // namespace specsparse
