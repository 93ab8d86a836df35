// Acceptance runner. `acceptance N` runs criterion N (1..13); no argument runs
// all of them. Prints one PASS/FAIL line per criterion and exits non-zero if
// any failed.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "json.hpp"
#include "specsparse/cuts.h"
#include "specsparse/generators.h"
#include "specsparse/io.h"
#include "specsparse/partitioning.h"
#include "specsparse/sampling.h"
#include "specsparse/spectral.h"
#include "specsparse/unweighted.h"
#include "specsparse/weighted.h"
#include "test_util.h"

using namespace specsparse;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

bool at_most(const Rational& x, double bound) { return compare_exact(x, bound) <= 0; }

// --- 1 ----------------------------------------------------------------------

std::int64_t ring_form(const WeightedGraph& g, std::size_t n, std::size_t k) {
  // integer potentials x(u, i) = min(u, n - u), integer weights
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    const auto pu = static_cast<std::int64_t>(std::min(e.u / k, n - e.u / k));
    const auto pv = static_cast<std::int64_t>(std::min(e.v / k, n - e.v / k));
    total += static_cast<std::int64_t>(e.w) * (pu - pv) * (pu - pv);
  }
  return total;
}

Verdict golden_ring() {
  const auto with = ring_bipartite(8, 4, true);
  const auto without = ring_bipartite(8, 4, false);
  const std::int64_t qw = ring_form(with, 8, 4), qo = ring_form(without, 8, 4);
  std::vector<double> x(32);
  for (std::size_t v = 0; v < 32; ++v) x[v] = static_cast<double>(std::min(v / 4, 8 - v / 4));
  const bool library_agrees = quadratic_form(with, x) == 144.0 && quadratic_form(without, x) == 128.0;
  const double sigma = sigma_approximation(with, without).sigma;
  Verdict v;
  v.pass = qw == 144 && qo == 128 && library_agrees && sigma >= 1.125 - 1e-9;
  v.detail = "form " + std::to_string(qw) + " vs " + std::to_string(qo) + ", sigma " + fmt(sigma);
  return v;
}

// --- 2 ----------------------------------------------------------------------

Verdict cheeger() {
  std::mt19937_64 rng(2);
  int bad = 0;
  double worst_upper = -1, worst_lower = -1;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 12)(rng);
    const double extra = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    const auto g = testutil::random_connected(n, extra, 100 + i);
    const double phi = testutil::brute_force_conductance(g).value();
    const double lambda = normalized_lambda2(g, DegreeContext::of(g)).lambda2;
    worst_upper = std::max(worst_upper, lambda - 2 * phi);
    worst_lower = std::max(worst_lower, phi * phi / 2 - lambda);
    if (lambda > 2 * phi + 1e-9 || lambda < phi * phi / 2 - 1e-9) ++bad;
  }
  return {bad == 0, "violations " + std::to_string(bad) + "/200, max(l2-2F) " + fmt(worst_upper) +
                        ", max(F^2/2-l2) " + fmt(worst_lower)};
}

// --- 3 ----------------------------------------------------------------------

Verdict certificate() {
  std::mt19937_64 rng(3);
  int checked = 0, bad = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 12)(rng);
    // sparse graphs, so that cuts with alpha <= 1/3 exist for many phi
    const double extra = std::uniform_real_distribution<double>(0.0, 0.15)(rng);
    const auto g = testutil::random_connected(n, extra, 300 + i);
    const auto all = VertexSet::all(n);
    const auto ctx = DegreeContext::of(g);
    const std::int64_t total = volume(all, ctx);
    for (std::int64_t k = 1; k <= 20; ++k) {
      const double phi = static_cast<double>(k) / 20.0;
      const auto s = max_volume_sparse_cut(g, all, ctx, phi);
      if (!s) continue;
      const std::int64_t a = s->vol_set;
      if (3 * a > total) continue;  // alpha > 1/3
      ++checked;
      const Rational inner = exact_sparsest_cut(g, all.set_minus(s->set), ctx).ratio();
      // phi (1 - 3 alpha) / (1 - alpha) with phi = k/20 and alpha = a/total
      const Rational bound{k * (total - 3 * a), 20 * (total - a)};
      if (inner < bound && bound.value() - inner.value() > 1e-12) ++bad;
    }
  }
  return {bad == 0 && checked > 0, "checked " + std::to_string(checked) + ", violations " + std::to_string(bad)};
}

// --- 4 ----------------------------------------------------------------------

Verdict norm_bound() {
  const WeightedGraph graphs[] = {complete_graph(50), gnp(100, 0.3, 4)};
  int applicable = 0, bad = 0, total = 0;
  double worst = -1e300;
  for (const auto& g : graphs) {
    const auto ctx = DegreeContext::of(g);
    for (double upsilon : {4.0, 8.0, 16.0})
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        SampleParams params;
        params.mode = SampleMode::kPractical;
        params.upsilon_override = upsilon;
        const auto h = sample_subgraph(VertexSet::all(g.num_vertices()), g.edges(), ctx, params, seed).graph;
        const auto c = norm_bound_check(g, h, ctx, 1e-6);
        ++total;
        if (!c.applicable) continue;
        ++applicable;
        worst = std::max(worst, c.sigma - c.bound);
        if (!c.holds) ++bad;
      }
  }
  return {bad == 0 && applicable > 0, "applicable " + std::to_string(applicable) + "/" + std::to_string(total) +
                                          ", violations " + std::to_string(bad) + ", max(sigma-bound) " + fmt(worst)};
}

// --- 5 ----------------------------------------------------------------------

bool within(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx, const PartitionOutcome& r,
            std::int64_t num, std::int64_t den, double threshold) {
  if (!r.set.is_subset_of(b)) return false;
  if (den * volume(r.set, ctx) > num * volume(b, ctx)) return false;
  if (r.set.empty()) return true;
  return at_most(conductance(g, r.set, b, ctx).ratio(), threshold);
}

Verdict partition_contracts() {
  const double taus[] = {0.01, 0.05, 0.2, 0.5, 0.9};
  const double epss[] = {0.5, 0.2, 0.05};
  std::size_t runs = 0, bad = 0, nonempty = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto g = testutil::corpus_graph(i, 256);
    const auto ctx = DegreeContext::of(g);
    const auto all = VertexSet::all(g.num_vertices());
    const double t = taus[i % 5];
    const double eps = epss[i % 3];
    std::vector<VertexId> half;
    for (VertexId v = static_cast<VertexId>(i % 2); v < g.num_vertices(); v += 2) half.push_back(v);
    const VertexSet b(half);

    const auto p1 = partition(g, all, ctx, t, 0.1, i);
    const auto p1b = partition(g, b, ctx, t, 0.1, i);
    const auto p2 = partition2(g, all, ctx, t, 0.1, eps, i);
    const auto a = approx_cut(g, all, ctx, t, 0.1, i);
    runs += 4;
    nonempty += !p1.set.empty() + !p1b.set.empty() + !p2.set.empty() + !a.set.empty();
    bad += !within(g, all, ctx, p1, 7, 8, t);
    bad += !within(g, b, ctx, p1b, 7, 8, t);
    bad += !within(g, all, ctx, p2, 9, 10, t);
    bad += !within(g, all, ctx, a, 23, 25, t);
  }
  return {bad == 0, "runs " + std::to_string(runs) + " (nonempty " + std::to_string(nonempty) + "), violations " +
                        std::to_string(bad)};
}

// --- 6 ----------------------------------------------------------------------

Verdict planted_cut() {
  const double phi = 0.5;
  struct Family {
    const char* name;
    WeightedGraph g;
  };
  const Family families[] = {{"dumbbell", joined_cliques(100)}, {"ring-of-cliques", ring_of_cliques(8, 25)}};
  Verdict v;
  for (const auto& f : families) {
    const auto ctx = DegreeContext::of(f.g);
    // the planted cut: the first half of the vertices
    std::vector<VertexId> first(f.g.num_vertices() / 2);
    std::iota(first.begin(), first.end(), 0);
    const double planted = conductance(f.g, VertexSet(first), ctx).conductance();
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto r = approx_cut(f.g, phi, 0.1, seed);
      if (!r.set.empty() && at_most(conductance(f.g, r.set, ctx).ratio(), phi)) ++hits;
    }
    v.pass = v.pass && planted < phi && hits >= 40;
    v.detail += std::string(v.detail.empty() ? "" : "; ") + f.name + " planted " + fmt(planted) + " hits " +
                std::to_string(hits) + "/50";
  }
  return v;
}


// --- 7 ----------------------------------------------------------------------

Verdict unweighted_sparsify() {
  std::size_t subset_bad = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const auto g = testutil::corpus_graph(i, 150);
    SparsifyConfig cfg;
    cfg.target_edges = g.num_edges() / 3 + 1;
    cfg.seed = i;
    if (!testutil::edge_support_subset(unwted_sparsify(g, cfg), g)) ++subset_bad;
  }
  const auto g = gnp(400, 0.2, 7);
  int good = 0;
  double worst = 1.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SparsifyConfig cfg;
    cfg.epsilon = 0.5;
    cfg.target_edges = 20 * 400;
    cfg.seed = seed;
    const auto h = unwted_sparsify(g, cfg);
    if (!testutil::edge_support_subset(h, g)) ++subset_bad;
    const double sigma = sigma_approximation(g, h).sigma;
    worst = std::max(worst, sigma);
    if (sigma <= 2.0) ++good;
  }
  return {subset_bad == 0 && good >= 18, "subset violations " + std::to_string(subset_bad) + ", sigma <= 2 in " +
                                             std::to_string(good) + "/20 (worst " + fmt(worst) + ")"};
}

// --- 8 ----------------------------------------------------------------------

Verdict truncation() {
  std::size_t edges = 0, bad = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    std::mt19937_64 rng(800 + i);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 40)(rng);
    // weights spread over many binary orders of magnitude
    auto g = testutil::random_weighted(n, 0.15, 0.0, 1.0, 800 + i);
    std::vector<Edge> e(g.edges().begin(), g.edges().end());
    std::uniform_real_distribution<double> mant(0.5, 1.0);
    std::uniform_int_distribution<int> expo(-40, 0);
    for (Edge& x : e) x.w = std::min(1.0, std::ldexp(mant(rng), expo(rng)));
    g = WeightedGraph(n, e);
    for (double eps : {0.49, 0.2, 0.05}) {
      const auto dec = truncate_weights(g, eps);
      const std::int64_t q = dec.Q;
      const auto cap = static_cast<std::size_t>(std::ceil(std::log2(2.0 * static_cast<double>(q))));
      std::vector<Dyadic> sum(g.num_edges(), Dyadic(0, 0));
      for (const Level& level : dec.levels)
        for (std::uint32_t id : level.edge_ids) sum[id] = sum[id] + Dyadic(1, -level.index);
      for (std::size_t id = 0; id < g.num_edges(); ++id) {
        const auto& t = dec.truncation[id];
        const Dyadic w = Dyadic::from_double(g.edge(id).w);
        ++edges;
        const bool ok = t.z <= w && w.times_int(q) <= t.z.times_int(q + 1) && sum[id] == t.z &&
                        dec.multiplicity(id) <= cap && t.q >= q && t.q < 2 * q;
        if (!ok) ++bad;
      }
    }
  }
  return {bad == 0, "edge checks " + std::to_string(edges) + ", violations " + std::to_string(bad)};
}

// --- 9 ----------------------------------------------------------------------

std::vector<VertexSet> random_parts(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::vector<VertexId>> buckets(k);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (VertexId v = 0; v < n; ++v) buckets[v < k ? v : pick(rng)].push_back(v);
  std::vector<VertexSet> parts;
  for (auto& b : buckets) parts.emplace_back(std::move(b));
  return parts;
}

Verdict contraction_pullback() {
  std::mt19937_64 rng(9);
  std::size_t round_trip_bad = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 50)(rng);
    const auto g = testutil::random_weighted(n, 0.2, 0.01, 10.0, 900 + i);
    const auto pi = ClusterMap::from_parts(n, random_parts(n, std::uniform_int_distribution<std::size_t>(1, n)(rng), rng));
    const auto h = contract(g.edges(), pi);
    std::vector<Edge> tilde(h.edges().begin(), h.edges().end());
    for (Edge& e : tilde) e.w *= std::uniform_real_distribution<double>(0.1, 10.0)(rng);
    const WeightedGraph h_tilde(h.num_vertices(), tilde);
    const auto strategy = i % 2 ? PullbackStrategy::kRandom : PullbackStrategy::kFirst;
    const auto back = pullback(h_tilde, pi, g.edges(), n, strategy, i);
    if (!(contract(back.edges(), pi) == h_tilde) || back.num_edges() != h_tilde.num_edges()) ++round_trip_bad;
  }

  const double eps = 0.3, c = 6.0 / eps;
  const double alpha = (1 + eps) * (1 + 1 / c) * (1 + 1 / c);
  std::size_t lemma_bad = 0;
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(10, 60)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(12, n / 2))(rng);
    const auto parts = random_parts(n, k, rng);
    const auto pi = ClusterMap::from_parts(n, parts);
    const double heavy = c * c * std::pow(static_cast<double>(n), 3);
    std::vector<Edge> e1, e0;
    for (const VertexSet& p : parts) {
      // spanning path plus a few chords, all heavy
      for (std::size_t j = 1; j < p.size(); ++j) e1.push_back(Edge{p.ids()[j - 1], p.ids()[j], heavy});
      if (p.size() > 2) e1.push_back(Edge{p.ids().front(), p.ids().back(), heavy});
    }
    std::bernoulli_distribution coin(0.25);
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        if (pi.cluster_of[a] != pi.cluster_of[b] && coin(rng)) e0.push_back(Edge{a, b, 1.0});
    std::vector<Edge> all = e1;
    all.insert(all.end(), e0.begin(), e0.end());
    const WeightedGraph g(n, all), g1(n, e1);
    const auto h = contract(e0, pi);
    std::vector<Edge> tilde(h.edges().begin(), h.edges().end());
    std::uniform_real_distribution<double> factor(1 / (1 + eps), 1 + eps);
    for (Edge& e : tilde) e.w *= factor(rng);
    const WeightedGraph h_tilde(h.num_vertices(), tilde);
    const auto g0 = pullback(h_tilde, pi, e0, n, PullbackStrategy::kRandom, static_cast<std::uint64_t>(t));
    const double sigma = sigma_approximation(graph_sum(g0, g1), g).sigma;
    worst = std::max(worst, sigma);
    if (!(sigma <= alpha + 1e-6)) ++lemma_bad;
  }
  return {round_trip_bad == 0 && lemma_bad == 0, "round-trip failures " + std::to_string(round_trip_bad) +
                                                     "/500, lemma violations " + std::to_string(lemma_bad) +
                                                     "/20 (worst sigma " + fmt(worst) + ", alpha " + fmt(alpha) + ")"};
}

// --- 10 ---------------------------------------------------------------------

Verdict cluster_counter() {
  std::size_t runs = 0, bad = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    std::mt19937_64 rng(1000 + i);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(5, 80)(rng);
    auto g = testutil::random_weighted(n, 0.1, 0.0, 1.0, 1000 + i);
    std::vector<Edge> e(g.edges().begin(), g.edges().end());
    std::uniform_int_distribution<int> expo(-50, 0);
    for (Edge& x : e) x.w = std::min(1.0, std::ldexp(std::uniform_real_distribution<double>(0.5, 1.0)(rng), expo(rng)));
    g = WeightedGraph(n, e);
    for (int variant = 0; variant < 4; ++variant) {
      WeightedSparsifyConfig cfg;
      if (variant < 2) {
        cfg.base.mode = SampleMode::kPractical;
        cfg.base.epsilon = 0.3;
        cfg.base.target_edges = g.num_edges() / 3 + 1;
      } else {
        cfg.base.mode = SampleMode::kPaper;
        cfg.base.epsilon = 0.3;  // n >= 5, so 1/n < eps < 1/3
      }
      cfg.base.seed = i;
      WeightedSparsifyStats stats;
      if (variant % 2 == 0) {
        sparsify(g, cfg, &stats);
      } else {
        sparsify2(g, cfg, &stats);
      }
      ++runs;
      if (stats.cluster_sum > stats.cluster_bound) ++bad;
    }
  }
  return {bad == 0, "runs " + std::to_string(runs) + ", violations " + std::to_string(bad)};
}

// --- 11 ---------------------------------------------------------------------

Verdict blow_up_bounds() {
  // three weight scales on a random connected graph with n = 120
  const auto base = testutil::random_connected(120, 0.2, 11);
  std::mt19937_64 rng(11);
  std::vector<Edge> e(base.edges().begin(), base.edges().end());
  const double scales[] = {1.0, 1e-3, 1e-6};
  for (Edge& x : e)
    x.w = scales[std::uniform_int_distribution<int>(0, 2)(rng)] * std::uniform_real_distribution<double>(0.5, 1.0)(rng);
  const WeightedGraph g(120, e);
  int good = 0;
  double worst = 0.0;
  std::size_t kept = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    WeightedSparsifyConfig cfg;
    cfg.base.epsilon = 0.3;
    cfg.base.target_edges = 10;
    cfg.base.seed = seed;
    const auto res = sparsify2(g, cfg);
    kept += res.graph.num_edges();
    const double m = res.blowup.max_vertex();
    worst = std::max(worst, m);
    if (m <= 2.0) ++good;
  }

  const auto small = testutil::random_weighted(14, 0.2, 0.05, 1.0, 111);
  std::vector<Edge> se(small.edges().begin(), small.edges().end());
  se.resize(std::min<std::size_t>(se.size(), 30));
  const WeightedGraph g30 = build_graph(14, se);
  const int runs = 1000;
  std::vector<double> sum(g30.num_edges(), 0.0), sq(g30.num_edges(), 0.0);
  for (int s = 0; s < runs; ++s) {
    WeightedSparsifyConfig cfg;
    cfg.base.epsilon = 0.5;
    cfg.base.target_edges = 8;
    cfg.base.seed = static_cast<std::uint64_t>(s);
    const auto rep = sparsify2(g30, cfg).blowup;
    for (std::size_t i = 0; i < g30.num_edges(); ++i) {
      sum[i] += rep.edge[i];
      sq[i] += rep.edge[i] * rep.edge[i];
    }
  }
  std::size_t edge_bad = 0;
  double max_mean = 0.0;
  for (std::size_t i = 0; i < g30.num_edges(); ++i) {
    const double mean = sum[i] / runs;
    const double se_mean = std::sqrt(std::max(0.0, sq[i] / runs - mean * mean) / runs);
    max_mean = std::max(max_mean, mean);
    if (mean > 1.0 + 3.0 * se_mean) ++edge_bad;
  }
  return {good >= 95 && edge_bad == 0 && g30.num_edges() == 30,
          "vertex blow-up <= 2 in " + std::to_string(good) + "/100 (worst " + fmt(worst) + ", mean kept " +
              std::to_string(kept / 100) + "/" + std::to_string(g.num_edges()) + "); edges over 1+3se " +
              std::to_string(edge_bad) + "/" + std::to_string(g30.num_edges()) + " (max mean " + fmt(max_mean) + ")"};
}

// --- 12 ---------------------------------------------------------------------

WeightedGraph path_of(std::span<const double> w) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < w.size(); ++i) e.push_back(Edge{static_cast<VertexId>(i), static_cast<VertexId>(i + 1), w[i]});
  return WeightedGraph(w.size() + 1, e);
}

Verdict path_lemma() {
  std::mt19937_64 rng(12);
  std::size_t bad = 0, tight_bad = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::vector<double> w(len);
    for (double& x : w) x = std::uniform_real_distribution<double>(0.1, 10.0)(rng);
    if (!path_domination_check(0, static_cast<VertexId>(len), w, path_of(w))) ++bad;
  }
  for (std::size_t len = 1; len <= 6; ++len)
    for (double weight : {0.1, 1.0, 3.5, 10.0}) {
      const std::vector<double> w(len, weight);
      const auto p = path_of(w);
      if (!path_domination_check(0, static_cast<VertexId>(len), w, p)) ++tight_bad;
      if (path_domination_check(0, static_cast<VertexId>(len), w, p, 0.999)) ++tight_bad;
    }
  return {bad == 0 && tight_bad == 0,
          "random paths failing " + std::to_string(bad) + "/100, tight cases wrong " + std::to_string(tight_bad) + "/24"};
}

// --- 13 ---------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs a fixed CLI session in `dir`; returns false if any command fails.
bool scripted_session(const std::filesystem::path& dir) {
  const auto f = [&](const char* name) { return (dir / name).string(); };
  const std::vector<std::vector<std::string>> script = {
      {"gen", "--family", "gnp", "--n", "150", "--p", "0.2", "--seed", "3", "-o", f("g.el")},
      {"gen", "--family", "ring-of-cliques", "--count", "6", "--size", "10", "--weights", "real", "--wmin", "0.01",
       "--wmax", "5", "--seed", "4", "-o", f("w.mtx")},
      {"gen", "--family", "grid", "--rows", "8", "--cols", "9", "--weights", "integral", "--seed", "5", "-o",
       f("i.el")},
      {"stats", "-i", f("w.mtx"), "--report", f("stats.json")},
      {"sparsify", "-i", f("g.el"), "-o", f("s1.el"), "--seed", "7", "--target-edges", "600", "--report",
       f("s1.json")},
      {"sparsify", "-i", f("w.mtx"), "-o", f("s2.mtx"), "--algorithm", "sparsify", "--eps", "0.3", "--seed", "7",
       "--target-edges", "100", "--report", f("s2.json")},
      {"sparsify", "-i", f("w.mtx"), "-o", f("s3.el"), "--algorithm", "sparsify2", "--eps", "0.3", "--seed", "7",
       "--target-edges", "100", "--report", f("s3.json")},
      {"sparsify", "-i", f("i.el"), "-o", f("s4.el"), "--seed", "7", "--target-edges", "60", "--report",
       f("s4.json")},
      {"approx-cut", "-i", f("g.el"), "--phi", "0.4", "--seed", "2", "-o", f("cut.txt"), "--report", f("cut.json")},
      {"partition", "-i", f("g.el"), "--tau", "0.4", "--seed", "2", "-o", f("part.txt"), "--report", f("part.json")},
      {"verify", "-i", f("g.el"), "-j", f("s1.el"), "--report", f("v.json")},
  };
  for (auto args : script) {
    args.insert(args.begin(), "specsparse");
    std::ostringstream out, err;
    if (cli::run_command(args, out, err) != cli::kExitOk) {
      std::cerr << "command failed: " << args[1] << ": " << err.str();
      return false;
    }
  }
  return true;
}

Verdict io_and_determinism() {
  std::size_t io_bad = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    std::mt19937_64 rng(1300 + i);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 80)(rng);
    const auto base = gnp(n, std::uniform_real_distribution<double>(0.0, 0.3)(rng), i);
    std::vector<Edge> e(base.edges().begin(), base.edges().end());
    for (Edge& x : e) x.w = std::ldexp(std::uniform_real_distribution<double>(0.5, 1.0)(rng), std::uniform_int_distribution<int>(-300, 300)(rng));
    const WeightedGraph g(n, e);
    std::ostringstream el, mtx;
    write_edgelist(el, g);
    write_matrix_market(mtx, g);
    std::istringstream el_in(el.str()), mtx_in(mtx.str());
    if (!(read_edgelist(el_in) == g) || !(read_matrix_market(mtx_in) == g)) ++io_bad;
  }

  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / ("specsparse_accept_" + std::to_string(::getpid()));
  const fs::path a = root / "a", b = root / "b";
  fs::create_directories(a);
  fs::create_directories(b);
  bool ran = scripted_session(a) && scripted_session(b);
  std::size_t files = 0, differing = 0;
  if (ran) {
    for (const auto& entry : fs::directory_iterator(a)) {
      ++files;
      const auto name = entry.path().filename();
      std::string x = slurp(a / name), y = slurp(b / name);
      if (name.extension() == ".json") {
        auto jx = nlohmann::ordered_json::parse(x), jy = nlohmann::ordered_json::parse(y);
        jx.erase("runtime_ms");
        jy.erase("runtime_ms");
        x = jx.dump();
        y = jy.dump();
      }
      if (x != y) ++differing;
    }
  }
  fs::remove_all(root);
  return {io_bad == 0 && ran && differing == 0 && files > 0,
          "round-trip failures " + std::to_string(io_bad) + "/1000, session " + (ran ? "ran" : "failed") + ", " +
              std::to_string(differing) + "/" + std::to_string(files) + " artifacts differ"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"ring-bipartite quadratic form and sigma", golden_ring},
      {"Cheeger sandwich on small graphs", cheeger},
      {"sparse-cut certificate bound", certificate},
      {"sampling norm bound", norm_bound},
      {"partitioning contracts on fuzz corpus", partition_contracts},
      {"planted-cut recovery", planted_cut},
      {"unweighted sparsification", unweighted_sparsify},
      {"weight truncation sandwich", truncation},
      {"contraction and pullback", contraction_pullback},
      {"cluster counter", cluster_counter},
      {"blow-up bounds", blow_up_bounds},
      {"path domination", path_lemma},
      {"I/O round trip and CLI determinism", io_and_determinism},
  };
  std::vector<std::size_t> chosen;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) {
      const long k = std::strtol(argv[i], nullptr, 10);
      if (k < 1 || k > static_cast<long>(criteria.size())) {
        std::cerr << "usage: acceptance [1-" << criteria.size() << "]...\n";
        return 2;
      }
      chosen.push_back(static_cast<std::size_t>(k));
    }
  } else {
    for (std::size_t k = 1; k <= criteria.size(); ++k) chosen.push_back(k);
  }
  bool all = true;
  for (std::size_t k : chosen) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[k - 1].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << k << " " << (v.pass ? "PASS" : "FAIL") << ": " << criteria[k - 1].first << " | "
              << v.detail << " | " << ms << " ms" << std::endl;
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
