#include <gtest/gtest.h>

#include <cmath>

#include "specsparse/generators.h"
#include "specsparse/sampling.h"
#include "specsparse/spectral.h"
#include "test_util.h"

using namespace specsparse;

namespace {

SampleParams practical(double upsilon) {
  SampleParams p;
  p.mode = SampleMode::kPractical;
  p.upsilon_override = upsilon;
  return p;
}

}  // namespace

TEST(EdgeProbability, Examples) {
  EXPECT_EQ(edge_probability(3, 5, 12), 1.0);
  EXPECT_EQ(edge_probability(10, 20, 5), 0.5);
  EXPECT_EQ(edge_probability(7, 7, 7), 1.0);
  EXPECT_EQ(edge_probability(20, 10, 5), edge_probability(10, 20, 5));
  EXPECT_THROW(edge_probability(0, 3, 2), std::invalid_argument);
}

TEST(SampleUpsilon, PaperFormula) {
  SampleParams p;
  p.epsilon = 0.25;
  p.fail_prob = 0.1;
  p.lambda = 0.5;
  const double k = std::max(std::log2(30.0), std::log2(100.0));
  EXPECT_NEAR(sample_upsilon(p, 100), std::pow(12 * k / (0.25 * 0.5), 2), 1e-9);
  EXPECT_EQ(sample_upsilon(practical(9), 100), 9.0);
  EXPECT_THROW(sample_upsilon(practical(1.0), 100), std::invalid_argument);
  SampleParams missing;
  missing.mode = SampleMode::kPractical;
  EXPECT_THROW(sample_upsilon(missing, 10), std::invalid_argument);
}

TEST(SampleSubgraph, LargeUpsilonKeepsEverything) {
  const auto g = complete_graph(12);
  const auto r = sample_subgraph(VertexSet::all(12), g.edges(), DegreeContext::of(g), practical(11), 3);
  EXPECT_EQ(r.graph, g);
  EXPECT_EQ(r.kept_edges, g.num_edges());
}

TEST(SampleSubgraph, EmptyEdgeList) {
  const auto g = complete_graph(5);
  const auto r = sample_subgraph(VertexSet::all(5), {}, DegreeContext::of(g), practical(2), 1);
  EXPECT_EQ(r.graph.num_edges(), 0U);
  EXPECT_EQ(r.kept_edges, 0U);
}

TEST(SampleSubgraph, RejectsEdgesOutsideS) {
  const auto g = complete_graph(5);
  EXPECT_THROW(sample_subgraph(VertexSet({0, 1, 2}), g.edges(), DegreeContext::of(g), practical(2), 1),
               std::invalid_argument);
  const auto w = g.scaled(2);
  EXPECT_THROW(sample_subgraph(VertexSet::all(5), w.edges(), DegreeContext::of(g), practical(2), 1),
               std::invalid_argument);
}

TEST(SampleSubgraph, K20KeptCountWithinThreeSigma) {
  const auto g = complete_graph(20);
  const auto r = sample_subgraph(VertexSet::all(20), g.edges(), DegreeContext::of(g), practical(4), 11);
  const double p = 4.0 / 19.0;
  const double mean = 190 * p;
  const double sd = std::sqrt(190 * p * (1 - p));
  EXPECT_NEAR(static_cast<double>(r.kept_edges), mean, 3 * sd);
}

TEST(SampleSubgraph, PaperModeEdgeBound) {
  const auto g = complete_graph(50);
  const auto ctx = DegreeContext::of(g);
  SampleParams p;
  p.epsilon = 0.5;
  p.fail_prob = 0.1;
  p.lambda = normalized_lambda2(g, ctx).lambda2;
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto r = sample_subgraph(VertexSet::all(50), g.edges(), ctx, p, seed);
    if (static_cast<double>(r.kept_edges) <= 2 * r.upsilon_used * 50) ++ok;
  }
  EXPECT_GE(ok, 95);
}

TEST(SampleSubgraph, WeightsAreInverseProbabilities) {
  const auto g = gnp(60, 0.3, 2);
  const auto ctx = DegreeContext::of(g);
  const auto r = sample_subgraph(VertexSet::all(60), g.edges(), ctx, practical(3), 5);
  EXPECT_TRUE(testutil::edge_support_subset(r.graph, g));
  for (const Edge& e : r.graph.edges()) {
    const double p = edge_probability(ctx.degrees[e.u], ctx.degrees[e.v], 3);
    EXPECT_EQ(e.w, 1.0 / p);
  }
}

TEST(SampleSubgraph, Deterministic) {
  const auto g = gnp(60, 0.3, 2);
  const auto ctx = DegreeContext::of(g);
  const auto a = sample_subgraph(VertexSet::all(60), g.edges(), ctx, practical(3), 5);
  const auto b = sample_subgraph(VertexSet::all(60), g.edges(), ctx, practical(3), 5);
  EXPECT_EQ(a.graph, b.graph);
  const auto c = sample_subgraph(VertexSet::all(60), g.edges(), ctx, practical(3), 6);
  EXPECT_NE(a.graph, c.graph);
}

TEST(SampleSubgraph, CoinsDoNotDependOnOtherEdges) {
  const auto g = gnp(40, 0.4, 3);
  const auto ctx = DegreeContext::of(g);
  const auto full = sample_subgraph(VertexSet::all(40), g.edges(), ctx, practical(2), 9);
  std::vector<Edge> half;
  for (std::size_t i = 0; i < g.num_edges(); i += 2) half.push_back(g.edge(i));
  const auto part = sample_subgraph(VertexSet::all(40), half, ctx, practical(2), 9);
  for (const Edge& e : part.graph.edges()) EXPECT_GE(full.graph.find_edge(e.u, e.v), 0);
}

TEST(SampleSubgraph, UnbiasedPerEdge) {
  // star-plus-path graph with 10 edges and uneven degrees
  const auto g = build_graph(8, std::vector<Edge>{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1},
                                                  {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {5, 6, 1}, {6, 7, 1}});
  ASSERT_EQ(g.num_edges(), 10U);
  const auto ctx = DegreeContext::of(g);
  const int runs = 20000;
  std::vector<double> sum(g.num_edges(), 0.0);
  double kept = 0;
  for (int s = 0; s < runs; ++s) {
    const auto r = sample_subgraph(VertexSet::all(8), g.edges(), ctx, practical(1.5), s);
    kept += static_cast<double>(r.kept_edges);
    for (const Edge& e : r.graph.edges()) sum[static_cast<std::size_t>(g.find_edge(e.u, e.v))] += e.w;
  }
  double expected_kept = 0, var_kept = 0;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    const double p = edge_probability(ctx.degrees[e.u], ctx.degrees[e.v], 1.5);
    expected_kept += p;
    var_kept += p * (1 - p);
    const double se = std::sqrt((1 / p - 1) / runs);
    EXPECT_NEAR(sum[i] / runs, 1.0, 3 * se + 1e-12) << "edge " << i;
  }
  EXPECT_NEAR(kept / runs, expected_kept, 3 * std::sqrt(var_kept / runs));
}
