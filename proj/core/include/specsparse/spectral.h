#pragma once

// Spectral quantities of graph Laplacians: quadratic forms, the smallest
// nonzero normalized-Laplacian eigenvalue, and measured approximation
// quality between two graphs on the same vertex set.

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "specsparse/dense.h"
#include "specsparse/graph.h"

namespace specsparse {

enum class SpectralMethod { kExactDense, kIterativeEstimate };

const char* to_string(SpectralMethod m);

struct SpectralOptions {
  // Graphs with more active vertices than this use power iteration.
  std::size_t dense_threshold = 2000;
  double tolerance = 1e-6;
  // Iteration cap is iteration_factor * (active vertex count).
  std::size_t iteration_factor = 10;
  // Absolute iteration cap for the power method; 0 means no extra cap.
  std::size_t max_iterations = 0;
  std::uint64_t seed = 0x5eed;
};

struct SpectralEstimate {
  double lambda2 = 0.0;
  double residual = 0.0;
  bool disconnected = false;
  SpectralMethod method = SpectralMethod::kExactDense;
};

struct ApproximationReport {
  // Smallest sigma with (1/sigma) L_H <= L_G <= sigma L_H; +inf when the two
  // graphs have different connected-component partitions.
  double sigma = 1.0;
  // Extreme values of x^T L_G x / x^T L_H x off the common nullspace.
  double pencil_min = 1.0;
  double pencil_max = 1.0;
  SpectralMethod method = SpectralMethod::kExactDense;

  bool finite() const { return sigma < std::numeric_limits<double>::infinity(); }
};

// sum over edges of w (x(u) - x(v))^2, accumulated in edge order.
double quadratic_form(const WeightedGraph& g, std::span<const double> x);

DenseMatrix laplacian_matrix(const WeightedGraph& g);

// Smallest nonzero eigenvalue of D^{-1/2} L D^{-1/2} where D holds the
// context degrees. Vertices without incident edges are excluded. Reports
// lambda2 = 0 with `disconnected` set when the edge-bearing vertices do not
// form a single component.
SpectralEstimate normalized_lambda2(const WeightedGraph& g, const DegreeContext& ctx,
                                    const SpectralOptions& opts = {});

struct FiedlerResult {
  // Length n. x(v) / sqrt(d(v)) on active vertices of B, 0 elsewhere, where x
  // approximates the second eigenvector of the normalized Laplacian.
  std::vector<double> embedding;
  double value = 0.0;  // Rayleigh quotient of x
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Power iteration on 2I - N for N the normalized Laplacian of G{B}, deflating
// D^{1/2} 1. Active vertices are the members of B with positive context degree.
FiedlerResult approximate_fiedler(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx,
                                  const SpectralOptions& opts = {});

ApproximationReport sigma_approximation(const WeightedGraph& g, const WeightedGraph& h);

// Largest |eigenvalue| of D^{-1/2} (L_G - L_H) D^{-1/2}.
double relative_norm(const WeightedGraph& g, const WeightedGraph& h, const DegreeContext& ctx);

// Power-iteration estimate of relative_norm for graphs too large for a dense
// solve. Returns ||M x|| for the final unit iterate x, a lower bound on the
// true value.
double estimate_relative_norm(const WeightedGraph& g, const WeightedGraph& h, const DegreeContext& ctx,
                              std::size_t iterations = 300, std::uint64_t seed = 0x5eed);

// Default tolerance: 1e-8 times the largest weighted degree of either graph.
double default_loewner_tolerance(const WeightedGraph& g, const WeightedGraph& h);

// L_G <= L_H, checked as lambda_min(L_H - L_G) >= -tol with a dense solve.
bool loewner_leq(const WeightedGraph& g, const WeightedGraph& h, double tol);
bool loewner_leq(const WeightedGraph& g, const WeightedGraph& h);

// Checks that the single weight-1 edge (u,v) is dominated by
// factor_scale * (sum 1/w_i) * F, where F is a u-v path with weights w_i.
// Throws GraphError if `path` is not a simple u-v path carrying those weights
// in order.
bool path_domination_check(VertexId u, VertexId v, std::span<const double> path_weights,
                           const WeightedGraph& path, double factor_scale = 1.0);

struct NormBoundCheck {
  double lambda = 0.0;   // lambda_2 of G's normalized Laplacian
  double rel_norm = 0.0; // measured relative norm of L_G - L_H
  double sigma = 1.0;    // measured sigma(G, H)
  double bound = 1.0;    // lambda / (lambda - rel_norm), +inf if not applicable
  bool applicable = false;
  bool holds = true;
};

// If rel_norm < lambda, verifies sigma(G, H) <= lambda / (lambda - rel_norm) + tol.
NormBoundCheck norm_bound_check(const WeightedGraph& g, const WeightedGraph& h, const DegreeContext& ctx,
                                double tol = 1e-6);

}  // namespace specsparse
