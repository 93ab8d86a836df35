#pragma once

// Sparse-cut finding inside G{B}: a sweep-cut partitioner with the
// volume/conductance contract, and the two driver loops built on it.

#include <cstdint>
#include <vector>

#include "specsparse/cuts.h"
#include "specsparse/graph.h"
#include "specsparse/spectral.h"

namespace specsparse {

struct ContractConstants {
  double c1 = 1.0;
  double c2 = 1.0;
  bool paper_mode = false;

  // c1 tau^2 / log^3 m and c2 phi^2 / log^4 m, with log m floored at 1.
  double f1(double tau, std::size_t m) const;
  double f2(double phi, std::size_t m) const;
};

struct PartitionConfig {
  // Restarts are ceil(log2(1/p)), clamped to [1, max_restarts].
  std::size_t max_restarts = 2;
  SpectralOptions spectral{.dense_threshold = 2000, .tolerance = 1e-6, .iteration_factor = 10,
                           .max_iterations = 200, .seed = 0};
};

struct PartitionOutcome {
  VertexSet set;
  Rational ratio{1, 1};  // conductance of `set` inside the input subset
  double conductance = 1.0;
  double vol_fraction = 0.0;
  std::size_t rounds_used = 0;
  std::uint64_t seed = 0;
};

enum class PartitionStage { kPartition, kPartition2, kApproxCut };

const char* to_string(PartitionStage s);

// One inner call issued by a driver loop, or one partition result.
struct TraceEvent {
  PartitionStage stage = PartitionStage::kPartition;
  std::size_t depth = 0;
  std::size_t round = 0;            // j in the driver loop; 0 for partition
  std::size_t round_limit = 0;      // r of the driver loop
  double threshold = 0.0;           // conductance bound passed down
  double fail_prob = 0.0;           // failure probability passed down
  double epsilon = 0.0;             // epsilon passed to partition2 (approx_cut only)
  std::int64_t vol_current = 0;     // vol of the set handed to the inner call
  std::int64_t vol_total = 0;       // vol of the driver's whole vertex set
  std::size_t result_size = 0;      // |D_j|
};

struct PartitionTrace {
  std::vector<TraceEvent> events;
};

// Sweep over an approximate Fiedler vector of G{B} in both directions. The
// result D satisfies vol D <= (7/8) vol B and, when nonempty, conductance
// <= tau inside B.
PartitionOutcome partition(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx, double tau, double p,
                           std::uint64_t seed, const PartitionConfig& cfg = {}, PartitionTrace* trace = nullptr,
                           std::size_t depth = 0);

// Repeated partition on the shrinking remainder, r = ceil(log2(1/eps)) rounds
// at most, stopping once the remainder falls under 4/5 of vol B.
PartitionOutcome partition2(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx, double theta,
                            double p, double eps, std::uint64_t seed, const PartitionConfig& cfg = {},
                            PartitionTrace* trace = nullptr, std::size_t depth = 0);

// Repeated partition2 with r = ceil(log2 m) and eps = min(1/(2r), 1/5), where m
// counts edges of g inside V.
PartitionOutcome approx_cut(const WeightedGraph& g, const VertexSet& v, const DegreeContext& ctx, double phi,
                            double p, std::uint64_t seed, const PartitionConfig& cfg = {},
                            PartitionTrace* trace = nullptr);
PartitionOutcome approx_cut(const WeightedGraph& g, double phi, double p, std::uint64_t seed,
                            const PartitionConfig& cfg = {}, PartitionTrace* trace = nullptr);

}  // namespace specsparse
