#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "specsparse/cuts.h"
#include "specsparse/generators.h"
#include "specsparse/io.h"
#include "specsparse/partitioning.h"
#include "specsparse/spectral.h"
#include "specsparse/unweighted.h"
#include "specsparse/weighted.h"

namespace specsparse::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void write_report(const std::string& path, const Json& report) {
  if (path.empty()) return;
  write_file_atomic(path, report.dump(2) + "\n");
}

// null for non-finite values, which JSON cannot carry
Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::string set_line(const VertexSet& s) {
  std::string line;
  for (VertexId v : s) {
    if (!line.empty()) line += ' ';
    line += std::to_string(v);
  }
  return line;
}

SampleMode parse_mode(const std::string& mode) {
  if (mode == "paper") return SampleMode::kPaper;
  if (mode == "practical") return SampleMode::kPractical;
  throw UsageError("--mode must be paper or practical");
}

Json stats_counters(const SparsifyStats& s) {
  return Json{{"sparsify_calls", s.sparsify_calls},
              {"max_depth", s.max_depth},
              {"partition_and_sample_calls", s.partition_and_sample_calls},
              {"pieces", s.pieces},
              {"sampled_edges_in", s.sampled_edges_in},
              {"sampled_edges_out", s.sampled_edges_out},
              {"boundary_half_violations", s.boundary_half_violations},
              {"stalled_recursions", s.stalled_recursions}};
}

Json weighted_counters(const WeightedSparsifyStats& s) {
  Json c{{"Q", s.Q},
         {"l", s.l},
         {"levels", s.levels.size()},
         {"cluster_sum", s.cluster_sum},
         {"cluster_bound", s.cluster_bound},
         {"subdivided_clusters", s.subdivided_clusters}};
  const Json inner = stats_counters(s.inner);
  for (const auto& [key, value] : inner.items()) c[key] = value;
  return c;
}

Json trace_counters(const PartitionTrace& trace) {
  std::size_t partitions = 0, partition2 = 0, max_round = 0;
  for (const TraceEvent& e : trace.events) {
    if (e.stage == PartitionStage::kPartition) ++partitions;
    if (e.stage == PartitionStage::kPartition2) ++partition2;
    if (e.stage == PartitionStage::kApproxCut) max_round = std::max(max_round, e.round);
  }
  return Json{{"trace_events", trace.events.size()},
              {"partition_calls", partitions},
              {"partition2_calls", partition2},
              {"rounds", max_round}};
}

struct Measured {
  Json sigma = nullptr;
  std::string status = "skipped";
};

Measured measure_sigma(const WeightedGraph& g, const WeightedGraph& h, std::size_t limit) {
  Measured m;
  if (g.num_vertices() > limit) return m;
  const ApproximationReport r = sigma_approximation(g, h);
  if (r.finite()) {
    m.sigma = r.sigma;
    m.status = "measured";
  } else {
    m.status = "infinite";
  }
  return m;
}

// --- gen --------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::size_t n = 10, k = 4, d = 3, rows = 10, cols = 10, count = 8, size = 8;
  double p = 0.1;
  bool no_bridge = false;
  std::uint64_t seed = 1;
  std::string weights = "unit";
  double wmin = 1.0, wmax = 10.0;
  std::string output;
};

WeightedGraph generate(const GenArgs& a) {
  WeightedGraph g;
  if (a.family == "complete") {
    g = complete_graph(a.n);
  } else if (a.family == "joined-cliques") {
    g = joined_cliques(a.n);
  } else if (a.family == "ring-bipartite") {
    g = ring_bipartite(a.n, a.k, !a.no_bridge);
  } else if (a.family == "ring-of-cliques") {
    g = ring_of_cliques(a.count, a.size);
  } else if (a.family == "gnp") {
    g = gnp(a.n, a.p, a.seed);
  } else if (a.family == "grid") {
    g = grid_graph(a.rows, a.cols);
  } else if (a.family == "random-regular") {
    g = random_regular(a.n, a.d, a.seed);
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  if (a.weights == "integral") return with_random_weights(g, a.wmin, a.wmax, true, a.seed);
  if (a.weights == "real") return with_random_weights(g, a.wmin, a.wmax, false, a.seed);
  if (a.weights != "unit") throw UsageError("--weights must be unit, integral or real");
  return g;
}

int run_gen(const GenArgs& a, std::ostream& out) {
  const WeightedGraph g = generate(a);
  write_graph(a.output, g);
  out << "n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  return kExitOk;
}

// --- stats ------------------------------------------------------------------

struct StatsArgs {
  std::string input;
  std::string report;
};

int run_stats(const StatsArgs& a, std::ostream& out) {
  const WeightedGraph g = read_graph(a.input);
  std::int64_t min_deg = 0, max_deg = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const std::int64_t d = g.unweighted_degree(v);
    min_deg = v == 0 ? d : std::min(min_deg, d);
    max_deg = std::max(max_deg, d);
  }
  const std::size_t components = connected_components(g, g.edges()).size();
  out << "n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  out << "total_weight=" << format_double(g.total_weight()) << " max_weight=" << format_double(g.max_weight())
      << '\n';
  out << "min_degree=" << min_deg << " max_degree=" << max_deg << " components=" << components << '\n';
  out << "unit_weights=" << (g.has_unit_weights() ? "yes" : "no")
      << " integral_weights=" << (g.has_integral_weights() ? "yes" : "no") << '\n';
  Json r{{"schema", 1},
         {"command", "stats"},
         {"n", g.num_vertices()},
         {"input_edges", g.num_edges()},
         {"total_weight", g.total_weight()},
         {"max_weight", g.max_weight()},
         {"min_degree", min_deg},
         {"max_degree", max_deg},
         {"components", components},
         {"unit_weights", g.has_unit_weights()},
         {"integral_weights", g.has_integral_weights()}};
  write_report(a.report, r);
  return kExitOk;
}

// --- sparsify ---------------------------------------------------------------

struct SparsifyArgs {
  std::string input, output, report;
  std::string algorithm = "auto";
  std::string mode = "practical";
  double eps = 0.5;
  double fail_prob = 0.1;
  std::uint64_t seed = 1;
  std::optional<std::size_t> target_edges;
  std::optional<double> phi;
  std::optional<double> upsilon;
  double c8 = 1.0;
  std::size_t verify_limit = 2000;
};

int run_sparsify(const SparsifyArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const WeightedGraph g = read_graph(a.input);

  SparsifyConfig base;
  base.epsilon = a.eps;
  base.fail_prob = a.fail_prob;
  base.mode = parse_mode(a.mode);
  base.seed = a.seed;
  base.phi_override = a.phi;
  base.upsilon_override = a.upsilon;
  if (base.mode == SampleMode::kPractical) base.target_edges = a.target_edges.value_or(20 * g.num_vertices());

  std::string algorithm = a.algorithm;
  if (algorithm == "auto") {
    algorithm = g.has_unit_weights() ? "unweighted" : g.has_integral_weights() ? "bounded" : "sparsify";
  }

  WeightedGraph h;
  double scale = 1.0;
  Json counters;
  if (algorithm == "unweighted") {
    SparsifyStats stats;
    h = unwted_sparsify(g, base, &stats);
    counters = stats_counters(stats);
  } else if (algorithm == "bounded") {
    SparsifyStats stats;
    h = bounded_sparsify(g, base, &stats);
    counters = stats_counters(stats);
  } else if (algorithm == "sparsify" || algorithm == "sparsify2") {
    const double w_max = g.max_weight();
    if (w_max > 0.0) scale = 1.0 / w_max;
    const WeightedGraph scaled = g.scaled(scale);
    const WeightedSparsifyConfig cfg{base, a.c8};
    WeightedSparsifyStats stats;
    if (algorithm == "sparsify") {
      h = sparsify(scaled, cfg, &stats);
      counters = weighted_counters(stats);
    } else {
      Sparsify2Result res = sparsify2(scaled, cfg, &stats);
      h = std::move(res.graph);
      counters = weighted_counters(stats);
      counters["max_vertex_blowup"] = res.blowup.max_vertex();
    }
    if (w_max > 0.0) h = h.scaled(w_max);
  } else {
    throw UsageError("--algorithm must be auto, unweighted, bounded, sparsify or sparsify2");
  }
  write_graph(a.output, h);

  const Measured m = measure_sigma(g, h, a.verify_limit);
  Json r{{"schema", 1},
         {"command", "sparsify"},
         {"algorithm", algorithm},
         {"n", g.num_vertices()},
         {"input_edges", g.num_edges()},
         {"output_edges", h.num_edges()},
         {"sigma", m.sigma},
         {"sigma_status", m.status},
         {"epsilon", a.eps},
         {"fail_prob", a.fail_prob},
         {"seed", a.seed},
         {"mode", to_string(base.mode)},
         {"target_edges", base.target_edges ? Json(*base.target_edges) : Json(nullptr)},
         {"scale_factor", scale},
         {"runtime_ms", elapsed_ms(start)},
         {"counters", counters}};
  write_report(a.report, r);
  out << "algorithm=" << algorithm << " input_edges=" << g.num_edges() << " output_edges=" << h.num_edges()
      << " sigma=" << (m.sigma.is_null() ? std::string("null") : format_double(m.sigma.get<double>())) << '\n';
  return kExitOk;
}

// --- approx-cut / partition -------------------------------------------------

struct CutArgs {
  std::string input, output, report;
  double threshold = 0.0;
  double fail_prob = 0.1;
  std::uint64_t seed = 1;
};

int report_cut(const char* command, const char* threshold_name, const CutArgs& a, const WeightedGraph& g,
               const PartitionOutcome& res, const PartitionTrace& trace, Clock::time_point start,
               std::ostream& out) {
  const DegreeContext ctx = DegreeContext::of(g);
  const std::int64_t vol = volume(res.set, ctx);
  if (!a.output.empty()) write_file_atomic(a.output, set_line(res.set) + "\n");
  Json r{{"schema", 1},
         {"command", command},
         {"n", g.num_vertices()},
         {"input_edges", g.num_edges()},
         {threshold_name, a.threshold},
         {"fail_prob", a.fail_prob},
         {"seed", a.seed},
         {"set_size", res.set.size()},
         {"volume", vol},
         {"vol_fraction", res.vol_fraction},
         {"conductance", res.conductance},
         {"conductance_exact", res.ratio.str()},
         {"runtime_ms", elapsed_ms(start)},
         {"counters", trace_counters(trace)}};
  write_report(a.report, r);
  out << "size=" << res.set.size() << " volume=" << vol << " vol_fraction=" << format_double(res.vol_fraction)
      << " conductance=" << format_double(res.conductance) << '\n';
  return kExitOk;
}

void check_unit_interval(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) throw UsageError(std::string(name) + " must lie in (0, 1)");
}

int run_approx_cut(const CutArgs& a, std::ostream& out) {
  check_unit_interval(a.threshold, "--phi");
  check_unit_interval(a.fail_prob, "--fail-prob");
  const auto start = Clock::now();
  const WeightedGraph g = read_graph(a.input);
  PartitionTrace trace;
  const PartitionOutcome res = approx_cut(g, a.threshold, a.fail_prob, a.seed, {}, &trace);
  return report_cut("approx-cut", "phi", a, g, res, trace, start, out);
}

int run_partition(const CutArgs& a, std::ostream& out) {
  check_unit_interval(a.threshold, "--tau");
  check_unit_interval(a.fail_prob, "--fail-prob");
  const auto start = Clock::now();
  const WeightedGraph g = read_graph(a.input);
  const DegreeContext ctx = DegreeContext::of(g);
  PartitionTrace trace;
  const PartitionOutcome res =
      partition(g, VertexSet::all(g.num_vertices()), ctx, a.threshold, a.fail_prob, a.seed, {}, &trace);
  return report_cut("partition", "tau", a, g, res, trace, start, out);
}

// --- decompose --------------------------------------------------------------

struct DecomposeArgs {
  std::string input, output, report;
  std::optional<double> phi;
};

int run_decompose(const DecomposeArgs& a, std::ostream& out) {
  const WeightedGraph g = read_graph(a.input);
  if (g.num_vertices() > kMaxExactVertices)
    throw UsageError("decompose is exhaustive and needs n <= " + std::to_string(kMaxExactVertices));
  const DegreeContext ctx = DegreeContext::of(g);
  const double phi = a.phi.value_or(ideal_decomposition_threshold(ctx));
  if (!(phi > 0.0)) throw UsageError("--phi must be positive");
  const std::vector<VertexSet> parts = ideal_decomp(g, VertexSet::all(g.num_vertices()), ctx, phi);
  const Decomposition dec = make_decomposition(g, parts);
  std::string lines;
  Json jparts = Json::array();
  for (const VertexSet& s : dec.parts) {
    lines += set_line(s) + "\n";
    jparts.push_back(std::vector<VertexId>(s.begin(), s.end()));
  }
  if (!a.output.empty()) write_file_atomic(a.output, lines);
  Json r{{"schema", 1},
         {"command", "decompose"},
         {"n", g.num_vertices()},
         {"input_edges", g.num_edges()},
         {"phi", phi},
         {"parts", jparts},
         {"boundary_edges", dec.boundary.size()}};
  write_report(a.report, r);
  out << "phi=" << format_double(phi) << " parts=" << dec.parts.size() << " boundary_edges=" << dec.boundary.size()
      << '\n';
  for (std::size_t i = 0; i < dec.parts.size(); ++i) out << "part " << i << ": " << set_line(dec.parts[i]) << '\n';
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string input, other, report;
  std::size_t verify_limit = 2000;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const WeightedGraph g = read_graph(a.input);
  const WeightedGraph h = read_graph(a.other);
  if (g.num_vertices() != h.num_vertices())
    throw std::runtime_error("graphs have different vertex counts (" + std::to_string(g.num_vertices()) + " vs " +
                             std::to_string(h.num_vertices()) + ")");
  const bool dense = g.num_vertices() <= a.verify_limit;
  const DegreeContext ctx = DegreeContext::of(g);
  Json rel = nullptr;
  try {
    rel = dense ? relative_norm(g, h, ctx) : estimate_relative_norm(g, h, ctx);
  } catch (const std::invalid_argument&) {
    // h touches a vertex isolated in g; the normalisation is undefined
  }
  Json r{{"schema", 1},
         {"command", "verify"},
         {"n", g.num_vertices()},
         {"input_edges", g.num_edges()},
         {"output_edges", h.num_edges()}};
  std::string sigma_text = "null";
  if (dense) {
    const ApproximationReport rep = sigma_approximation(g, h);
    r["sigma"] = number_or_null(rep.sigma);
    r["sigma_status"] = rep.finite() ? "measured" : "infinite";
    r["pencil_min"] = number_or_null(rep.pencil_min);
    r["pencil_max"] = number_or_null(rep.pencil_max);
    sigma_text = rep.finite() ? format_double(rep.sigma) : "inf";
  } else {
    r["sigma"] = nullptr;
    r["sigma_status"] = "skipped";
  }
  r["rel_norm"] = rel;
  r["rel_norm_method"] = dense ? "dense" : "power-iteration";
  r["runtime_ms"] = elapsed_ms(start);
  write_report(a.report, r);
  out << "sigma=" << sigma_text
      << " rel_norm=" << (rel.is_null() ? std::string("null") : format_double(rel.get<double>())) << '\n';
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral sparsification of weighted graphs", args.empty() ? "specsparse" : args[0]};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family");
  gen_cmd->add_option("--family", gen.family,
                      "complete | joined-cliques | ring-bipartite | ring-of-cliques | gnp | grid | random-regular")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Vertices (groups for ring-bipartite)");
  gen_cmd->add_option("--k", gen.k, "Group size for ring-bipartite");
  gen_cmd->add_option("--p", gen.p, "Edge probability for gnp");
  gen_cmd->add_option("--d", gen.d, "Degree for random-regular");
  gen_cmd->add_option("--rows", gen.rows);
  gen_cmd->add_option("--cols", gen.cols);
  gen_cmd->add_option("--count", gen.count, "Cliques in ring-of-cliques");
  gen_cmd->add_option("--size", gen.size, "Clique size in ring-of-cliques");
  gen_cmd->add_flag("--no-bridge", gen.no_bridge, "Omit the ring-bipartite bridge");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--weights", gen.weights, "unit | integral | real");
  gen_cmd->add_option("--wmin", gen.wmin);
  gen_cmd->add_option("--wmax", gen.wmax);
  gen_cmd->add_option("-o,--output", gen.output)->required();

  StatsArgs st;
  auto* stats_cmd = app.add_subcommand("stats", "Print graph statistics");
  stats_cmd->add_option("-i,--input", st.input)->required();
  stats_cmd->add_option("--report", st.report);

  SparsifyArgs sp;
  auto* sp_cmd = app.add_subcommand("sparsify", "Sparsify a graph");
  sp_cmd->add_option("-i,--input", sp.input)->required();
  sp_cmd->add_option("-o,--output", sp.output)->required();
  sp_cmd->add_option("--algorithm", sp.algorithm, "auto | unweighted | bounded | sparsify | sparsify2");
  sp_cmd->add_option("--eps", sp.eps);
  sp_cmd->add_option("--fail-prob", sp.fail_prob);
  sp_cmd->add_option("--seed", sp.seed);
  sp_cmd->add_option("--mode", sp.mode, "paper | practical");
  sp_cmd->add_option("--target-edges", sp.target_edges, "Practical mode edge target (default 20n)");
  sp_cmd->add_option("--phi", sp.phi, "Override the conductance target");
  sp_cmd->add_option("--upsilon", sp.upsilon, "Override the sampling parameter");
  sp_cmd->add_option("--c8", sp.c8);
  sp_cmd->add_option("--verify-limit", sp.verify_limit, "Largest n for which sigma is measured");
  sp_cmd->add_option("--report", sp.report);

  CutArgs ac;
  auto* ac_cmd = app.add_subcommand("approx-cut", "Find a large sparse cut");
  ac_cmd->add_option("-i,--input", ac.input)->required();
  ac_cmd->add_option("-o,--output", ac.output, "Write the cut's vertex ids");
  ac_cmd->add_option("--phi", ac.threshold)->required();
  ac_cmd->add_option("--fail-prob", ac.fail_prob);
  ac_cmd->add_option("--seed", ac.seed);
  ac_cmd->add_option("--report", ac.report);

  CutArgs pa;
  auto* pa_cmd = app.add_subcommand("partition", "Run one spectral partition step on the whole graph");
  pa_cmd->add_option("-i,--input", pa.input)->required();
  pa_cmd->add_option("-o,--output", pa.output, "Write the cut's vertex ids");
  pa_cmd->add_option("--tau", pa.threshold)->required();
  pa_cmd->add_option("--fail-prob", pa.fail_prob);
  pa_cmd->add_option("--seed", pa.seed);
  pa_cmd->add_option("--report", pa.report);

  DecomposeArgs de;
  auto* de_cmd = app.add_subcommand("decompose", "Exhaustive conductance decomposition (n <= 20)");
  de_cmd->add_option("-i,--input", de.input)->required();
  de_cmd->add_option("-o,--output", de.output, "Write one part per line");
  de_cmd->add_option("--phi", de.phi);
  de_cmd->add_option("--report", de.report);

  VerifyArgs ve;
  auto* ve_cmd = app.add_subcommand("verify", "Measure how well -j approximates -i");
  ve_cmd->add_option("-i,--input", ve.input)->required();
  ve_cmd->add_option("-j,--other", ve.other)->required();
  ve_cmd->add_option("--verify-limit", ve.verify_limit, "Largest n for a dense solve");
  ve_cmd->add_option("--report", ve.report);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("specsparse");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) {
      err << "run with " << app.get_subcommands().front()->get_name() << " --help for usage\n";
    } else {
      err << "run with --help for usage\n";
    }
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (stats_cmd->parsed()) return run_stats(st, out);
    if (sp_cmd->parsed()) return run_sparsify(sp, out);
    if (ac_cmd->parsed()) return run_approx_cut(ac, out);
    if (pa_cmd->parsed()) return run_partition(pa, out);
    if (de_cmd->parsed()) return run_decompose(de, out);
    if (ve_cmd->parsed()) return run_verify(ve, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    // parameter checks inside the library
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace specsparse::cli
