#include "specsparse/spectral.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specsparse/rng.h"

namespace specsparse {

const char* to_string(SpectralMethod m) {
  return m == SpectralMethod::kExactDense ? "exact-dense" : "iterative-estimate";
}

double quadratic_form(const WeightedGraph& g, std::span<const double> x) {
  if (x.size() != g.num_vertices())
    throw std::invalid_argument("quadratic_form: vector length " + std::to_string(x.size()) +
                                " does not match n = " + std::to_string(g.num_vertices()));
  double s = 0.0;
  for (const Edge& e : g.edges()) {
    const double d = x[e.u] - x[e.v];
    s += e.w * d * d;
  }
  return s;
}

DenseMatrix laplacian_matrix(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  DenseMatrix l(n, n);
  for (const Edge& e : g.edges()) {
    l(e.u, e.u) += e.w;
    l(e.v, e.v) += e.w;
    l(e.u, e.v) -= e.w;
    l(e.v, e.u) -= e.w;
  }
  return l;
}

namespace {

// Local numbering of a vertex subset.
struct LocalIndex {
  std::vector<VertexId> global;
  std::vector<std::int64_t> local;  // -1 when absent

  LocalIndex(std::size_t n, std::span<const VertexId> ids) : global(ids.begin(), ids.end()), local(n, -1) {
    for (std::size_t i = 0; i < global.size(); ++i) local[global[i]] = static_cast<std::int64_t>(i);
  }
  std::size_t size() const { return global.size(); }
};

std::vector<VertexId> edge_bearing_vertices(const WeightedGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.unweighted_degree(v) > 0) out.push_back(v);
  return out;
}

// Laplacian of g restricted to the listed vertices (all of whose incident
// edges are assumed to stay inside the list).
DenseMatrix local_laplacian(const WeightedGraph& g, const LocalIndex& idx) {
  DenseMatrix l(idx.size(), idx.size());
  for (const Edge& e : g.edges()) {
    const auto a = idx.local[e.u];
    const auto b = idx.local[e.v];
    if (a < 0 || b < 0) continue;
    const auto i = static_cast<std::size_t>(a);
    const auto j = static_cast<std::size_t>(b);
    l(i, i) += e.w;
    l(j, j) += e.w;
    l(i, j) -= e.w;
    l(j, i) -= e.w;
  }
  return l;
}

// Compresses a k x k Laplacian-like matrix with constant nullvector onto the
// orthogonal complement of the all-ones vector, using the Householder
// reflection that swaps e_0 and 1/sqrt(k).
DenseMatrix project_off_constants(const DenseMatrix& l) {
  const std::size_t k = l.rows();
  std::vector<double> v(k, 1.0 / std::sqrt(static_cast<double>(k)));
  v[0] -= 1.0;
  double vv = 0.0;
  for (double t : v) vv += t * t;
  const double beta = 2.0 / vv;
  const std::vector<double> p = l.multiply(v);
  double s = 0.0;
  for (std::size_t i = 0; i < k; ++i) s += v[i] * p[i];
  DenseMatrix out(k - 1, k - 1);
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 1; j < k; ++j) {
      out(i - 1, j - 1) = l(i, j) - beta * (v[i] * p[j] + p[i] * v[j]) + beta * beta * s * v[i] * v[j];
    }
  }
  return out;
}

// Edge-wise difference w_G - w_H over the union of supports.
std::vector<Edge> weight_difference(const WeightedGraph& g, const WeightedGraph& h) {
  std::vector<Edge> out;
  auto a = g.edges();
  auto b = h.edges();
  std::size_t i = 0, j = 0;
  auto key_less = [](const Edge& x, const Edge& y) { return x.u != y.u ? x.u < y.u : x.v < y.v; };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && key_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || key_less(b[j], a[i])) {
      out.push_back(Edge{b[j].u, b[j].v, -b[j].w});
      ++j;
    } else {
      const double d = a[i].w - b[j].w;
      if (d != 0.0) out.push_back(Edge{a[i].u, a[i].v, d});
      ++i;
      ++j;
    }
  }
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void remove_component(std::vector<double>& x, std::span<const double> unit) {
  const double c = dot(x, unit);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * unit[i];
}

}  // namespace

FiedlerResult approximate_fiedler(const WeightedGraph& g, const VertexSet& b, const DegreeContext& ctx,
                                  const SpectralOptions& opts) {
  const std::size_t n = g.num_vertices();
  if (ctx.size() != n) throw std::invalid_argument("approximate_fiedler: context size mismatch");
  b.check_bound(n);
  FiedlerResult res;
  res.embedding.assign(n, 0.0);

  std::vector<VertexId> active;
  for (VertexId v : b)
    if (ctx.degrees[v] > 0) active.push_back(v);
  const std::size_t k = active.size();
  if (k < 2) {
    res.converged = true;
    return res;
  }
  const LocalIndex idx(n, active);

  // Internal arcs as (i, j, w / sqrt(d_i d_j)) plus diagonal L_ii / d_i.
  struct LocalArc {
    std::uint32_t i, j;
    double w;
  };
  std::vector<LocalArc> arcs;
  std::vector<double> diag(k, 0.0);
  std::vector<double> sqrt_deg(k);
  for (std::size_t i = 0; i < k; ++i) sqrt_deg[i] = std::sqrt(static_cast<double>(ctx.degrees[active[i]]));
  for (const Edge& e : g.edges()) {
    const auto a = idx.local[e.u];
    const auto c = idx.local[e.v];
    if (a < 0 || c < 0) continue;
    const auto i = static_cast<std::uint32_t>(a);
    const auto j = static_cast<std::uint32_t>(c);
    arcs.push_back({i, j, e.w / (sqrt_deg[i] * sqrt_deg[j])});
    diag[i] += e.w / (sqrt_deg[i] * sqrt_deg[i]);
    diag[j] += e.w / (sqrt_deg[j] * sqrt_deg[j]);
  }
  auto apply_normalized = [&](std::span<const double> x, std::vector<double>& y) {
    for (std::size_t i = 0; i < k; ++i) y[i] = diag[i] * x[i];
    for (const LocalArc& a : arcs) {
      y[a.i] -= a.w * x[a.j];
      y[a.j] -= a.w * x[a.i];
    }
  };

  std::vector<double> null(sqrt_deg);
  const double nn = std::sqrt(dot(null, null));
  for (double& t : null) t /= nn;

  std::vector<double> x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = keyed_uniform(opts.seed, active[i]) - 0.5;
  remove_component(x, null);
  double norm = std::sqrt(dot(x, x));
  if (norm == 0.0) {
    x[0] = 1.0;
    remove_component(x, null);
    norm = std::sqrt(dot(x, x));
  }
  for (double& t : x) t /= norm;

  std::vector<double> nx(k), y(k);
  std::size_t cap = std::max<std::size_t>(1, opts.iteration_factor * k);
  if (opts.max_iterations > 0) cap = std::min(cap, opts.max_iterations);
  double rayleigh = 0.0;
  for (std::size_t it = 0; it < cap; ++it) {
    apply_normalized(x, nx);
    rayleigh = dot(x, nx);
    double r2 = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double d = nx[i] - rayleigh * x[i];
      r2 += d * d;
    }
    res.residual = std::sqrt(r2);
    res.iterations = it + 1;
    if (res.residual < opts.tolerance) {
      res.converged = true;
      break;
    }
    for (std::size_t i = 0; i < k; ++i) y[i] = 2.0 * x[i] - nx[i];
    remove_component(y, null);
    const double ny = std::sqrt(dot(y, y));
    if (ny == 0.0) break;
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / ny;
  }
  res.value = rayleigh;
  for (std::size_t i = 0; i < k; ++i) res.embedding[active[i]] = x[i] / sqrt_deg[i];
  return res;
}

SpectralEstimate normalized_lambda2(const WeightedGraph& g, const DegreeContext& ctx, const SpectralOptions& opts) {
  if (ctx.size() != g.num_vertices()) throw std::invalid_argument("normalized_lambda2: context size mismatch");
  const std::vector<VertexId> active = edge_bearing_vertices(g);
  for (VertexId v : active)
    if (ctx.degrees[v] <= 0)
      throw std::invalid_argument("normalized_lambda2: vertex " + std::to_string(v) + " has zero context degree");

  SpectralEstimate est;
  if (active.size() < 2) {
    est.disconnected = true;
    return est;
  }
  {
    UnionFind uf(g.num_vertices());
    for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
    const VertexId root = uf.find(active.front());
    for (VertexId v : active) {
      if (uf.find(v) != root) {
        est.disconnected = true;
        return est;
      }
    }
  }

  if (active.size() <= opts.dense_threshold) {
    const LocalIndex idx(g.num_vertices(), active);
    DenseMatrix m = local_laplacian(g, idx);
    const std::size_t k = idx.size();
    std::vector<double> inv_sqrt(k);
    for (std::size_t i = 0; i < k; ++i) inv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(ctx.degrees[active[i]]));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) *= inv_sqrt[i] * inv_sqrt[j];
    const SymmetricEigen eig = symmetric_eigen(m, true);
    est.lambda2 = std::clamp(eig.values[1], 0.0, 2.0);
    std::vector<double> vec(k);
    for (std::size_t i = 0; i < k; ++i) vec[i] = eig.vectors(i, 1);
    const std::vector<double> mv = m.multiply(vec);
    double r = 0.0;
    for (std::size_t i = 0; i < k; ++i) r += (mv[i] - eig.values[1] * vec[i]) * (mv[i] - eig.values[1] * vec[i]);
    est.residual = std::sqrt(r);
    est.method = SpectralMethod::kExactDense;
    return est;
  }

  const FiedlerResult f = approximate_fiedler(g, VertexSet(active), ctx, opts);
  est.lambda2 = std::clamp(f.value, 0.0, 2.0);
  est.residual = f.residual;
  est.method = SpectralMethod::kIterativeEstimate;
  return est;
}

ApproximationReport sigma_approximation(const WeightedGraph& g, const WeightedGraph& h) {
  if (g.num_vertices() != h.num_vertices()) throw std::invalid_argument("sigma_approximation: vertex counts differ");
  ApproximationReport rep;
  if (g == h) return rep;  // exactly 1, without rounding noise from the solver
  const auto comps_g = connected_components(g, g.edges());
  const auto comps_h = connected_components(h, h.edges());
  if (comps_g != comps_h) {
    rep.sigma = std::numeric_limits<double>::infinity();
    rep.pencil_min = 0.0;
    rep.pencil_max = std::numeric_limits<double>::infinity();
    return rep;
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const VertexSet& comp : comps_g) {
    if (comp.size() < 2) continue;
    const LocalIndex idx(g.num_vertices(), comp.ids());
    const DenseMatrix a = project_off_constants(local_laplacian(g, idx));
    const DenseMatrix b = project_off_constants(local_laplacian(h, idx));
    const std::vector<double> mu = generalized_eigenvalues(a, b);
    lo = std::min(lo, mu.front());
    hi = std::max(hi, mu.back());
  }
  if (hi == 0.0) return rep;  // no edges anywhere
  rep.pencil_min = lo;
  rep.pencil_max = hi;
  rep.sigma = lo > 0.0 ? std::max({hi, 1.0 / lo, 1.0}) : std::numeric_limits<double>::infinity();
  return rep;
}

double relative_norm(const WeightedGraph& g, const WeightedGraph& h, const DegreeContext& ctx) {
  if (g.num_vertices() != h.num_vertices()) throw std::invalid_argument("relative_norm: vertex counts differ");
  if (ctx.size() != g.num_vertices()) throw std::invalid_argument("relative_norm: context size mismatch");
  const std::vector<Edge> diff = weight_difference(g, h);
  if (diff.empty()) return 0.0;
  std::vector<char> touched(g.num_vertices(), 0);
  for (const Edge& e : diff) touched[e.u] = touched[e.v] = 1;
  std::vector<VertexId> ids;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!touched[v]) continue;
    if (ctx.degrees[v] <= 0)
      throw std::invalid_argument("relative_norm: vertex " + std::to_string(v) + " has zero context degree");
    ids.push_back(v);
  }
  const LocalIndex idx(g.num_vertices(), ids);
  DenseMatrix m(idx.size(), idx.size());
  for (const Edge& e : diff) {
    const auto i = static_cast<std::size_t>(idx.local[e.u]);
    const auto j = static_cast<std::size_t>(idx.local[e.v]);
    m(i, i) += e.w;
    m(j, j) += e.w;
    m(i, j) -= e.w;
    m(j, i) -= e.w;
  }
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      m(i, j) /= std::sqrt(static_cast<double>(ctx.degrees[ids[i]]) * static_cast<double>(ctx.degrees[ids[j]]));
  const auto vals = symmetric_eigen(m, false).values;
  return std::max(std::abs(vals.front()), std::abs(vals.back()));
}

double estimate_relative_norm(const WeightedGraph& g, const WeightedGraph& h, const DegreeContext& ctx,
                              std::size_t iterations, std::uint64_t seed) {
  if (g.num_vertices() != h.num_vertices()) throw std::invalid_argument("estimate_relative_norm: vertex counts differ");
  if (ctx.size() != g.num_vertices()) throw std::invalid_argument("estimate_relative_norm: context size mismatch");
  const std::vector<Edge> diff = weight_difference(g, h);
  if (diff.empty()) return 0.0;
  const std::size_t n = g.num_vertices();
  std::vector<double> inv_sqrt(n, 0.0);
  for (const Edge& e : diff) {
    for (VertexId x : {e.u, e.v}) {
      if (ctx.degrees[x] <= 0)
        throw std::invalid_argument("estimate_relative_norm: vertex " + std::to_string(x) + " has zero context degree");
      inv_sqrt[x] = 1.0 / std::sqrt(static_cast<double>(ctx.degrees[x]));
    }
  }
  // y = D^{-1/2} (L_G - L_H) D^{-1/2} x
  auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
    std::fill(y.begin(), y.end(), 0.0);
    for (const Edge& e : diff) {
      const double t = e.w * (x[e.u] * inv_sqrt[e.u] - x[e.v] * inv_sqrt[e.v]);
      y[e.u] += t * inv_sqrt[e.u];
      y[e.v] -= t * inv_sqrt[e.v];
    }
  };
  std::vector<double> x(n, 0.0), y(n, 0.0);
  for (VertexId v = 0; v < n; ++v)
    if (inv_sqrt[v] > 0.0) x[v] = keyed_uniform(seed, v) - 0.5;
  double norm = std::sqrt(dot(x, x));
  if (norm == 0.0) return 0.0;
  for (double& t : x) t /= norm;
  for (std::size_t it = 0; it < iterations; ++it) {
    apply(x, y);
    norm = std::sqrt(dot(y, y));
    if (norm == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  apply(x, y);
  return std::sqrt(dot(y, y));
}

double default_loewner_tolerance(const WeightedGraph& g, const WeightedGraph& h) {
  double dmax = 0.0;
  for (double d : g.weighted_degrees()) dmax = std::max(dmax, d);
  for (double d : h.weighted_degrees()) dmax = std::max(dmax, d);
  return 1e-8 * dmax;
}

bool loewner_leq(const WeightedGraph& g, const WeightedGraph& h, double tol) {
  if (g.num_vertices() != h.num_vertices()) throw std::invalid_argument("loewner_leq: vertex counts differ");
  std::vector<VertexId> ids;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.unweighted_degree(v) > 0 || h.unweighted_degree(v) > 0) ids.push_back(v);
  if (ids.empty()) return true;
  const LocalIndex idx(g.num_vertices(), ids);
  const DenseMatrix lg = local_laplacian(g, idx);
  DenseMatrix d = local_laplacian(h, idx);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) d(i, j) -= lg(i, j);
  return symmetric_eigen(d, false).values.front() >= -tol;
}

bool loewner_leq(const WeightedGraph& g, const WeightedGraph& h) {
  return loewner_leq(g, h, default_loewner_tolerance(g, h));
}

bool path_domination_check(VertexId u, VertexId v, std::span<const double> path_weights, const WeightedGraph& path,
                           double factor_scale) {
  const std::size_t k = path_weights.size();
  if (k == 0 || u == v) throw GraphError("path_domination_check: need a nonempty path between distinct vertices");
  if (u >= path.num_vertices() || v >= path.num_vertices()) throw GraphError("path_domination_check: bad endpoint");
  if (path.num_edges() != k) throw GraphError("path_domination_check: path has the wrong number of edges");
  std::vector<char> seen(path.num_vertices(), 0);
  VertexId cur = u;
  seen[cur] = 1;
  double inv_sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (!(path_weights[i] > 0.0)) throw GraphError("path_domination_check: weights must be positive");
    const auto nbrs = path.neighbors(cur);
    std::int64_t next = -1;
    std::size_t unvisited = 0;
    for (const auto& arc : nbrs) {
      if (seen[arc.to]) continue;
      ++unvisited;
      next = arc.edge;
    }
    if (unvisited != 1) throw GraphError("path_domination_check: graph is not a simple path from u");
    const Edge& e = path.edge(static_cast<std::size_t>(next));
    if (e.w != path_weights[i]) throw GraphError("path_domination_check: weight mismatch at step " + std::to_string(i));
    cur = e.u == cur ? e.v : e.u;
    seen[cur] = 1;
    inv_sum += 1.0 / path_weights[i];
  }
  if (cur != v) throw GraphError("path_domination_check: path does not end at v");

  const Edge single{u, v, 1.0};
  const WeightedGraph edge_graph(path.num_vertices(), std::span<const Edge>(&single, 1));
  return loewner_leq(edge_graph, path.scaled(factor_scale * inv_sum));
}

NormBoundCheck norm_bound_check(const WeightedGraph& g, const WeightedGraph& h, const DegreeContext& ctx, double tol) {
  NormBoundCheck c;
  c.lambda = normalized_lambda2(g, ctx).lambda2;
  c.rel_norm = relative_norm(g, h, ctx);
  c.sigma = sigma_approximation(g, h).sigma;
  c.applicable = c.rel_norm < c.lambda;
  if (c.applicable) {
    c.bound = c.lambda / (c.lambda - c.rel_norm);
    c.holds = c.sigma <= c.bound + tol;
  } else {
    c.bound = std::numeric_limits<double>::infinity();
  }
  return c;
}

}  // namespace specsparse
