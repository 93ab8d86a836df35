#include "specsparse/io.h"

#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace specsparse {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
  throw IoError(source + ":" + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_uint(const std::string& tok, const std::string& source, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(source, line, "expected a nonnegative integer, got '" + tok + "'");
  return v;
}

double parse_double(const std::string& tok, const std::string& source, std::size_t line) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || errno == ERANGE) fail(source, line, "expected a number, got '" + tok + "'");
  return v;
}

WeightedGraph build_checked(std::size_t n, const std::vector<Edge>& edges, const std::string& source) {
  try {
    return WeightedGraph(n, edges);
  } catch (const GraphError& e) {
    throw IoError(source + ": " + e.what());
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".mtx" ? GraphFormat::kMatrixMarket : GraphFormat::kEdgeList;
}

WeightedGraph read_edgelist(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::uint64_t max_id = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (first) {
      first = false;
      if (tok.size() == 2) {
        have_header = true;
        n = parse_uint(tok[0], source, lineno);
        m = parse_uint(tok[1], source, lineno);
        continue;
      }
    }
    if (tok.size() != 2 && tok.size() != 3) fail(source, lineno, "expected 'u v' or 'u v w'");
    const std::uint64_t u = parse_uint(tok[0], source, lineno);
    const std::uint64_t v = parse_uint(tok[1], source, lineno);
    const double w = tok.size() == 3 ? parse_double(tok[2], source, lineno) : 1.0;
    if (u > 0xffffffffULL || v > 0xffffffffULL) fail(source, lineno, "vertex id too large");
    if (have_header && (u >= n || v >= n)) fail(source, lineno, "vertex id out of range for n = " + std::to_string(n));
    if (u == v) fail(source, lineno, "self-loop");
    if (!(w > 0.0) || !std::isfinite(w)) fail(source, lineno, "weight must be positive and finite");
    max_id = std::max({max_id, u, v});
    edges.push_back(Edge{static_cast<VertexId>(u), static_cast<VertexId>(v), w});
  }
  if (have_header) {
    if (edges.size() != m)
      throw IoError(source + ": header announces " + std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                    " were read");
  } else {
    n = edges.empty() ? 0 : max_id + 1;
  }
  return build_checked(static_cast<std::size_t>(n), edges, source);
}

void write_edgelist(std::ostream& out, const WeightedGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_double(e.w) << '\n';
}

WeightedGraph read_matrix_market(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw IoError(source + ": empty file");
  ++lineno;
  auto head = tokenize(line);
  for (auto& t : head) std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (head.size() != 5 || head[0] != "%%matrixmarket" || head[1] != "matrix" || head[2] != "coordinate")
    fail(source, lineno, "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'");
  const std::string& field = head[3];
  const std::string& symmetry = head[4];
  if (field != "real" && field != "integer" && field != "pattern") fail(source, lineno, "unsupported field '" + field + "'");
  if (symmetry != "symmetric" && symmetry != "general") fail(source, lineno, "unsupported symmetry '" + symmetry + "'");
  const bool pattern = field == "pattern";

  bool have_size = false;
  std::uint64_t rows = 0, cols = 0, nnz = 0;
  std::vector<Edge> edges;
  std::map<std::pair<VertexId, VertexId>, double> general;
  std::size_t entries = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0][0] == '%') continue;
    if (!have_size) {
      if (tok.size() != 3) fail(source, lineno, "expected 'rows cols entries'");
      rows = parse_uint(tok[0], source, lineno);
      cols = parse_uint(tok[1], source, lineno);
      nnz = parse_uint(tok[2], source, lineno);
      if (rows != cols) fail(source, lineno, "matrix is not square");
      have_size = true;
      continue;
    }
    if (tok.size() != (pattern ? 2U : 3U)) fail(source, lineno, pattern ? "expected 'i j'" : "expected 'i j value'");
    const std::uint64_t i = parse_uint(tok[0], source, lineno);
    const std::uint64_t j = parse_uint(tok[1], source, lineno);
    if (i < 1 || j < 1 || i > rows || j > cols) fail(source, lineno, "index out of range");
    if (i == j) fail(source, lineno, "diagonal entries are not allowed");
    const double w = pattern ? 1.0 : parse_double(tok[2], source, lineno);
    if (!(w > 0.0) || !std::isfinite(w)) fail(source, lineno, "weight must be positive and finite");
    ++entries;
    const auto a = static_cast<VertexId>(i - 1);
    const auto b = static_cast<VertexId>(j - 1);
    if (symmetry == "symmetric") {
      edges.push_back(Edge{a, b, w});
    } else if (!general.emplace(std::make_pair(a, b), w).second) {
      fail(source, lineno, "duplicate entry");
    }
  }
  if (!have_size) throw IoError(source + ": missing size line");
  if (entries != nnz)
    throw IoError(source + ": size line announces " + std::to_string(nnz) + " entries but " + std::to_string(entries) +
                  " were read");
  if (symmetry == "general") {
    for (const auto& [key, w] : general) {
      const auto it = general.find({key.second, key.first});
      if (it == general.end() || it->second != w)
        throw IoError(source + ": general matrix is not symmetric at (" + std::to_string(key.first + 1) + ", " +
                      std::to_string(key.second + 1) + ")");
      if (key.first < key.second) edges.push_back(Edge{key.first, key.second, w});
    }
  }
  return build_checked(static_cast<std::size_t>(rows), edges, source);
}

void write_matrix_market(std::ostream& out, const WeightedGraph& g) {
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  out << g.num_vertices() << ' ' << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << (e.v + 1) << ' ' << (e.u + 1) << ' ' << format_double(e.w) << '\n';
}

WeightedGraph read_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return format == GraphFormat::kMatrixMarket ? read_matrix_market(in, path.string()) : read_edgelist(in, path.string());
}

WeightedGraph read_graph(const std::filesystem::path& path) { return read_graph(path, format_for_path(path)); }

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

void write_graph(const std::filesystem::path& path, const WeightedGraph& g, GraphFormat format) {
  std::ostringstream ss;
  if (format == GraphFormat::kMatrixMarket) {
    write_matrix_market(ss, g);
  } else {
    write_edgelist(ss, g);
  }
  write_file_atomic(path, ss.str());
}

void write_graph(const std::filesystem::path& path, const WeightedGraph& g) {
  write_graph(path, g, format_for_path(path));
}

}  // namespace specsparse
