#pragma once

// Edge-list and Matrix Market reading and writing.
//
// Edge list: '#' starts a comment. If the first data line has exactly two
// tokens it is the header "n m", and exactly m edge lines must follow;
// without a header n is one more than the largest id. Edge lines are "u v"
// (weight 1) or "u v w", 0-indexed. Writers always emit the header, one
// canonical edge per line with u < v, and weights with 17 significant digits.
//
// Matrix Market: coordinate format, real/integer/pattern field, symmetric or
// general symmetry, 1-indexed. General files must be symmetric. Diagonal
// entries are rejected. Writers emit real symmetric, lower triangle.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "specsparse/graph.h"

namespace specsparse {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { kEdgeList, kMatrixMarket };

// ".mtx" selects Matrix Market; anything else is an edge list.
GraphFormat format_for_path(const std::filesystem::path& path);

WeightedGraph read_edgelist(std::istream& in, const std::string& source = "<stream>");
void write_edgelist(std::ostream& out, const WeightedGraph& g);

WeightedGraph read_matrix_market(std::istream& in, const std::string& source = "<stream>");
void write_matrix_market(std::ostream& out, const WeightedGraph& g);

WeightedGraph read_graph(const std::filesystem::path& path, GraphFormat format);
WeightedGraph read_graph(const std::filesystem::path& path);

// Writes to a temporary sibling file, then renames it over `path`.
void write_graph(const std::filesystem::path& path, const WeightedGraph& g, GraphFormat format);
void write_graph(const std::filesystem::path& path, const WeightedGraph& g);

void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

// "%.17g"
std::string format_double(double x);

}  // namespace specsparse
