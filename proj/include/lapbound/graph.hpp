#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lapbound {

/// Malformed input text, files or command-line values.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A quantity is undefined for the given graph (e.g. D^{-1/2} with an
/// isolated vertex).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Vertex index. Internally 0-based; every text format is 1-based.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph. Immutable once built.
///
/// Edges are stored as (u, v) with u < v, sorted lexicographically, and every
/// neighbor list is sorted ascending, so two graphs with the same vertex count
/// and edge set compare equal.
class Graph {
public:
  Graph() = default;

  /// Builds from 0-based pairs. Duplicates collapse; self-loops and
  /// out-of-range endpoints throw InputError.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const { return neighbors_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_.at(v); }
  std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }
  std::vector<std::size_t> degrees() const;

  bool adjacent(Vertex u, Vertex v) const;
  bool has_isolated_vertex() const;
  /// First isolated vertex (0-based) or order() when there is none.
  Vertex first_isolated() const;
  bool connected() const;
  bool bipartite() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
};

/// Degree statistics. `avg_neighbor_degree[i]` is the mean degree of the
/// neighbors of vertex i and is only meaningful when `has_avg[i]` is set
/// (d_i > 0).
struct DegreeSummary {
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::size_t edge_count = 0;
  std::vector<double> avg_neighbor_degree;
  std::vector<bool> has_avg;
};

/// Parses the edge-list format: one "u v" pair per line with 1-based labels,
/// '#' comments, blank lines ignored, optional leading "n=<int>" directive.
/// LF and CRLF are both accepted.
Graph parse_edge_list(std::string_view text);
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Serializes with an "n=" directive so isolated trailing vertices survive.
std::string to_edge_list(const Graph& g);

/// |N_i ∩ N_j| for 0-based i != j.
std::size_t common_neighbors(const Graph& g, Vertex i, Vertex j);

DegreeSummary degree_summary(const Graph& g);

/// Deterministic 64-bit stream (splitmix64).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform();

private:
  std::uint64_t state_;
};

inline constexpr int kGnpRejectionBudget = 10000;

/// Connected G(n, p) sample by rejection; requires 2 <= n <= 64, 0 < p <= 1.
/// Throws InputError when the rejection budget runs out.
Graph generate_connected_gnp(std::size_t n, double p, std::uint64_t seed);

/// Same, drawing from a caller-owned stream.
Graph generate_connected_gnp(std::size_t n, double p, SplitMix64& rng);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t n);

} // namespace lapbound
