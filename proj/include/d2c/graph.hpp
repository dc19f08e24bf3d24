#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace d2c {

constexpr int kMaxVertices = 64;
constexpr int kInfiniteDiameter = std::numeric_limits<int>::max();

/// An unordered pair of distinct vertices, stored with a < b.
struct VertexPair {
  int a = 0;
  int b = 0;

  VertexPair() = default;
  VertexPair(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

  bool operator==(const VertexPair&) const = default;
  auto operator<=>(const VertexPair&) const = default;
};

/// Simple undirected graph on at most 64 vertices.
/// Row i is the open neighbourhood N(i) as a bitmask.
struct Graph {
  int n = 0;
  std::array<std::uint64_t, kMaxVertices> adj{};

  Graph() = default;
  explicit Graph(int order) : n(order) {}

  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  bool has_edge(int i, int j) const { return (adj[i] >> j) & 1; }
  void add_edge(int i, int j) {
    adj[i] |= bit(j);
    adj[j] |= bit(i);
  }
  void remove_edge(int i, int j) {
    adj[i] &= ~bit(j);
    adj[j] &= ~bit(i);
  }

  std::uint64_t vertex_mask() const {
    return n == 64 ? ~std::uint64_t{0} : (bit(n) - 1);
  }
  std::uint64_t closed_neighborhood(int v) const { return adj[v] | bit(v); }

  int degree(int v) const;
  int max_degree() const;
  int edge_count() const;

  std::vector<VertexPair> edges() const;
  std::vector<VertexPair> non_edges() const;

  /// Subgraph induced by the vertices in `mask`, relabelled to 0..k-1 in
  /// ascending original order.
  Graph induced(std::uint64_t mask) const;

  /// Checks symmetry, irreflexivity and that no bit >= n is set.
  bool valid() const;

  bool operator==(const Graph& o) const;
};

// -- graph6 ------------------------------------------------------------

/// Encodes g in graph6 (no trailing newline). Supports 1 <= n <= 64.
std::string to_graph6(const Graph& g);

/// Parses one graph6 record; an optional ">>graph6<<" header and trailing
/// whitespace/newline are accepted. Throws std::invalid_argument with byte
/// position info on malformed input or n > 64.
Graph parse_graph6(std::string_view line);

// -- basic invariants --------------------------------------------------

/// Diameter via bit-parallel neighbourhood closure.
/// Returns kInfiniteDiameter for a disconnected graph, 0 for n == 1.
int diameter(const Graph& g);

/// True iff every pair of vertices is at distance <= 2.
bool has_diameter_at_most_2(const Graph& g);

Graph complement(const Graph& g);

/// Two-colourability; when `sides` is non-null and the graph is bipartite,
/// sides[0]/sides[1] receive the colour classes (per connected component,
/// class of vertex 0 of the component goes to sides[0]).
bool is_bipartite(const Graph& g, std::uint64_t sides[2] = nullptr);

bool is_complete_bipartite(const Graph& g);
bool is_balanced_complete_bipartite(const Graph& g);

/// Equivalence classes of N(x) = N(y) (open twins), each class as a mask,
/// ordered by smallest member.
std::vector<std::uint64_t> twin_classes(const Graph& g);

}  // namespace d2c
