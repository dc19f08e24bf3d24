#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "d2c/graph.hpp"

namespace d2c {

/// Witness that an edge is critical: removing `edge` puts `pair` at
/// distance >= 3 while it is at distance <= 2 in the full graph.
struct CriticalWitness {
  VertexPair edge;
  VertexPair pair;
};

/// All pairs {x,y} at distance <= 2 in g whose distance in g - e exceeds 2.
/// Throws std::invalid_argument if e is not an edge.
std::vector<VertexPair> critical_pairs(const Graph& g, VertexPair e);

/// Diameter 2 and every edge critical for some pair.
bool is_d2c(const Graph& g);

/// All edges uv with N[u] ∪ N[v] = V.
std::vector<VertexPair> dominating_edges(const Graph& g);

/// The structural partition around a dominating edge uv, normalised so
/// that P_uv ∩ N(v) = ∅ (u and v are swapped internally when needed).
struct PartitionUV {
  int u = -1;
  int v = -1;
  bool swapped = false;  // true when the roles of the input u,v were exchanged
  std::uint64_t p_uv = 0;
  std::uint64_t s_uv = 0;
  std::uint64_t s_u = 0;
  std::uint64_t s_v = 0;
};

/// Throws std::invalid_argument when uv is not a dominating edge of a
/// diameter-2 graph, std::logic_error when P_uv meets both N(u) and N(v).
PartitionUV partition_uv(const Graph& g, int u, int v);

/// Empirical check of the four structural properties of the partition:
/// (a) no edge between P_uv and N(v) \ {u};
/// (b) P_uv = ∅ implies S_uv = ∅;
/// (c) when S_uv = ∅, every vertex of S_u has a neighbour in S_v and
///     vice versa;
/// (d) when P_uv = ∅, every vertex of S_u with a neighbour in S_u has a
///     non-neighbour in S_v, and symmetrically.
struct StructureReport {
  bool no_edge_puv_to_nv = true;
  bool puv_empty_implies_suv_empty = true;
  bool su_sv_neighbors = true;
  bool su_sv_non_neighbors = true;
  std::vector<std::string> violations;

  bool all_ok() const {
    return no_edge_puv_to_nv && puv_empty_implies_suv_empty &&
           su_sv_neighbors && su_sv_non_neighbors;
  }
};

StructureReport verify_structure(const Graph& g, const PartitionUV& part);

}  // namespace d2c
