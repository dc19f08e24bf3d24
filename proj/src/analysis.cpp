#include "d2c/analysis.hpp"

#include <bit>
#include <stdexcept>

namespace d2c {

std::vector<VertexPair> critical_pairs(const Graph& g, VertexPair e) {
  if (!g.has_edge(e.a, e.b))
    throw std::invalid_argument("critical_pairs: not an edge");
  Graph h = g;
  h.remove_edge(e.a, e.b);
  std::vector<VertexPair> out;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      bool close_in_g = g.has_edge(i, j) || (g.adj[i] & g.adj[j]) != 0;
      bool close_in_h = h.has_edge(i, j) || (h.adj[i] & h.adj[j]) != 0;
      if (close_in_g && !close_in_h) out.emplace_back(i, j);
    }
  return out;
}

namespace {

// An edge (a,b) is critical iff deleting it leaves some pair with neither an
// edge nor a common neighbour. Only pairs involving a or b can be affected.
bool edge_is_critical(const Graph& g, int a, int b) {
  Graph h = g;
  h.remove_edge(a, b);
  for (int x : {a, b}) {
    for (int y = 0; y < g.n; ++y) {
      if (y == x) continue;
      if (h.has_edge(x, y)) continue;
      if ((h.adj[x] & h.adj[y]) == 0) return true;
    }
  }
  return false;
}

}  // namespace

bool is_d2c(const Graph& g) {
  if (g.n < 2) return false;
  if (!has_diameter_at_most_2(g)) return false;
  // Diameter exactly 2: some pair must be non-adjacent.
  bool any_nonadjacent = false;
  for (int i = 0; i < g.n && !any_nonadjacent; ++i)
    if (g.adj[i] != (g.vertex_mask() & ~Graph::bit(i))) any_nonadjacent = true;
  if (!any_nonadjacent) return false;
  for (int i = 0; i < g.n; ++i) {
    std::uint64_t row = g.adj[i] & ~(Graph::bit(i + 1) - 1);
    while (row) {
      int j = std::countr_zero(row);
      row &= row - 1;
      if (!edge_is_critical(g, i, j)) return false;
    }
  }
  return true;
}

std::vector<VertexPair> dominating_edges(const Graph& g) {
  std::vector<VertexPair> out;
  const std::uint64_t all = g.vertex_mask();
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.has_edge(i, j) &&
          (g.closed_neighborhood(i) | g.closed_neighborhood(j)) == all)
        out.emplace_back(i, j);
  return out;
}

PartitionUV partition_uv(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.n || v >= g.n || !g.has_edge(u, v))
    throw std::invalid_argument("partition_uv: uv is not an edge");
  if ((g.closed_neighborhood(u) | g.closed_neighborhood(v)) != g.vertex_mask())
    throw std::invalid_argument("partition_uv: uv is not dominating");

  std::uint64_t p_uv = 0;
  for (const VertexPair& pr : critical_pairs(g, VertexPair(u, v))) {
    if (pr.a == u || pr.a == v) {
      if (pr.b != u && pr.b != v) p_uv |= Graph::bit(pr.b);
    } else if (pr.b == u || pr.b == v) {
      p_uv |= Graph::bit(pr.a);
    }
  }

  bool meets_nu = (p_uv & g.adj[u]) != 0;
  bool meets_nv = (p_uv & g.adj[v]) != 0;
  if (meets_nu && meets_nv)
    throw std::logic_error(
        "partition_uv: P_uv meets both N(u) and N(v); internal inconsistency");

  PartitionUV part;
  part.swapped = meets_nv;
  part.u = part.swapped ? v : u;
  part.v = part.swapped ? u : v;
  part.p_uv = p_uv;

  std::uint64_t rest = ~(Graph::bit(part.u) | Graph::bit(part.v));
  part.s_uv = g.adj[part.u] & g.adj[part.v] & ~p_uv & rest;
  part.s_u = g.adj[part.u] & ~g.adj[part.v] & ~p_uv & ~part.s_uv & rest;
  part.s_v = g.adj[part.v] & ~g.adj[part.u] & ~p_uv & ~part.s_uv & rest;
  return part;
}

StructureReport verify_structure(const Graph& g, const PartitionUV& part) {
  StructureReport rep;
  auto note = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };

  std::uint64_t nv_minus_u = g.adj[part.v] & ~Graph::bit(part.u);
  std::uint64_t p = part.p_uv;
  while (p) {
    int x = std::countr_zero(p);
    p &= p - 1;
    if (g.adj[x] & nv_minus_u) {
      rep.no_edge_puv_to_nv = false;
      note("edge between P_uv vertex " + std::to_string(x) +
           " and N(v) \\ {u}");
    }
  }

  if (part.p_uv == 0 && part.s_uv != 0) {
    rep.puv_empty_implies_suv_empty = false;
    note("P_uv empty but S_uv nonempty");
  }

  if (part.s_uv == 0) {
    for (auto [side, other] :
         {std::pair{part.s_u, part.s_v}, std::pair{part.s_v, part.s_u}}) {
      std::uint64_t m = side;
      while (m) {
        int x = std::countr_zero(m);
        m &= m - 1;
        if ((g.adj[x] & other) == 0) {
          rep.su_sv_neighbors = false;
          note("vertex " + std::to_string(x) +
               " has no neighbour on the other side");
        }
      }
    }
  }

  if (part.p_uv == 0) {
    for (auto [side, other] :
         {std::pair{part.s_u, part.s_v}, std::pair{part.s_v, part.s_u}}) {
      std::uint64_t m = side;
      while (m) {
        int x = std::countr_zero(m);
        m &= m - 1;
        if ((g.adj[x] & side) != 0 && (other & ~g.adj[x]) == 0) {
          rep.su_sv_non_neighbors = false;
          note("vertex " + std::to_string(x) +
               " has within-side neighbours but dominates the other side");
        }
      }
    }
  }

  return rep;
}

}  // namespace d2c
