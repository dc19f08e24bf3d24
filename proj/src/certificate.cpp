#include "d2c/certificate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "d2c/canonical.hpp"

namespace d2c {

namespace {

std::uint64_t mask_of(const std::vector<int>& vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= Graph::bit(v);
  return m;
}

int count_free_incident(const Assignment& asg, std::uint64_t vertices) {
  int c = 0;
  for (const VertexPair& ne : asg.free_nonedges)
    if ((Graph::bit(ne.a) | Graph::bit(ne.b)) & vertices) ++c;
  return c;
}

Graph h5_graph() {
  Graph g(6);
  for (auto [a, b] : {std::pair{0, 2}, {0, 3}, {0, 4}, {0, 5},
                      {1, 4}, {1, 5}, {2, 4}, {3, 5}})
    g.add_edge(a, b);
  return g;
}

}  // namespace

XYSplit build_xy(const PartitionUV& part) {
  XYSplit split;
  split.x_side = Graph::bit(part.v) | part.s_u | part.p_uv | part.s_uv;
  split.y_side = Graph::bit(part.u) | part.s_v;
  return split;
}

std::uint64_t Assignment::free_incidence() const {
  std::uint64_t m = 0;
  for (const VertexPair& ne : free_nonedges)
    m |= Graph::bit(ne.a) | Graph::bit(ne.b);
  return m;
}

bool Assignment::nonedge_is_free(VertexPair ne) const {
  return std::find(free_nonedges.begin(), free_nonedges.end(), ne) !=
         free_nonedges.end();
}

const AssignmentEntry* Assignment::preimage(VertexPair ne) const {
  for (const AssignmentEntry& e : map)
    if (e.image() == ne) return &e;
  return nullptr;
}

Assignment build_assignment(const Graph& g, const XYSplit& split) {
  Assignment asg;
  std::vector<VertexPair> images;
  for (int a = 0; a < g.n; ++a) {
    for (int b = a + 1; b < g.n; ++b) {
      if (!g.has_edge(a, b)) continue;
      std::uint64_t edge_bits = Graph::bit(a) | Graph::bit(b);
      std::uint64_t opposite;
      if ((edge_bits & ~split.x_side) == 0)
        opposite = split.y_side;
      else if ((edge_bits & ~split.y_side) == 0)
        opposite = split.x_side;
      else
        continue;  // cross edge, not in the domain of f

      AssignmentEntry chosen;
      for (const VertexPair& pr : critical_pairs(g, VertexPair(a, b))) {
        int kept, witness;
        bool pa = pr.a == a || pr.a == b;
        bool pb = pr.b == a || pr.b == b;
        if (pa == pb) continue;  // need exactly one endpoint of the edge
        kept = pa ? pr.a : pr.b;
        witness = pa ? pr.b : pr.a;
        if (!((opposite >> witness) & 1)) continue;
        if (chosen.c < 0 || std::pair(kept, witness) <
                                std::pair(chosen.b, chosen.c)) {
          chosen.b = kept;
          chosen.c = witness;
        }
      }
      if (chosen.c < 0)
        throw std::logic_error(
            "build_assignment: within-side edge with no eligible witness");
      chosen.edge = VertexPair(a, b);
      asg.map.push_back(chosen);
      images.push_back(chosen.image());
    }
  }

  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    throw std::logic_error("build_assignment: assignment is not injective");

  for (int x = 0; x < g.n; ++x) {
    if (!((split.x_side >> x) & 1)) continue;
    std::uint64_t ys = split.y_side & ~g.adj[x];
    while (ys) {
      int y = std::countr_zero(ys);
      ys &= ys - 1;
      VertexPair ne(x, y);
      if (!std::binary_search(images.begin(), images.end(), ne))
        asg.free_nonedges.push_back(ne);
    }
  }
  std::sort(asg.free_nonedges.begin(), asg.free_nonedges.end());
  return asg;
}

EdgeIdentityVerdict verify_edge_identity(const Graph& g, const XYSplit& split,
                                         const Assignment& asg) {
  EdgeIdentityVerdict v;
  v.m = g.edge_count();
  v.x_size = std::popcount(split.x_side);
  v.y_size = std::popcount(split.y_side);
  v.free_count = static_cast<int>(asg.free_nonedges.size());
  v.product_identity = v.m == v.x_size * v.y_size - v.free_count;
  int delta = std::abs(v.x_size - v.y_size);
  v.floor_identity = v.m == (g.n * g.n - delta * delta) / 4 - v.free_count;
  return v;
}

std::uint64_t FOrientation::out_neighbors(int v) const {
  std::uint64_t m = 0;
  for (auto [a, b] : arcs)
    if (a == v) m |= Graph::bit(b);
  return m;
}

std::uint64_t FOrientation::in_neighbors(int v) const {
  std::uint64_t m = 0;
  for (auto [a, b] : arcs)
    if (b == v) m |= Graph::bit(a);
  return m;
}

FOrientation build_f_orientation(const Graph& g, const PartitionUV& part,
                                 const Assignment& asg) {
  (void)g;
  FOrientation o;
  o.s_u = part.s_u;
  o.s_v = part.s_v;
  for (const AssignmentEntry& e : asg.map) {
    std::uint64_t bits = Graph::bit(e.edge.a) | Graph::bit(e.edge.b);
    if ((bits & ~part.s_u) != 0 && (bits & ~part.s_v) != 0) continue;
    int to = e.b;
    int from = e.edge.a == to ? e.edge.b : e.edge.a;
    o.arcs.emplace_back(from, to);
  }
  return o;
}

namespace {

struct ArcGraph {
  std::uint64_t verts = 0;
  std::array<std::uint64_t, kMaxVertices> out{};
  std::array<std::uint64_t, kMaxVertices> in{};

  explicit ArcGraph(const FOrientation& o) {
    verts = o.s_u | o.s_v;
    for (auto [a, b] : o.arcs) {
      out[a] |= Graph::bit(b);
      in[b] |= Graph::bit(a);
    }
  }
  std::uint64_t und(int v) const { return out[v] | in[v]; }
};

void cycle_dfs(const ArcGraph& ag, int start, int v, std::uint64_t on_path,
               std::vector<int>& path, std::vector<std::vector<int>>& cycles) {
  std::uint64_t nxt = ag.out[v];
  while (nxt) {
    int w = std::countr_zero(nxt);
    nxt &= nxt - 1;
    if (w == start && path.size() >= 2) {
      cycles.push_back(path);
    } else if (w > start && !((on_path >> w) & 1)) {
      path.push_back(w);
      cycle_dfs(ag, start, w, on_path | Graph::bit(w), path, cycles);
      path.pop_back();
    }
  }
}

}  // namespace

OrientationFeatures orientation_features(const FOrientation& o) {
  OrientationFeatures feats;
  ArcGraph ag(o);

  std::uint64_t vs = ag.verts;
  while (vs) {
    int v = std::countr_zero(vs);
    vs &= vs - 1;
    if (ag.in[v] == 0 && ag.out[v] != 0) feats.sources.push_back(v);
    if (ag.out[v] == 0 && ag.in[v] != 0) feats.sinks.push_back(v);
  }

  // Directed cycles, identified by their smallest vertex.
  vs = ag.verts;
  while (vs) {
    int s = std::countr_zero(vs);
    vs &= vs - 1;
    std::vector<int> path{s};
    cycle_dfs(ag, s, s, Graph::bit(s), path, feats.directed_cycles);
  }

  vs = ag.verts;
  while (vs) {
    int x = std::countr_zero(vs);
    vs &= vs - 1;
    std::uint64_t ys = ag.out[x];
    while (ys) {
      int y = std::countr_zero(ys);
      ys &= ys - 1;
      std::uint64_t zs = ag.out[x] & ag.out[y];
      while (zs) {
        int z = std::countr_zero(zs);
        zs &= zs - 1;
        feats.transitive_triangles.push_back({x, y, z});
      }
    }
  }

  // Weak components with at least one arc, tracked per side (arcs never
  // cross sides). Diameters are measured inside the component.
  std::uint64_t seen = 0;
  vs = ag.verts;
  while (vs) {
    int s = std::countr_zero(vs);
    vs &= vs - 1;
    if ((seen >> s) & 1) continue;
    if (ag.und(s) == 0) {
      seen |= Graph::bit(s);
      continue;
    }
    std::uint64_t comp = Graph::bit(s);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t grow = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        grow |= ag.und(v);
      }
      frontier = grow & ~comp;
      comp |= grow;
    }
    seen |= comp;

    OrientedComponent oc;
    Graph und(0);
    und.n = 0;
    int map[kMaxVertices];
    std::uint64_t c = comp;
    while (c) {
      int v = std::countr_zero(c);
      c &= c - 1;
      map[v] = und.n++;
      oc.vertices.push_back(v);
    }
    Graph dir(und.n);
    und.n = static_cast<int>(oc.vertices.size());
    for (auto [a, b] : o.arcs) {
      if (!((comp >> a) & 1)) continue;
      und.add_edge(map[a], map[b]);
      dir.adj[map[a]] |= Graph::bit(map[b]);  // directed adjacency
      ++oc.arc_count;
    }
    oc.underlying_diameter = diameter(und);
    // Directed eccentricities via closure over out-neighbourhoods.
    int ddiam = 0;
    for (int v = 0; v < und.n && ddiam != kInfiniteDiameter; ++v) {
      std::uint64_t reach = Graph::bit(v);
      int dist = 0;
      while (reach != (Graph::bit(und.n) - 1)) {
        std::uint64_t grown = reach;
        std::uint64_t f = reach;
        while (f) {
          int w = std::countr_zero(f);
          f &= f - 1;
          grown |= dir.adj[w];
        }
        if (grown == reach) {
          dist = kInfiniteDiameter;
          break;
        }
        reach = grown;
        ++dist;
      }
      ddiam = dist == kInfiniteDiameter ? kInfiniteDiameter
                                        : std::max(ddiam, dist);
    }
    oc.directed_diameter = ddiam;
    feats.components.push_back(std::move(oc));
  }

  return feats;
}

CertificateBound certificate_bound(const Graph& g, int u, int v) {
  PartitionUV part = partition_uv(g, u, v);
  if (part.p_uv != 0)
    throw std::invalid_argument(
        "certificate_bound: P_uv is nonempty; use verify_puv_matching");
  XYSplit split = build_xy(part);
  Assignment asg = build_assignment(g, split);
  FOrientation o = build_f_orientation(g, part, asg);
  OrientationFeatures feats = orientation_features(o);
  ArcGraph ag(o);

  CertificateBound bound;
  for (std::uint64_t side : {part.s_u, part.s_v}) {
    // Theorem-style disjoint packing inside this side.
    std::vector<std::vector<int>> cycles;
    for (const auto& c : feats.directed_cycles)
      if ((mask_of(c) & ~side) == 0) cycles.push_back(c);
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });

    std::uint64_t used = 0;
    std::vector<std::vector<int>> picked_cycles, picked_structs;
    int total = 0;
    for (const auto& c : cycles) {
      std::uint64_t m = mask_of(c);
      if (m & used) continue;
      used |= m;
      total += static_cast<int>(c.size());
      picked_cycles.push_back(c);
    }
    for (const auto& t : feats.transitive_triangles) {
      std::uint64_t m = Graph::bit(t[0]) | Graph::bit(t[1]) | Graph::bit(t[2]);
      if ((m & ~side) != 0 || (m & used)) continue;
      used |= m;
      total += 1;
      picked_structs.push_back({t[0], t[1], t[2]});
    }
    for (int x : feats.sinks) {
      if (!((side >> x) & 1)) continue;
      std::uint64_t m = ag.in[x] | Graph::bit(x);
      if (m & used) continue;
      used |= m;
      total += 1;
      std::vector<int> star;
      std::uint64_t mm = m;
      while (mm) {
        star.push_back(std::countr_zero(mm));
        mm &= mm - 1;
      }
      picked_structs.push_back(std::move(star));
    }
    for (int x : feats.sources) {
      if (!((side >> x) & 1)) continue;
      std::uint64_t m = ag.out[x] | Graph::bit(x);
      if (m & used) continue;
      used |= m;
      total += 1;
      std::vector<int> star;
      std::uint64_t mm = m;
      while (mm) {
        star.push_back(std::countr_zero(mm));
        mm &= mm - 1;
      }
      picked_structs.push_back(std::move(star));
    }
    if (total > bound.disjoint_bound) {
      bound.disjoint_bound = total;
      bound.cycles = std::move(picked_cycles);
      bound.structures = std::move(picked_structs);
    }

    int c1 = 0, c2 = 0;
    for (const auto& comp : feats.components) {
      if (!((side >> comp.vertices[0]) & 1)) continue;
      if (comp.underlying_diameter >= 3)
        ++c2;
      else
        ++c1;
    }
    if (c1 + 2 * c2 > bound.component_bound) {
      bound.component_bound = c1 + 2 * c2;
      bound.c1 = c1;
      bound.c2 = c2;
    }
  }
  bound.implied_bound = std::max(bound.disjoint_bound, bound.component_bound);
  return bound;
}

OrientationLemmaReport verify_orientation_lemmas(const Graph& g,
                                                 const PartitionUV& part,
                                                 const Assignment& asg,
                                                 const FOrientation& o) {
  OrientationLemmaReport rep;
  auto note = [&](std::string s) { rep.violations.push_back(std::move(s)); };
  ArcGraph ag(o);
  std::uint64_t free_inc = asg.free_incidence();
  OrientationFeatures feats = orientation_features(o);

  // Arc neighbourhood step: under its hypothesis, N(x) on the opposite side
  // equals N(y) there plus exactly one extra vertex.
  for (auto [x, y] : o.arcs) {
    if ((free_inc >> x) & 1 || (free_inc >> y) & 1) continue;
    std::uint64_t opp = ((part.s_u >> x) & 1) ? part.s_v : part.s_u;
    std::uint64_t nx = g.adj[x] & opp, ny = g.adj[y] & opp;
    if ((ny & ~nx) != 0 || std::popcount(nx & ~ny) != 1) {
      rep.arc_neighborhood_ok = false;
      note("arc " + std::to_string(x) + "->" + std::to_string(y) +
           ": opposite-side neighbourhoods differ by more than one vertex");
    }
  }

  for (const auto& c : feats.directed_cycles) {
    if (count_free_incident(asg, mask_of(c)) < static_cast<int>(c.size())) {
      rep.directed_cycle_ok = false;
      note("directed cycle of length " + std::to_string(c.size()) +
           " with too few incident free non-edges");
    }
  }

  for (const auto& t : feats.transitive_triangles) {
    if (count_free_incident(asg, Graph::bit(t[0])) < 1) {
      rep.transitive_triangle_ok = false;
      note("transitive triangle source " + std::to_string(t[0]) +
           " without incident free non-edge");
    }
  }

  for (int x : feats.sinks) {
    if (count_free_incident(asg, ag.in[x] | Graph::bit(x)) < 1) {
      rep.sink_ok = false;
      note("sink " + std::to_string(x) +
           " with no free non-edge incident to N^-[x]");
    }
  }
  for (int x : feats.sources) {
    if (count_free_incident(asg, ag.out[x] | Graph::bit(x)) < 1) {
      rep.source_ok = false;
      note("source " + std::to_string(x) +
           " with no free non-edge incident to N^+[x]");
    }
  }

  return rep;
}

PuvMatchingReport verify_puv_matching(const Graph& g, const PartitionUV& part,
                                      const Assignment& asg) {
  PuvMatchingReport rep;
  auto note = [&](std::string s) { rep.violations.push_back(std::move(s)); };

  int free_count = static_cast<int>(asg.free_nonedges.size());
  if (std::popcount(part.s_u) < std::popcount(part.s_v) - free_count) {
    rep.size_inequality = false;
    note("|S_u| < |S_v| - free(f)");
  }

  std::uint64_t ps = part.p_uv;
  while (ps) {
    int p = std::countr_zero(ps);
    ps &= ps - 1;

    // S_v(p) with the matched partner m(x) for each member.
    std::vector<std::pair<int, int>> matched;  // (x in S_v(p), m(x) in S_u(p))
    std::uint64_t sv = part.s_v;
    bool well_defined = true;
    while (sv) {
      int x = std::countr_zero(sv);
      sv &= sv - 1;
      if (g.has_edge(p, x)) continue;  // cannot happen for a valid partition
      VertexPair ne(p, x);
      if (asg.nonedge_is_free(ne)) continue;
      const AssignmentEntry* e = asg.preimage(ne);
      if (e == nullptr) continue;  // unreachable: not free means has preimage
      if (e->edge.a != p && e->edge.b != p) {
        well_defined = false;
        note("preimage of non-edge {p,x} does not contain p (p=" +
             std::to_string(p) + ", x=" + std::to_string(x) + ")");
        continue;
      }
      int q = e->edge.a == p ? e->edge.b : e->edge.a;
      if (!((part.s_u >> q) & 1) || !g.has_edge(p, q)) {
        well_defined = false;
        note("matched vertex not in S_u ∩ N(p) for p=" + std::to_string(p));
        continue;
      }
      matched.emplace_back(x, q);
    }

    for (std::size_t i = 0; i < matched.size(); ++i)
      for (std::size_t j = i + 1; j < matched.size(); ++j)
        if (matched[i].second == matched[j].second) {
          well_defined = false;
          note("matching not injective at p=" + std::to_string(p));
        }
    if (!well_defined) rep.matching_well_defined = false;

    for (const auto& [x, mx] : matched)
      for (const auto& [y, my] : matched) {
        if (x == y) continue;
        if (g.has_edge(mx, y)) {
          rep.only_matched_edges = false;
          note("unexpected edge between S_u(p) and S_v(p) at p=" +
               std::to_string(p));
        }
      }

    for (std::size_t i = 0; i < matched.size(); ++i)
      for (std::size_t j = i + 1; j < matched.size(); ++j) {
        auto [x, mx] = matched[i];
        auto [y, my] = matched[j];
        bool exy = g.has_edge(x, y);
        bool emm = g.has_edge(mx, my);
        if (!exy && !emm) continue;
        if (g.has_edge(x, my) || g.has_edge(y, mx)) continue;  // (b) violation
        bool f1 = asg.nonedge_is_free(VertexPair(x, my));
        bool f2 = asg.nonedge_is_free(VertexPair(y, mx));
        if (!(f1 || f2) || (exy && emm && !(f1 && f2))) {
          rep.free_edge_implications = false;
          note("edge inside S_u(p)/S_v(p) without the implied free "
               "non-edges at p=" + std::to_string(p));
        }
      }
  }

  return rep;
}

BoundVerdicts bound_verdicts(const Graph& g) {
  BoundVerdicts v;
  v.n = g.n;
  v.m = g.edge_count();
  int ms = g.n * g.n / 4;
  v.murty_simon_equality = v.m == ms;
  v.murty_simon_ok =
      v.m < ms || (v.murty_simon_equality && is_balanced_complete_bipartite(g));
  v.strengthened_attained = v.m == (g.n - 1) * (g.n - 1) / 4 + 1;
  bool dominating = !dominating_edges(g).empty();
  bool h5 = g.n == 6 && are_isomorphic(g, h5_graph());
  v.theorem4_applicable = !is_bipartite(g) && dominating && !h5;
  v.theorem4_ok = !v.theorem4_applicable || v.m <= ms - 2;
  return v;
}

}  // namespace d2c
