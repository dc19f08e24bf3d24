#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "d2c/analysis.hpp"
#include "d2c/graph.hpp"

namespace d2c {

/// Two-sided vertex split X = {v} ∪ S_u ∪ P_uv ∪ S_uv, Y = {u} ∪ S_v.
struct XYSplit {
  std::uint64_t x_side = 0;
  std::uint64_t y_side = 0;
};

XYSplit build_xy(const PartitionUV& part);

/// One entry of the edge-to-non-edge assignment: the within-side edge,
/// the endpoint b kept by the image, and the opposite-side witness c.
struct AssignmentEntry {
  VertexPair edge;
  int b = -1;
  int c = -1;

  VertexPair image() const { return VertexPair(b, c); }
};

/// Injective assignment of every edge inside X (and inside Y) to a cross
/// non-edge, together with the cross non-edges left without preimage.
struct Assignment {
  std::vector<AssignmentEntry> map;
  std::vector<VertexPair> free_nonedges;

  /// Mask of vertices incident with at least one free non-edge.
  std::uint64_t free_incidence() const;
  bool nonedge_is_free(VertexPair ne) const;
  /// Entry whose image equals ne, or nullptr.
  const AssignmentEntry* preimage(VertexPair ne) const;
};

/// Builds f by choosing, for each within-side edge, the lexicographically
/// smallest eligible witness pair (b, c). Throws std::logic_error if some
/// within-side edge has no eligible witness or if the built map is not
/// injective (either would contradict the certificate construction).
Assignment build_assignment(const Graph& g, const XYSplit& split);

/// The exact edge-count identity implied by the assignment:
/// m = |X||Y| - free(f) and m = floor((n^2 - (|X|-|Y|)^2)/4) - free(f).
struct EdgeIdentityVerdict {
  int m = 0;
  int x_size = 0;
  int y_size = 0;
  int free_count = 0;
  bool product_identity = false;
  bool floor_identity = false;

  bool holds() const { return product_identity && floor_identity; }
};

EdgeIdentityVerdict verify_edge_identity(const Graph& g, const XYSplit& split,
                                         const Assignment& asg);

/// Orientation of the edges inside S_u and inside S_v: ab becomes the arc
/// a->b when f(ab) is a non-edge at b.
struct FOrientation {
  std::uint64_t s_u = 0;
  std::uint64_t s_v = 0;
  std::vector<std::pair<int, int>> arcs;  // (from, to)

  std::uint64_t out_neighbors(int v) const;
  std::uint64_t in_neighbors(int v) const;
};

FOrientation build_f_orientation(const Graph& g, const PartitionUV& part,
                                 const Assignment& asg);

struct OrientedComponent {
  std::vector<int> vertices;
  int arc_count = 0;
  int underlying_diameter = 0;  // diameter of the undirected induced subgraph
  int directed_diameter = 0;    // kInfiniteDiameter when not strongly spanning
};

struct OrientationFeatures {
  std::vector<int> sources;  // N^- empty, N^+ nonempty
  std::vector<int> sinks;    // N^+ empty, N^- nonempty
  std::vector<std::vector<int>> directed_cycles;  // cyclic vertex order
  std::vector<std::array<int, 3>> transitive_triangles;  // source, mid, sink
  std::vector<OrientedComponent> components;  // weak, per side, arc_count > 0
};

OrientationFeatures orientation_features(const FOrientation& o);

/// Disjoint certificate structures and the edge-count guarantees they give.
struct CertificateBound {
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> structures;  // triangles and sink/source stars
  int c1 = 0;  // nontrivial weak components of underlying diameter 2 (best side)
  int c2 = 0;  // of underlying diameter >= 3 (best side)
  int disjoint_bound = 0;   // best per-side sum |C| over cycles plus |S|
  int component_bound = 0;  // best per-side c1 + 2*c2
  int implied_bound = 0;    // max of the two
};

/// Requires P_uv = ∅ (throws std::invalid_argument otherwise, pointing to
/// the P_uv matching path). Greedy selection: directed cycles by descending
/// length, then transitive triangles, then sink/source closed-neighbourhood
/// stars; each side is packed separately and the better side is kept.
CertificateBound certificate_bound(const Graph& g, int u, int v);

/// Literal verification of the orientation lemmas on every instance present
/// in the graph. Only meaningful when P_uv = ∅.
struct OrientationLemmaReport {
  bool arc_neighborhood_ok = true;    // arcs with no free non-edge at ends
  bool directed_cycle_ok = true;      // >= |C| free non-edges incident to C
  bool transitive_triangle_ok = true; // free non-edge at the triangle source
  bool sink_ok = true;                // free non-edge incident with N^-[x]
  bool source_ok = true;              // free non-edge incident with N^+[x]
  std::vector<std::string> violations;

  bool all_ok() const {
    return arc_neighborhood_ok && directed_cycle_ok && transitive_triangle_ok &&
           sink_ok && source_ok;
  }
};

OrientationLemmaReport verify_orientation_lemmas(const Graph& g,
                                                 const PartitionUV& part,
                                                 const Assignment& asg,
                                                 const FOrientation& o);

/// Per-vertex-of-P_uv matching checks. Only meaningful when P_uv ≠ ∅.
struct PuvMatchingReport {
  bool matching_well_defined = true;  // m(x) exists in S_u ∩ N(p), injective
  bool only_matched_edges = true;     // S_u(p) x S_v(p) edges are x–m(x)
  bool free_edge_implications = true; // edges inside S_u(p)/S_v(p) force frees
  bool size_inequality = true;        // |S_u| >= |S_v| - free(f)
  std::vector<std::string> violations;

  bool all_ok() const {
    return matching_well_defined && only_matched_edges &&
           free_edge_implications && size_inequality;
  }
};

PuvMatchingReport verify_puv_matching(const Graph& g, const PartitionUV& part,
                                      const Assignment& asg);

/// Classification against the three edge-count bounds.
struct BoundVerdicts {
  int n = 0;
  int m = 0;
  bool murty_simon_ok = false;       // m <= floor(n^2/4), equality only
                                     // on balanced complete bipartite
  bool murty_simon_equality = false;
  bool strengthened_attained = false;  // m == floor((n-1)^2/4) + 1
  bool theorem4_applicable = false;    // non-bipartite, dominating edge, not H5
  bool theorem4_ok = true;             // m <= floor(n^2/4) - 2 when applicable
};

BoundVerdicts bound_verdicts(const Graph& g);

}  // namespace d2c
