#pragma once

#include <string>
#include <vector>

#include "d2c/graph.hpp"

namespace d2c {

// -- complete bipartite ------------------------------------------------

/// K_{a,b} with side A = {0..a-1}, side B = {a..a+b-1}. Requires a,b >= 1.
Graph complete_bipartite(int a, int b);

// -- expanded 5-cycles (C5+) -------------------------------------------

/// Class sizes for the three consecutive expanded classes X1, X2, X3 of a
/// 5-cycle; the remaining two cycle vertices stay plain, so n = s1+s2+s3+2.
struct C5PlusSpec {
  int s1 = 1;
  int s2 = 1;
  int s3 = 1;

  int order() const { return s1 + s2 + s3 + 2; }
  /// The middle class size condition: s2 ∈ {⌊(n−3)/2⌋, ⌈(n−3)/2⌉}.
  bool size_condition_holds() const;
};

/// Builds the expansion. Layout: X1 = {0..s1-1}, X2, X3 consecutive, then
/// the two plain cycle vertices y4 (adjacent to X3) and y5 (adjacent to X1
/// and y4). Unless `relaxed`, throws std::invalid_argument when the size
/// condition fails; relaxed mode is for constructing near-miss negatives.
Graph c5_expansion(const C5PlusSpec& spec, bool relaxed = false);

/// True iff the twin-class quotient of g is a 5-cycle and some cyclic
/// labelling puts all expansion into three consecutive classes whose middle
/// class satisfies the size condition.
bool is_in_c5plus(const Graph& g);

// -- the T / T' families -----------------------------------------------

/// T_n for n >= 6: vertices u, v, A = {a_1..a_k}, B = {b_1..b_k} with the
/// edges a_i b_i, u a_i, u b_i, v b_i; odd orders add w adjacent to u and v.
/// Layout: u = 0, v = 1, a_i = 2..k+1, b_i = k+2..2k+1, w = 2k+2.
/// Throws std::invalid_argument for n < 6.
Graph t_family(int n);

/// The six-vertex graph H5, defined as t_family(6).
Graph h5();

/// A member of T': a base T_n with vertices of A ∪ {w} expanded into twin
/// classes of the given multiplicities (A first, then w when base_n is odd).
struct TFamilySpec {
  int base_n = 6;
  std::vector<int> expansion;  // one multiplicity >= 1 per expandable vertex

  int order() const;
};

Graph tprime_graph(const TFamilySpec& spec);

/// Adding an open twin of vtx preserves D2C, by the MacDougall–Eggleton
/// criterion: every w in a common triangle with vtx has a non-neighbour x
/// of vtx with N(x) ∩ N(vtx) = {w}. Requires g D2C.
bool twin_addable(const Graph& g, int vtx);

/// g plus a new vertex with neighbourhood N(vtx).
Graph add_twin(const Graph& g, int vtx);

/// All order-n members of T' up to isomorphism.
std::vector<Graph> tprime_members(int n);

/// True iff the twin-class quotient of g is some T_m with every expanded
/// class confined to A ∪ {w}.
bool is_in_tprime(const Graph& g);

/// Exhaustive check that the non-bipartite D2C graphs of order n with
/// maximum degree n-2 are exactly the members of T'.
struct MaxDegreeVerdict {
  int n = 0;
  bool matches = false;
  std::vector<std::string> only_in_search;  // graph6 of unmatched census hits
  std::vector<std::string> only_in_family;  // graph6 of unmatched T' members
};

MaxDegreeVerdict max_degree_characterization(int n);

// -- conclusion construction -------------------------------------------

/// T_7 with v and w expanded into twin classes of size s; n = 5 + 2s,
/// m = ((n-2)^2 + 15)/4, and u together with any w-twin is a dominating
/// edge. Layout: u = 0, a1 = 1, a2 = 2, b1 = 3, b2 = 4, then the v-class,
/// then the w-class.
Graph conclusion_construction(int s);

}  // namespace d2c
