#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "d2c/graph.hpp"

namespace d2c {

/// Certificate of an isomorphism class: order plus the upper-triangle
/// adjacency bits of the canonically labelled graph, packed 64 per word
/// in graph6 column order.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> words;

  auto operator<=>(const CanonicalForm&) const = default;
  std::size_t hash() const;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const { return f.hash(); }
};

/// Result of the canonical search: the certificate, the canonical labelling
/// (labeling[v] = position of v in the canonical order) and a set of
/// automorphisms that generates Aut(G).
struct CanonResult {
  CanonicalForm form;
  std::array<int, kMaxVertices> labeling{};
  std::vector<std::array<int, kMaxVertices>> aut_generators;

  /// Vertex placed at canonical position `pos`.
  int vertex_at(int pos) const {
    for (int v = 0; v < form.n; ++v)
      if (labeling[v] == pos) return v;
    return -1;
  }

  /// Orbit partition of the vertices under the generated group,
  /// as a union-find root array.
  std::array<int, kMaxVertices> vertex_orbits() const;
};

/// Canonical labelling by iterative degree/neighbourhood refinement with
/// backtracking over colour classes, pruned by discovered automorphisms.
/// The labelling respects degree order: vertices of smaller degree always
/// come first, so the last canonical position holds a maximum-degree vertex.
CanonResult canonicalize(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// Rebuilds the canonically labelled graph from a certificate.
Graph canonical_graph(const CanonicalForm& form);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace d2c
