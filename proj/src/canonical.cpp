#include "d2c/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace d2c {

std::size_t CanonicalForm::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(n);
  for (std::uint64_t w : words) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::array<int, kMaxVertices> CanonResult::vertex_orbits() const {
  std::array<int, kMaxVertices> parent;
  for (int v = 0; v < form.n; ++v) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : aut_generators)
    for (int v = 0; v < form.n; ++v) {
      int r1 = find(v), r2 = find(a[v]);
      if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
  for (int v = 0; v < form.n; ++v) parent[v] = find(v);
  return parent;
}

namespace {

constexpr int kMaxCodeWords = kMaxVertices * (kMaxVertices - 1) / 2 / 64 + 1;

// Ordered partition of the vertex sequence into cells (maximal runs).
struct Partition {
  int n = 0;
  std::array<int, kMaxVertices> seq{};
  // cell_start[i] is true iff position i begins a cell.
  std::array<bool, kMaxVertices + 1> cell_start{};

  bool discrete() const {
    for (int i = 0; i < n; ++i)
      if (!cell_start[i]) return false;
    return true;
  }
};

struct Searcher {
  const Graph& g;
  int nwords;

  bool have_best = false;
  std::array<std::uint64_t, kMaxCodeWords> best{};
  std::array<int, kMaxVertices> best_seq{};  // position -> vertex
  std::vector<std::array<int, kMaxVertices>> autos;

  std::array<int, kMaxVertices> path{};
  int path_len = 0;

  explicit Searcher(const Graph& graph) : g(graph) {
    int bits = graph.n * (graph.n - 1) / 2;
    nwords = (bits + 63) / 64;
    if (nwords == 0) nwords = 1;
  }

  // Repeatedly split cells by neighbour counts into other cells until the
  // partition is equitable. Subcells are ordered by ascending count, so the
  // outcome depends only on the isomorphism type and the incoming partition.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      int s_begin = 0;
      while (s_begin < p.n && !changed) {
        int s_end = s_begin + 1;
        while (s_end < p.n && !p.cell_start[s_end]) ++s_end;
        std::uint64_t smask = 0;
        for (int i = s_begin; i < s_end; ++i) smask |= Graph::bit(p.seq[i]);

        int t_begin = 0;
        while (t_begin < p.n) {
          int t_end = t_begin + 1;
          while (t_end < p.n && !p.cell_start[t_end]) ++t_end;
          if (t_end - t_begin > 1) {
            int counts[kMaxVertices];
            bool uniform = true;
            for (int i = t_begin; i < t_end; ++i) {
              counts[i] = std::popcount(g.adj[p.seq[i]] & smask);
              if (counts[i] != counts[t_begin]) uniform = false;
            }
            if (!uniform) {
              std::stable_sort(p.seq.begin() + t_begin, p.seq.begin() + t_end,
                               [&](int a, int b) {
                                 return std::popcount(g.adj[a] & smask) <
                                        std::popcount(g.adj[b] & smask);
                               });
              for (int i = t_begin + 1; i < t_end; ++i)
                if (std::popcount(g.adj[p.seq[i]] & smask) !=
                    std::popcount(g.adj[p.seq[i - 1]] & smask))
                  p.cell_start[i] = true;
              changed = true;
              break;
            }
          }
          t_begin = t_end;
        }
        s_begin = s_end;
      }
    }
  }

  void leaf(const Partition& p) {
    std::array<std::uint64_t, kMaxCodeWords> code{};
    int pos_of[kMaxVertices];
    for (int i = 0; i < p.n; ++i) pos_of[p.seq[i]] = i;
    int t = 0;
    for (int j = 1; j < p.n; ++j) {
      std::uint64_t row = g.adj[p.seq[j]];
      for (int i = 0; i < j; ++i, ++t)
        if ((row >> p.seq[i]) & 1) code[t >> 6] |= std::uint64_t{1} << (t & 63);
    }
    if (!have_best) {
      have_best = true;
      best = code;
      best_seq = p.seq;
      return;
    }
    int cmp = 0;
    for (int w = 0; w < nwords; ++w) {
      if (code[w] != best[w]) {
        cmp = code[w] < best[w] ? -1 : 1;
        break;
      }
    }
    if (cmp < 0) {
      best = code;
      best_seq = p.seq;
    } else if (cmp == 0) {
      // Equal certificates give an automorphism mapping the best labelling
      // onto this one.
      std::array<int, kMaxVertices> a{};
      bool identity = true;
      for (int i = 0; i < p.n; ++i) {
        a[best_seq[i]] = p.seq[i];
        if (best_seq[i] != p.seq[i]) identity = false;
      }
      if (!identity) autos.push_back(a);
    }
  }

  void search(const Partition& p) {
    int cell_begin = 0, cell_end = 0;
    for (int i = 0; i < p.n; ++i) {
      if (!p.cell_start[i]) {
        cell_begin = i - 1;
        while (!p.cell_start[cell_begin]) --cell_begin;
        cell_end = i + 1;
        while (cell_end < p.n && !p.cell_start[cell_end]) ++cell_end;
        break;
      }
    }
    if (cell_end == 0) {
      leaf(p);
      return;
    }

    int tried[kMaxVertices];
    int num_tried = 0;
    for (int idx = cell_begin; idx < cell_end; ++idx) {
      int v = p.seq[idx];
      // Orbit pruning: skip v when a known automorphism fixing the current
      // individualisation path maps an already-explored choice to v.
      bool skip = false;
      for (const auto& a : autos) {
        bool fixes_path = true;
        for (int i = 0; i < path_len && fixes_path; ++i)
          if (a[path[i]] != path[i]) fixes_path = false;
        if (!fixes_path) continue;
        for (int t = 0; t < num_tried && !skip; ++t)
          if (a[tried[t]] == v) skip = true;
        if (skip) break;
      }
      if (skip) continue;
      tried[num_tried++] = v;

      Partition child = p;
      // Move v to the front of its cell and split it off.
      for (int i = cell_begin; i < cell_end; ++i)
        if (child.seq[i] == v) {
          std::rotate(child.seq.begin() + cell_begin, child.seq.begin() + i,
                      child.seq.begin() + i + 1);
          break;
        }
      child.cell_start[cell_begin + 1] = true;
      refine(child);

      path[path_len++] = v;
      search(child);
      --path_len;
    }
  }
};

}  // namespace

CanonResult canonicalize(const Graph& g) {
  Searcher s(g);
  Partition p;
  p.n = g.n;
  for (int v = 0; v < g.n; ++v) p.seq[v] = v;
  std::stable_sort(p.seq.begin(), p.seq.begin() + g.n,
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  p.cell_start[0] = true;
  for (int i = 1; i < g.n; ++i)
    p.cell_start[i] = g.degree(p.seq[i]) != g.degree(p.seq[i - 1]);
  s.refine(p);
  s.search(p);

  CanonResult res;
  res.form.n = g.n;
  res.form.words.assign(s.best.begin(), s.best.begin() + s.nwords);
  for (int i = 0; i < g.n; ++i) res.labeling[s.best_seq[i]] = i;
  res.aut_generators = std::move(s.autos);
  return res;
}

CanonicalForm canonical_form(const Graph& g) { return canonicalize(g).form; }

Graph canonical_graph(const CanonicalForm& form) {
  Graph g(form.n);
  int t = 0;
  for (int j = 1; j < form.n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if ((form.words[t >> 6] >> (t & 63)) & 1) g.add_edge(i, j);
  return g;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace d2c
