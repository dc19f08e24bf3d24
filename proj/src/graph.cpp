#include "d2c/graph.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace d2c {

int Graph::degree(int v) const { return std::popcount(adj[v]); }

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += degree(v);
  return total / 2;
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<VertexPair> Graph::non_edges() const {
  std::vector<VertexPair> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

Graph Graph::induced(std::uint64_t mask) const {
  int map[kMaxVertices];
  int k = 0;
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1) map[v] = k++;
  Graph h(k);
  for (int v = 0; v < n; ++v) {
    if (!((mask >> v) & 1)) continue;
    std::uint64_t row = adj[v] & mask;
    while (row) {
      int w = std::countr_zero(row);
      row &= row - 1;
      h.adj[map[v]] |= bit(map[w]);
    }
  }
  return h;
}

bool Graph::valid() const {
  if (n < 1 || n > kMaxVertices) return false;
  for (int i = 0; i < n; ++i) {
    if (adj[i] & ~vertex_mask()) return false;
    if ((adj[i] >> i) & 1) return false;
    std::uint64_t row = adj[i];
    while (row) {
      int j = std::countr_zero(row);
      row &= row - 1;
      if (!has_edge(j, i)) return false;
    }
  }
  for (int i = n; i < kMaxVertices; ++i)
    if (adj[i]) return false;
  return true;
}

bool Graph::operator==(const Graph& o) const {
  if (n != o.n) return false;
  for (int i = 0; i < n; ++i)
    if (adj[i] != o.adj[i]) return false;
  return true;
}

// -- graph6 ------------------------------------------------------------

std::string to_graph6(const Graph& g) {
  std::string out;
  if (g.n <= 62) {
    out.push_back(static_cast<char>(g.n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((g.n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

namespace {

[[noreturn]] void g6_fail(std::size_t pos, const std::string& what) {
  throw std::invalid_argument("graph6: " + what + " at byte " +
                              std::to_string(pos));
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t base = 0;
  if (line.substr(0, header.size()) == header) {
    line.remove_prefix(header.size());
    base = header.size();
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) g6_fail(base, "empty record");

  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) g6_fail(base + pos, "truncated record");
    unsigned char c = line[pos++];
    if (c < 63 || c > 126) g6_fail(base + pos - 1, "byte out of range");
    return c - 63;
  };

  long n;
  if (static_cast<unsigned char>(line[0]) == 126) {
    ++pos;
    if (pos + 3 > line.size()) g6_fail(base + pos, "truncated order");
    long a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = next();
  }
  if (n < 1) g6_fail(base, "order must be at least 1");
  if (n > kMaxVertices)
    g6_fail(base, "order " + std::to_string(n) + " exceeds 64");

  Graph g(static_cast<int>(n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = next();
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
      --nbits;
    }
  }
  if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
    g6_fail(base + pos - 1, "nonzero padding bits");
  if (pos != line.size()) g6_fail(base + pos, "trailing garbage");
  return g;
}

// -- invariants --------------------------------------------------------

int diameter(const Graph& g) {
  if (g.n == 1) return 0;
  const std::uint64_t all = g.vertex_mask();
  int diam = 0;
  for (int v = 0; v < g.n; ++v) {
    std::uint64_t reach = Graph::bit(v);
    int dist = 0;
    while (reach != all) {
      std::uint64_t grown = reach;
      std::uint64_t frontier = reach;
      while (frontier) {
        int w = std::countr_zero(frontier);
        frontier &= frontier - 1;
        grown |= g.adj[w];
      }
      if (grown == reach) return kInfiniteDiameter;
      reach = grown;
      ++dist;
    }
    diam = std::max(diam, dist);
  }
  return diam;
}

bool has_diameter_at_most_2(const Graph& g) {
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (!g.has_edge(i, j) && (g.adj[i] & g.adj[j]) == 0) return false;
  return true;
}

Graph complement(const Graph& g) {
  Graph h(g.n);
  const std::uint64_t all = g.vertex_mask();
  for (int v = 0; v < g.n; ++v) h.adj[v] = ~g.adj[v] & all & ~Graph::bit(v);
  return h;
}

bool is_bipartite(const Graph& g, std::uint64_t sides[2]) {
  std::uint64_t color[2] = {0, 0};
  std::uint64_t seen = 0;
  for (int s = 0; s < g.n; ++s) {
    if ((seen >> s) & 1) continue;
    color[0] |= Graph::bit(s);
    seen |= Graph::bit(s);
    std::uint64_t frontier = Graph::bit(s);
    int side = 0;
    while (frontier) {
      std::uint64_t nxt = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        nxt |= g.adj[v];
      }
      if (nxt & color[side]) return false;
      nxt &= ~seen;
      side ^= 1;
      color[side] |= nxt;
      seen |= nxt;
      frontier = nxt;
    }
  }
  if (sides) {
    sides[0] = color[0];
    sides[1] = color[1];
  }
  return true;
}

bool is_complete_bipartite(const Graph& g) {
  std::uint64_t sides[2];
  if (!is_bipartite(g, sides)) return false;
  // Complete bipartite graphs are connected (or a single vertex), so the
  // two-colouring is unique and every cross pair must be an edge.
  for (int v = 0; v < g.n; ++v) {
    std::uint64_t other = ((sides[0] >> v) & 1) ? sides[1] : sides[0];
    if (g.adj[v] != other) return false;
  }
  return true;
}

bool is_balanced_complete_bipartite(const Graph& g) {
  std::uint64_t sides[2];
  if (!is_bipartite(g, sides) || !is_complete_bipartite(g)) return false;
  int a = std::popcount(sides[0]), b = std::popcount(sides[1]);
  return std::abs(a - b) <= 1;
}

std::vector<std::uint64_t> twin_classes(const Graph& g) {
  std::vector<std::uint64_t> classes;
  std::uint64_t done = 0;
  for (int v = 0; v < g.n; ++v) {
    if ((done >> v) & 1) continue;
    std::uint64_t cls = 0;
    for (int w = v; w < g.n; ++w)
      if (g.adj[w] == g.adj[v]) cls |= Graph::bit(w);
    classes.push_back(cls);
    done |= cls;
  }
  return classes;
}

}  // namespace d2c
