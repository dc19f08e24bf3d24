#include "d2c/families.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "d2c/analysis.hpp"
#include "d2c/canonical.hpp"
#include "d2c/enumerate.hpp"

namespace d2c {

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1 || a + b > kMaxVertices)
    throw std::invalid_argument("complete_bipartite: bad side sizes");
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = a; j < a + b; ++j) g.add_edge(i, j);
  return g;
}

bool C5PlusSpec::size_condition_holds() const {
  int n = order();
  return s2 == (n - 3) / 2 || s2 == (n - 2) / 2;  // floor and ceil of (n-3)/2
}

Graph c5_expansion(const C5PlusSpec& spec, bool relaxed) {
  if (spec.s1 < 1 || spec.s2 < 1 || spec.s3 < 1)
    throw std::invalid_argument("c5_expansion: class sizes must be positive");
  if (spec.order() > kMaxVertices)
    throw std::invalid_argument("c5_expansion: too many vertices");
  if (!relaxed && !spec.size_condition_holds())
    throw std::invalid_argument(
        "c5_expansion: middle class size violates the size condition");

  Graph g(spec.order());
  int x1 = 0, x2 = spec.s1, x3 = spec.s1 + spec.s2;
  int y4 = x3 + spec.s3, y5 = y4 + 1;
  for (int i = x1; i < x2; ++i)
    for (int j = x2; j < x3; ++j) g.add_edge(i, j);
  for (int i = x2; i < x3; ++i)
    for (int j = x3; j < y4; ++j) g.add_edge(i, j);
  for (int j = x3; j < y4; ++j) g.add_edge(j, y4);
  g.add_edge(y4, y5);
  for (int i = x1; i < x2; ++i) g.add_edge(y5, i);
  return g;
}

bool is_in_c5plus(const Graph& g) {
  std::vector<std::uint64_t> classes = twin_classes(g);
  if (classes.size() != 5) return false;

  // Quotient on the five classes (adjacency of any representatives).
  int rep[5];
  for (int i = 0; i < 5; ++i) rep[i] = std::countr_zero(classes[i]);
  std::uint64_t qadj[5] = {};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j && g.has_edge(rep[i], rep[j])) qadj[i] |= Graph::bit(j);
  for (int i = 0; i < 5; ++i)
    if (std::popcount(qadj[i]) != 2) return false;

  // Walk the cycle from class 0; a 2-regular quotient that closes after
  // five steps is a 5-cycle.
  int order5[5] = {0, std::countr_zero(qadj[0]), -1, -1, -1};
  for (int i = 2; i < 5; ++i) {
    std::uint64_t next = qadj[order5[i - 1]] & ~Graph::bit(order5[i - 2]);
    if (std::popcount(next) != 1) return false;
    order5[i] = std::countr_zero(next);
  }
  if (!((qadj[order5[4]] >> 0) & 1)) return false;

  int sizes[5];
  for (int i = 0; i < 5; ++i)
    sizes[i] = std::popcount(classes[order5[i]]);

  for (int dir : {1, 4})
    for (int start = 0; start < 5; ++start) {
      auto at = [&](int k) { return sizes[(start + dir * k) % 5]; };
      C5PlusSpec spec{at(0), at(1), at(2)};
      if (at(3) == 1 && at(4) == 1 && spec.size_condition_holds()) return true;
    }
  return false;
}

Graph t_family(int n) {
  if (n < 6 || n > kMaxVertices)
    throw std::invalid_argument("t_family: order must be in [6, 64]");
  int k = (n - 2) / 2;
  Graph g(n);
  for (int i = 0; i < k; ++i) {
    int a = 2 + i, b = 2 + k + i;
    g.add_edge(a, b);
    g.add_edge(0, a);
    g.add_edge(0, b);
    g.add_edge(1, b);
  }
  if (n % 2 == 1) {
    int w = 2 + 2 * k;
    g.add_edge(0, w);
    g.add_edge(1, w);
  }
  return g;
}

Graph h5() { return t_family(6); }

namespace {

/// The expandable vertices of T_n in layout order: A, then w when n is odd.
std::vector<int> t_expandable(int n) {
  int k = (n - 2) / 2;
  std::vector<int> vs;
  for (int i = 0; i < k; ++i) vs.push_back(2 + i);
  if (n % 2 == 1) vs.push_back(2 + 2 * k);
  return vs;
}

}  // namespace

int TFamilySpec::order() const {
  int n = base_n;
  for (int mult : expansion) n += mult - 1;
  return n;
}

Graph tprime_graph(const TFamilySpec& spec) {
  std::vector<int> targets = t_expandable(spec.base_n);
  if (spec.expansion.size() != targets.size())
    throw std::invalid_argument(
        "tprime_graph: one multiplicity per vertex of A ∪ {w} required");
  Graph g = t_family(spec.base_n);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (spec.expansion[i] < 1)
      throw std::invalid_argument("tprime_graph: multiplicities must be >= 1");
    for (int c = 1; c < spec.expansion[i]; ++c) g = add_twin(g, targets[i]);
  }
  return g;
}

bool twin_addable(const Graph& g, int vtx) {
  std::uint64_t nbrs = g.adj[vtx];
  std::uint64_t ws = nbrs;
  while (ws) {
    int w = std::countr_zero(ws);
    ws &= ws - 1;
    if ((g.adj[vtx] & g.adj[w]) == 0) continue;  // no common triangle
    bool found = false;
    for (int x = 0; x < g.n && !found; ++x) {
      if (x == vtx || g.has_edge(x, vtx)) continue;
      if ((g.adj[x] & g.adj[vtx]) == Graph::bit(w)) found = true;
    }
    if (!found) return false;
  }
  return true;
}

Graph add_twin(const Graph& g, int vtx) {
  if (g.n >= kMaxVertices)
    throw std::invalid_argument("add_twin: graph is already at 64 vertices");
  Graph h = g;
  int t = h.n++;
  std::uint64_t nbrs = g.adj[vtx];
  h.adj[t] = nbrs;
  while (nbrs) {
    int w = std::countr_zero(nbrs);
    nbrs &= nbrs - 1;
    h.adj[w] |= Graph::bit(t);
  }
  return h;
}

std::vector<Graph> tprime_members(int n) {
  if (n < 6) return {};
  std::vector<Graph> out;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;

  for (int base = 6; base <= n; ++base) {
    int slots = static_cast<int>(t_expandable(base).size());
    int extra = n - base;
    // All weak compositions of `extra` into `slots` parts.
    std::vector<int> comp(slots, 0);
    auto emit = [&] {
      TFamilySpec spec;
      spec.base_n = base;
      spec.expansion.assign(comp.begin(), comp.end());
      for (int& m : spec.expansion) ++m;
      Graph g = tprime_graph(spec);
      if (seen.insert(canonical_form(g)).second) out.push_back(g);
    };
    comp[0] = extra;
    for (;;) {
      emit();
      // Next composition: move one unit rightwards, lexicographic order.
      int i = slots - 2;
      while (i >= 0 && comp[i] == 0) --i;
      if (i < 0) break;
      --comp[i];
      int tail = comp[slots - 1];
      comp[slots - 1] = 0;
      comp[i + 1] = tail + 1;
    }
  }
  return out;
}

bool is_in_tprime(const Graph& g) {
  std::vector<std::uint64_t> classes = twin_classes(g);
  int m = static_cast<int>(classes.size());
  if (m < 6) return false;

  Graph q(m);
  std::vector<int> rep(m), size(m);
  for (int i = 0; i < m; ++i) {
    rep[i] = std::countr_zero(classes[i]);
    size[i] = std::popcount(classes[i]);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.has_edge(rep[i], rep[j])) q.add_edge(i, j);

  if (!are_isomorphic(q, t_family(m))) return false;

  // u is the unique vertex of degree m-2 in T_m; the expandable set
  // A ∪ {w} is exactly its degree-2 neighbours.
  int u = -1;
  for (int i = 0; i < m; ++i)
    if (q.degree(i) == m - 2) {
      if (u >= 0) return false;
      u = i;
    }
  if (u < 0) return false;
  for (int i = 0; i < m; ++i)
    if (size[i] > 1 && !(q.has_edge(u, i) && q.degree(i) == 2)) return false;
  return true;
}

MaxDegreeVerdict max_degree_characterization(int n) {
  MaxDegreeVerdict verdict;
  verdict.n = n;

  std::unordered_set<CanonicalForm, CanonicalFormHash> family;
  std::vector<std::pair<CanonicalForm, std::string>> family_list;
  for (const Graph& g : tprime_members(n)) {
    CanonicalForm f = canonical_form(g);
    family.insert(f);
    family_list.emplace_back(f, to_graph6(g));
  }

  std::unordered_set<CanonicalForm, CanonicalFormHash> found;
  for_each_graph(n, [&](const Graph& g) {
    if (g.max_degree() != n - 2 || is_bipartite(g) || !is_d2c(g)) return;
    CanonicalForm f = canonical_form(g);
    found.insert(f);
    if (!family.count(f)) verdict.only_in_search.push_back(to_graph6(g));
  });
  for (const auto& [f, g6] : family_list)
    if (!found.count(f)) verdict.only_in_family.push_back(g6);

  std::sort(verdict.only_in_search.begin(), verdict.only_in_search.end());
  std::sort(verdict.only_in_family.begin(), verdict.only_in_family.end());
  verdict.matches =
      verdict.only_in_search.empty() && verdict.only_in_family.empty();
  return verdict;
}

Graph conclusion_construction(int s) {
  if (s < 1 || 5 + 2 * s > kMaxVertices)
    throw std::invalid_argument("conclusion_construction: need 1 <= s <= 29");
  int n = 5 + 2 * s;
  Graph g(n);
  // u = 0, a1 = 1, a2 = 2, b1 = 3, b2 = 4, then s copies of v, s of w.
  g.add_edge(1, 3);
  g.add_edge(2, 4);
  for (int x : {1, 2, 3, 4}) g.add_edge(0, x);
  for (int i = 0; i < s; ++i) {
    int v = 5 + i;
    g.add_edge(v, 3);
    g.add_edge(v, 4);
    for (int j = 0; j < s; ++j) g.add_edge(v, 5 + s + j);
  }
  for (int j = 0; j < s; ++j) g.add_edge(0, 5 + s + j);
  return g;
}

}  // namespace d2c
