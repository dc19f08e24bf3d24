// Acceptance gate: each test case pins one acceptance criterion and prints
// a PASS/FAIL line so the suite doubles as a human-readable report.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <set>
#include <unordered_set>
#include <vector>

#include "d2c/analysis.hpp"
#include "d2c/canonical.hpp"
#include "d2c/certificate.hpp"
#include "d2c/enumerate.hpp"
#include "d2c/families.hpp"
#include "d2c/graph.hpp"

using namespace d2c;

namespace {

void verdict(const char* name, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name << std::endl;
  CHECK_MESSAGE(ok, name);
}

std::vector<Graph> d2c_graphs_of_order(int n) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) {
    if (is_d2c(g)) out.push_back(g);
  });
  return out;
}

long long burnside_class_count(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0, perms = 0;
  do {
    std::set<std::pair<int, int>> visited;
    int cycles = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (visited.count({i, j})) continue;
        int a = i, b = j;
        while (!visited.count({a, b})) {
          visited.insert({a, b});
          int na = perm[a], nb = perm[b];
          a = std::min(na, nb);
          b = std::max(na, nb);
        }
        ++cycles;
      }
    total += 1ll << cycles;
    ++perms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / perms;
}

}  // namespace

TEST_CASE("criterion 1: Figure 3 reproduction (3 / 8 / 2 / 0 exceptions)") {
  bool ok = census(7).counts.exceptions_not_in_c5plus == 3;
  ok = ok && census(8).counts.exceptions_not_in_c5plus == 8;
  ok = ok && census(9).counts.exceptions_not_in_c5plus == 2;
  // n = 10 with the safe edge-bound prune: the exception count is exact
  // (any D2C graph of order 10 has at most 25 edges).
  CensusOptions pruned;
  pruned.prune_edge_bound = true;
  ok = ok && census(10, pruned).counts.exceptions_not_in_c5plus == 0;
  verdict("criterion 1: thirteen exceptional graphs at orders 7/8/9, none at 10",
          ok);
}

TEST_CASE("criterion 2: Murty-Simon bound for all D2C graphs, n <= 9") {
  bool ok = true;
  for (int n = 2; n <= 9 && ok; ++n)
    for (const Graph& g : d2c_graphs_of_order(n)) {
      int bound = n * n / 4;
      int m = g.edge_count();
      if (m > bound) ok = false;
      if (m == bound && !is_balanced_complete_bipartite(g)) ok = false;
      if (m < bound && is_balanced_complete_bipartite(g)) ok = false;
      if (!ok) break;
    }
  verdict("criterion 2: m <= floor(n^2/4), equality iff balanced complete "
          "bipartite, n <= 9",
          ok);
}

TEST_CASE("criterion 3: Theorem 4 bound, n <= 9") {
  Graph h5g = h5();
  bool h5_seen = false;
  bool ok = h5g.n == 6 && h5g.edge_count() == 8;  // = ⌊36/4⌋ − 1
  for (int n = 2; n <= 9 && ok; ++n)
    for (const Graph& g : d2c_graphs_of_order(n)) {
      if (is_bipartite(g) || dominating_edges(g).empty()) continue;
      if (g.n == 6 && are_isomorphic(g, h5g)) {
        h5_seen = true;
        continue;
      }
      if (g.edge_count() > n * n / 4 - 2) {
        ok = false;
        break;
      }
    }
  ok = ok && h5_seen;
  verdict("criterion 3: non-bipartite with dominating edge has m <= "
          "floor(n^2/4)-2 except H5, n <= 9",
          ok);
}

TEST_CASE("criterion 4: edge identity and free(f) lower bounds, n <= 8") {
  Graph h5g = h5();
  bool ok = true;
  for (int n = 2; n <= 8 && ok; ++n)
    for (const Graph& g : d2c_graphs_of_order(n)) {
      bool bip = is_bipartite(g);
      bool is_h5 = g.n == 6 && are_isomorphic(g, h5g);
      for (const VertexPair& e : dominating_edges(g)) {
        PartitionUV part = partition_uv(g, e.a, e.b);
        XYSplit split = build_xy(part);
        Assignment asg;
        try {
          asg = build_assignment(g, split);  // throws on non-injectivity
        } catch (const std::logic_error&) {
          ok = false;
          break;
        }
        int fre = static_cast<int>(asg.free_nonedges.size());
        int xs = std::popcount(split.x_side);
        int ys = std::popcount(split.y_side);
        if (g.edge_count() != xs * ys - fre) ok = false;
        if (!verify_edge_identity(g, split, asg).holds()) ok = false;
        // Lemma 16 and the free >= 2 refinement are proved under the
        // standing assumption that the edge bound fails, so check them in
        // that hypothesis-correct form; free(f) = 0 graphs exist (H5, two
        // order-7 graphs with m = |X||Y|).
        int m = g.edge_count();
        if (!bip) {
          if (m > n * n / 4 - 1) ok = false;
          if (m >= n * n / 4 && fre < 1) ok = false;
          if (!is_h5) {
            if (m > n * n / 4 - 2) ok = false;
            if (m >= n * n / 4 - 1 && fre < 2) ok = false;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
  verdict("criterion 4: injective f, m = |X||Y| - free(f), Lemma 16 lower "
          "bounds, n <= 8",
          ok);
}

TEST_CASE("criterion 5: orientation lemma suite, n <= 8") {
  bool ok = true;
  for (int n = 2; n <= 8 && ok; ++n)
    for (const Graph& g : d2c_graphs_of_order(n)) {
      for (const VertexPair& e : dominating_edges(g)) {
        PartitionUV part = partition_uv(g, e.a, e.b);
        XYSplit split = build_xy(part);
        Assignment asg = build_assignment(g, split);
        if (part.p_uv == 0) {
          FOrientation o = build_f_orientation(g, part, asg);
          if (!verify_orientation_lemmas(g, part, asg, o).all_ok()) ok = false;
          CertificateBound cb = certificate_bound(g, e.a, e.b);
          if (cb.implied_bound > static_cast<int>(asg.free_nonedges.size()))
            ok = false;
        } else {
          if (!verify_puv_matching(g, part, asg).all_ok()) ok = false;
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
  verdict("criterion 5: Lemmas 10-15 hold verbatim; implied_bound <= free(f), "
          "n <= 8",
          ok);
}

TEST_CASE("criterion 6: family constructions, n <= 14") {
  bool ok = true;
  for (int n = 6; n <= 14 && ok; ++n) {
    Graph t = t_family(n);
    if (!is_d2c(t) || t.edge_count() != 2 * n - 4 || t.max_degree() != n - 2)
      ok = false;
    for (const Graph& g : tprime_members(n))
      if (!is_d2c(g) || g.edge_count() != 2 * n - 4 || g.max_degree() != n - 2)
        ok = false;
  }
  for (int n = 5; n <= 14 && ok; ++n)
    for (int s1 = 1; s1 <= n - 4; ++s1)
      for (int s2 = 1; s2 <= n - 4; ++s2) {
        int s3 = n - 2 - s1 - s2;
        if (s3 < 1) continue;
        C5PlusSpec spec{s1, s2, s3};
        if (!spec.size_condition_holds()) continue;
        Graph g = c5_expansion(spec);
        if (!is_d2c(g) || g.edge_count() != (n - 1) * (n - 1) / 4 + 1)
          ok = false;
      }
  for (int s = 1; s <= 4 && ok; ++s) {
    Graph g = conclusion_construction(s);
    int n = g.n;
    if (n != 5 + 2 * s) ok = false;
    if (!is_d2c(g)) ok = false;
    if (g.edge_count() != ((n - 2) * (n - 2) + 15) / 4) ok = false;
    auto doms = dominating_edges(g);
    if (std::find(doms.begin(), doms.end(), VertexPair(0, 5 + s)) ==
        doms.end())
      ok = false;  // the edge u w
  }
  verdict("criterion 6: T/T' (6<=n<=14), C5+ (5<=n<=14) and the conclusion "
          "construction (s<=4) check out exactly",
          ok);
}

TEST_CASE("criterion 7: Theorem 17 characterization, 6 <= n <= 8") {
  bool ok = true;
  for (int n = 6; n <= 8; ++n)
    if (!max_degree_characterization(n).matches) ok = false;
  verdict("criterion 7: census {non-bipartite D2C, maxdeg n-2} equals T', "
          "6 <= n <= 8",
          ok);
}

TEST_CASE("criterion 8: complement cross-check, n <= 8") {
  bool ok = true;
  for (int n = 2; n <= 8 && ok; ++n)
    for (const Graph& g : d2c_graphs_of_order(n)) {
      if (is_bipartite(g)) continue;
      int cd = diameter(complement(g));
      if (cd != 2 && cd != 3) ok = false;
      if ((cd == 3) != !dominating_edges(g).empty()) ok = false;
      if (!ok) break;
    }
  verdict("criterion 8: complement diameter in {2,3}; dominating edge iff "
          "diameter 3, n <= 8",
          ok);
}

TEST_CASE("criterion 9: generator soundness") {
  const long long expected[] = {0, 1, 2, 4, 11, 34, 156, 1044};
  bool ok = true;
  for (int n = 1; n <= 7; ++n) {
    long long count = 0;
    for_each_graph(n, [&](const Graph&) { ++count; });
    if (count != expected[n]) ok = false;
    if (burnside_class_count(n) != expected[n]) ok = false;
  }
  // Collision scan at n <= 8: every emitted graph gets a distinct form.
  for (int n = 1; n <= 8 && ok; ++n) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> forms;
    long long count = 0;
    for_each_graph(n, [&](const Graph& g) {
      ++count;
      forms.insert(canonical_form(g));
    });
    if (static_cast<long long>(forms.size()) != count) ok = false;
  }
  verdict("criterion 9: class counts 1,2,4,11,34,156,1044 and a collision-free "
          "canonical form, n <= 8",
          ok);
}
