#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>

#include "d2c/analysis.hpp"
#include "d2c/canonical.hpp"
#include "d2c/families.hpp"
#include "test_util.hpp"

using namespace d2c;
using namespace testutil;

TEST_CASE("complete bipartite constructions") {
  CHECK(is_d2c(complete_bipartite(2, 2)));
  CHECK(complete_bipartite(2, 2).edge_count() == 4);
  CHECK(is_d2c(complete_bipartite(3, 3)));
  CHECK(complete_bipartite(3, 3).edge_count() == 9);
  CHECK(is_d2c(complete_bipartite(2, 4)));
  CHECK(complete_bipartite(2, 4).edge_count() == 8);
  CHECK(is_d2c(complete_bipartite(1, 5)));
  CHECK_THROWS_AS(complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("C5+ expansions: pinned members") {
  Graph c5 = c5_expansion({1, 1, 1});
  CHECK(are_isomorphic(c5, cycle(5)));
  CHECK(c5.edge_count() == 5);

  Graph g6 = c5_expansion({1, 2, 1});
  CHECK(g6.n == 6);
  CHECK(g6.edge_count() == 7);
  CHECK(is_d2c(g6));

  Graph g9 = c5_expansion({2, 3, 2});
  CHECK(g9.n == 9);
  CHECK(g9.edge_count() == 17);
  CHECK(is_d2c(g9));
}

TEST_CASE("C5+ edge-count formula across the family") {
  for (int s1 = 1; s1 <= 4; ++s1)
    for (int s2 = 1; s2 <= 6; ++s2)
      for (int s3 = 1; s3 <= 4; ++s3) {
        C5PlusSpec spec{s1, s2, s3};
        Graph g = c5_expansion(spec, /*relaxed=*/true);
        CHECK(g.edge_count() == 1 + (s1 + s3) + s2 * (s1 + s3));
        int n = spec.order();
        if (spec.size_condition_holds())
          CHECK(g.edge_count() == (n - 1) * (n - 1) / 4 + 1);
      }
}

TEST_CASE("c5_expansion enforces the size condition unless relaxed") {
  C5PlusSpec bad{2, 1, 2};  // n = 7 needs s2 = 2
  CHECK_FALSE(bad.size_condition_holds());
  CHECK_THROWS_AS(c5_expansion(bad), std::invalid_argument);
  Graph g = c5_expansion(bad, true);
  CHECK(g.n == 7);
  CHECK_FALSE(is_in_c5plus(g));
}

TEST_CASE("C5+ recognizer") {
  CHECK(is_in_c5plus(cycle(5)));
  CHECK_FALSE(is_in_c5plus(h5()));
  CHECK(is_in_c5plus(c5_expansion({1, 2, 2})));
  CHECK_FALSE(is_in_c5plus(complete_bipartite(3, 3)));
  CHECK_FALSE(is_in_c5plus(petersen()));

  // Isomorphism invariance.
  std::mt19937 rng(31);
  for (const C5PlusSpec spec :
       {C5PlusSpec{1, 1, 1}, {1, 2, 1}, {2, 3, 2}, {1, 3, 2}}) {
    Graph g = c5_expansion(spec, true);
    bool member = is_in_c5plus(g);
    for (int rep = 0; rep < 20; ++rep)
      CHECK(is_in_c5plus(random_relabel(g, rng)) == member);
  }
}

TEST_CASE("t_family fixtures") {
  CHECK(are_isomorphic(t_family(6), h5()));
  Graph t7 = t_family(7);
  CHECK(t7.edge_count() == 10);  // = ⌊36/4⌋ + 1
  CHECK(is_d2c(t7));
  Graph t10 = t_family(10);
  CHECK(t10.edge_count() == 16);
  CHECK(is_d2c(t10));
  for (int n = 6; n <= 12; ++n) {
    Graph t = t_family(n);
    CHECK(t.edge_count() == 2 * n - 4);
    CHECK(t.max_degree() == n - 2);
    CHECK(t.degree(0) == n - 2);  // u
    CHECK(is_d2c(t));
  }
  CHECK_THROWS_AS(t_family(5), std::invalid_argument);
}

TEST_CASE("twin addability in t_family matches the paper's observation") {
  for (int n : {8, 9}) {
    Graph t = t_family(n);
    int k = (n - 2) / 2;
    std::uint64_t allowed = Graph::bit(1);  // v
    for (int i = 0; i < k; ++i) allowed |= Graph::bit(2 + i);  // A
    if (n % 2 == 1) allowed |= Graph::bit(2 + 2 * k);          // w
    for (int v = 0; v < n; ++v) {
      CHECK(twin_addable(t, v) == bool((allowed >> v) & 1));
      // The theorem's criterion agrees with the direct D2C check.
      CHECK(is_d2c(add_twin(t, v)) == twin_addable(t, v));
    }
  }
}

TEST_CASE("twin addition on C5 and K33") {
  Graph c5 = cycle(5);
  for (int v = 0; v < 5; ++v) {
    CHECK(twin_addable(c5, v));
    Graph g = add_twin(c5, v);
    CHECK(is_d2c(g));
    CHECK(is_in_c5plus(g));
  }
  Graph k33 = complete_bipartite(3, 3);
  CHECK(twin_addable(k33, 0));
  CHECK(are_isomorphic(add_twin(k33, 0), complete_bipartite(3, 4)));
}

TEST_CASE("add_twin grows the right twin class") {
  Graph t9 = t_family(9);
  auto before = twin_classes(t9);
  Graph g = add_twin(t9, 2);
  auto after = twin_classes(g);
  CHECK(after.size() == before.size());  // class of a_1 grew, none split
  bool found = false;
  for (std::uint64_t cls : after)
    if ((cls >> 2) & 1) {
      CHECK(std::popcount(cls) == 2);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("tprime membership lists") {
  auto m6 = tprime_members(6);
  REQUIRE(m6.size() == 1);
  CHECK(are_isomorphic(m6[0], h5()));

  auto m7 = tprime_members(7);
  CHECK(m7.size() == 2);  // T_7 and T_6 plus a twin of some a_i

  for (int n = 6; n <= 11; ++n) {
    auto members = tprime_members(n);
    CHECK_FALSE(members.empty());
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Graph& g = members[i];
      CHECK(g.n == n);
      CHECK(g.edge_count() == 2 * n - 4);
      CHECK(g.max_degree() == n - 2);
      CHECK(is_d2c(g));
      CHECK(is_in_tprime(g));
      for (std::size_t j = i + 1; j < members.size(); ++j)
        CHECK_FALSE(are_isomorphic(g, members[j]));
    }
  }
}

TEST_CASE("tprime recognizer negatives and invariance") {
  CHECK_FALSE(is_in_tprime(complete_bipartite(3, 3)));
  CHECK_FALSE(is_in_tprime(cycle(5)));
  CHECK_FALSE(is_in_tprime(c5_expansion({2, 3, 2})));
  CHECK_FALSE(is_in_tprime(petersen()));

  std::mt19937 rng(13);
  for (const Graph& g : tprime_members(9))
    for (int rep = 0; rep < 20; ++rep)
      CHECK(is_in_tprime(random_relabel(g, rng)));
}

TEST_CASE("maximum-degree characterization at small orders") {
  MaxDegreeVerdict v6 = max_degree_characterization(6);
  CHECK(v6.matches);
  MaxDegreeVerdict v7 = max_degree_characterization(7);
  CHECK(v7.matches);
  CHECK(tprime_members(7).size() == 2);
}

TEST_CASE("conclusion construction") {
  Graph g1 = conclusion_construction(1);
  CHECK(are_isomorphic(g1, t_family(7)));
  CHECK(g1.edge_count() == 10);  // (25+15)/4

  Graph g2 = conclusion_construction(2);
  CHECK(g2.n == 9);
  CHECK(g2.edge_count() == 16);  // (49+15)/4
  CHECK(is_d2c(g2));

  Graph g3 = conclusion_construction(3);
  CHECK(g3.n == 11);
  CHECK(g3.edge_count() == 24);  // (81+15)/4

  for (int s = 1; s <= 4; ++s) {
    Graph g = conclusion_construction(s);
    int n = g.n;
    CHECK(n == 5 + 2 * s);
    CHECK(g.edge_count() == ((n - 2) * (n - 2) + 15) / 4);
    CHECK(is_d2c(g));
    // u together with any w-twin is dominating (w-class starts at 5+s).
    auto doms = dominating_edges(g);
    CHECK(std::find(doms.begin(), doms.end(), VertexPair(0, 5 + s)) !=
          doms.end());
  }
  CHECK_THROWS_AS(conclusion_construction(0), std::invalid_argument);
}
