#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <set>

#include "d2c/canonical.hpp"
#include "d2c/certificate.hpp"
#include "d2c/enumerate.hpp"
#include "d2c/families.hpp"
#include "test_util.hpp"

using namespace d2c;
using namespace testutil;

TEST_CASE("X/Y split on K33 is the bipartition") {
  Graph k33 = complete_bipartite(3, 3);
  PartitionUV part = partition_uv(k33, 0, 3);
  XYSplit split = build_xy(part);
  CHECK(std::popcount(split.x_side) + std::popcount(split.y_side) == 6);
  CHECK((split.x_side & split.y_side) == 0);
  std::uint64_t sides[2];
  REQUIRE(is_bipartite(k33, sides));
  CHECK((split.x_side == sides[0] || split.x_side == sides[1]));

  Assignment asg = build_assignment(k33, split);
  CHECK(asg.map.empty());
  CHECK(asg.free_nonedges.empty());
  EdgeIdentityVerdict id = verify_edge_identity(k33, split, asg);
  CHECK(id.holds());
  CHECK(id.m == 9);
  CHECK(id.x_size * id.y_size == 9);
}

TEST_CASE("the H5 certificate, end to end") {
  Graph h = h5();  // u=0, v=1, a1=2, a2=3, b1=4, b2=5
  VertexPair e = dominating_edges(h).front();  // (0, 4)
  PartitionUV part = partition_uv(h, e.a, e.b);
  XYSplit split = build_xy(part);
  CHECK(std::popcount(split.x_side) == 4);
  CHECK(std::popcount(split.y_side) == 2);

  Assignment asg = build_assignment(h, split);
  REQUIRE(asg.map.size() == 2);  // the two within-X edges a1b1, a2b2
  std::set<VertexPair> images;
  for (const AssignmentEntry& ent : asg.map) images.insert(ent.image());
  CHECK(images == std::set<VertexPair>{VertexPair(1, 2), VertexPair(1, 3)});
  CHECK(asg.free_nonedges.empty());

  EdgeIdentityVerdict id = verify_edge_identity(h, split, asg);
  CHECK(id.holds());
  CHECK(id.m == 8);
  CHECK(id.free_count == 0);

  // S_u and S_v are singletons, so the orientation is empty.
  FOrientation o = build_f_orientation(h, part, asg);
  CHECK(o.arcs.empty());

  // P_uv is nonempty: the matching route applies, the bound route throws.
  REQUIRE(part.p_uv != 0);
  PuvMatchingReport mr = verify_puv_matching(h, part, asg);
  CHECK(mr.all_ok());
  CHECK_THROWS_AS(certificate_bound(h, e.a, e.b), std::invalid_argument);
}

TEST_CASE("orientation features on synthetic digraphs") {
  FOrientation single;
  single.s_u = Graph::bit(0) | Graph::bit(1) | Graph::bit(2);
  single.arcs = {{0, 1}};
  OrientationFeatures f = orientation_features(single);
  CHECK(f.sources == std::vector<int>{0});
  CHECK(f.sinks == std::vector<int>{1});
  CHECK(f.directed_cycles.empty());
  CHECK(f.transitive_triangles.empty());
  REQUIRE(f.components.size() == 1);  // vertex 2 is isolated: no component
  CHECK(f.components[0].vertices == std::vector<int>{0, 1});
  CHECK(f.components[0].underlying_diameter == 1);
  CHECK(f.components[0].directed_diameter == kInfiniteDiameter);

  FOrientation tri;
  tri.s_u = 7;
  tri.arcs = {{0, 1}, {1, 2}, {2, 0}};
  f = orientation_features(tri);
  CHECK(f.sources.empty());
  CHECK(f.sinks.empty());
  REQUIRE(f.directed_cycles.size() == 1);
  CHECK(f.directed_cycles[0].size() == 3);
  CHECK(f.transitive_triangles.empty());
  REQUIRE(f.components.size() == 1);
  CHECK(f.components[0].directed_diameter == 2);
  CHECK(f.components[0].underlying_diameter == 1);

  FOrientation trans;
  trans.s_u = 7;
  trans.arcs = {{0, 1}, {0, 2}, {1, 2}};
  f = orientation_features(trans);
  CHECK(f.sources == std::vector<int>{0});
  CHECK(f.sinks == std::vector<int>{2});
  CHECK(f.directed_cycles.empty());
  REQUIRE(f.transitive_triangles.size() == 1);
  CHECK(f.transitive_triangles[0] == std::array<int, 3>{0, 1, 2});

  FOrientation pth;  // 0 -> 1 -> 2: weak component of underlying diameter 2
  pth.s_u = 7;
  pth.arcs = {{0, 1}, {1, 2}};
  f = orientation_features(pth);
  REQUIRE(f.components.size() == 1);
  CHECK(f.components[0].underlying_diameter == 2);
  CHECK(f.components[0].directed_diameter == kInfiniteDiameter);
  CHECK(f.components[0].arc_count == 2);
}

TEST_CASE("bound verdict fixtures") {
  BoundVerdicts k = bound_verdicts(complete_bipartite(3, 3));
  CHECK(k.murty_simon_ok);
  CHECK(k.murty_simon_equality);
  CHECK_FALSE(k.strengthened_attained);
  CHECK_FALSE(k.theorem4_applicable);

  BoundVerdicts h = bound_verdicts(h5());
  CHECK(h.m == 8);  // = ⌊36/4⌋ − 1
  CHECK(h.murty_simon_ok);
  CHECK_FALSE(h.murty_simon_equality);
  CHECK_FALSE(h.strengthened_attained);  // 8 > ⌊25/4⌋+1 = 7
  CHECK_FALSE(h.theorem4_applicable);    // the H5 exemption
  CHECK(h.theorem4_ok);

  BoundVerdicts c = bound_verdicts(cycle(5));
  CHECK(c.murty_simon_ok);
  CHECK(c.strengthened_attained);
  CHECK_FALSE(c.theorem4_applicable);  // no dominating edge
}

TEST_CASE("unbalanced equality at the Murty-Simon bound is flagged") {
  // A non-balanced graph with m = ⌊n²/4⌋ would violate the equality
  // condition; fabricate one (not D2C, the verdict is arithmetic).
  Graph g = complete_bipartite(2, 4);  // m = 8, ⌊36/4⌋ = 9
  g.add_edge(0, 1);                    // m = 9, not complete bipartite
  BoundVerdicts v = bound_verdicts(g);
  CHECK(v.murty_simon_equality);
  CHECK_FALSE(v.murty_simon_ok);
}

TEST_CASE("exhaustive certificate suite for n <= 7") {
  Graph h5g = h5();
  for (int n = 3; n <= 7; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      if (!is_d2c(g)) return;
      bool bip = is_bipartite(g);
      bool is_h5 = g.n == 6 && are_isomorphic(g, h5g);
      for (const VertexPair& e : dominating_edges(g)) {
        PartitionUV part = partition_uv(g, e.a, e.b);
        XYSplit split = build_xy(part);
        Assignment asg;  // build_assignment verifies injectivity internally
        REQUIRE_NOTHROW(asg = build_assignment(g, split));
        EdgeIdentityVerdict id = verify_edge_identity(g, split, asg);
        CHECK(id.holds());
        int fre = static_cast<int>(asg.free_nonedges.size());
        // The free(f) lower bounds live inside proofs by contradiction that
        // assume the edge bound fails; free(f) = 0 does occur (H5 and two
        // order-7 graphs have m = |X||Y|). Check the implications together
        // with the bounds they deliver.
        int m = g.edge_count();
        if (!bip) {
          CHECK(m <= n * n / 4 - 1);
          if (m >= n * n / 4) CHECK(fre >= 1);
          if (!is_h5) {
            CHECK(m <= n * n / 4 - 2);
            if (m >= n * n / 4 - 1) CHECK(fre >= 2);
          }
        }

        if (part.p_uv == 0) {
          FOrientation o = build_f_orientation(g, part, asg);
          OrientationLemmaReport lr =
              verify_orientation_lemmas(g, part, asg, o);
          CHECK(lr.all_ok());
          CertificateBound cb = certificate_bound(g, e.a, e.b);
          CHECK(cb.implied_bound <= fre);
          CHECK(g.edge_count() <= n * n / 4 - cb.implied_bound);
        } else {
          PuvMatchingReport mr = verify_puv_matching(g, part, asg);
          CHECK(mr.all_ok());
        }
      }
    });
  }
}

TEST_CASE("P_uv matching on every dominating edge of t_family(8)") {
  Graph t8 = t_family(8);
  for (const VertexPair& e : dominating_edges(t8)) {
    PartitionUV part = partition_uv(t8, e.a, e.b);
    XYSplit split = build_xy(part);
    Assignment asg = build_assignment(t8, split);
    if (part.p_uv == 0) continue;
    CHECK(verify_puv_matching(t8, part, asg).all_ok());
  }
}
