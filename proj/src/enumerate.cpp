#include "d2c/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "d2c/analysis.hpp"
#include "d2c/canonical.hpp"
#include "d2c/families.hpp"

namespace d2c {

CensusCounts& CensusCounts::operator+=(const CensusCounts& o) {
  total_graphs += o.total_graphs;
  d2c += o.d2c;
  d2c_nonbipartite += o.d2c_nonbipartite;
  with_dominating_edge += o.with_dominating_edge;
  attaining_murty_simon += o.attaining_murty_simon;
  attaining_strengthened += o.attaining_strengthened;
  exceptions_not_in_c5plus += o.exceptions_not_in_c5plus;
  return *this;
}

namespace {

/// Canonical-augmentation walk: a graph of order k+1 is accepted from its
/// parent of order k exactly when the newly added vertex lies in the same
/// Aut(child)-orbit as the vertex at the last canonical position. Together
/// with one extension per Aut(parent)-orbit of neighbourhood subsets, this
/// yields every isomorphism class exactly once.
struct Walker {
  int target = 0;
  int edge_cap = -1;  // prune subtrees with more edges; -1 disables
  const std::function<void(const Graph&)>* leaf_fn = nullptr;
  // When set, stop descending at this order and report accepted graphs
  // here instead of recursing (used to enumerate shard roots).
  int stop_order = -1;
  std::vector<Graph>* stop_sink = nullptr;

  void run_from(const Graph& root) {
    CanonResult canon = canonicalize(root);
    recurse(root, canon);
  }

  void recurse(const Graph& g, const CanonResult& canon) {
    if (g.n == stop_order) {
      stop_sink->push_back(g);
      return;
    }
    if (g.n == target) {
      (*leaf_fn)(g);
      return;
    }

    // Orbits of extension subsets under Aut(g): each subset of V(g) is a
    // candidate neighbourhood for the new vertex; equivalent subsets give
    // isomorphic children, so only orbit representatives are extended.
    const std::uint64_t limit = std::uint64_t{1} << g.n;
    std::array<std::uint64_t, (1u << 16) / 64> seen{};  // bitset over subsets
    auto mark = [&](std::uint64_t s) {
      std::uint64_t& w = seen[s >> 6];
      std::uint64_t b = std::uint64_t{1} << (s & 63);
      bool fresh = !(w & b);
      w |= b;
      return fresh;
    };
    std::vector<std::uint64_t> queue;
    for (std::uint64_t s = 0; s < limit; ++s) {
      if (!mark(s)) continue;
      if (!canon.aut_generators.empty()) {
        queue.assign(1, s);
        while (!queue.empty()) {
          std::uint64_t cur = queue.back();
          queue.pop_back();
          for (const auto& a : canon.aut_generators) {
            std::uint64_t img = 0;
            std::uint64_t rest = cur;
            while (rest) {
              int v = std::countr_zero(rest);
              rest &= rest - 1;
              img |= Graph::bit(a[v]);
            }
            if (mark(img)) queue.push_back(img);
          }
        }
      }
      extend(g, s);
    }
  }

  void extend(const Graph& g, std::uint64_t s) {
    Graph child = g;
    int nv = child.n++;
    child.adj[nv] = s;
    std::uint64_t rest = s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      child.adj[v] |= Graph::bit(nv);
    }

    if (edge_cap >= 0 && child.edge_count() > edge_cap) return;
    // Necessary condition for acceptance: the last canonical position
    // always holds a maximum-degree vertex, so the new vertex must be one.
    if (std::popcount(s) != child.max_degree()) return;

    CanonResult canon = canonicalize(child);
    auto orbits = canon.vertex_orbits();
    if (orbits[nv] != orbits[canon.vertex_at(child.n - 1)]) return;
    recurse(child, canon);
  }
};

std::vector<Graph> roots_at_order(int n, int root_order, int edge_cap) {
  std::vector<Graph> roots;
  Walker w;
  w.target = n;
  w.edge_cap = edge_cap;
  w.stop_order = root_order;
  w.stop_sink = &roots;
  w.run_from(Graph(1));
  return roots;
}

void classify(const Graph& g, SearchReport& rep) {
  CensusCounts& c = rep.counts;
  ++c.total_graphs;
  if (!is_d2c(g)) return;
  ++c.d2c;
  bool bip = is_bipartite(g);
  if (!bip) ++c.d2c_nonbipartite;
  if (!dominating_edges(g).empty()) ++c.with_dominating_edge;
  int n = g.n, m = g.edge_count();
  if (m == n * n / 4) ++c.attaining_murty_simon;
  if (m == (n - 1) * (n - 1) / 4 + 1) {
    ++c.attaining_strengthened;
    if (!bip && !is_in_c5plus(g)) {
      ++c.exceptions_not_in_c5plus;
      rep.witnesses.push_back(to_graph6(g));
    }
  }
}

void finalize(SearchReport& rep) {
  std::sort(rep.witnesses.begin(), rep.witnesses.end());
}

int effective_cap(int n, const CensusOptions& options) {
  return options.prune_edge_bound ? n * n / 4 : -1;
}

}  // namespace

void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("for_each_graph: order out of range");
  Walker w;
  w.target = n;
  w.leaf_fn = &fn;
  w.run_from(Graph(1));
}

void for_each_graph_parallel(int n,
                             const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("for_each_graph_parallel: order out of range");
  int root_order = std::min(n, 5);  // 34 subtrees at order 5
  std::vector<Graph> roots = roots_at_order(n, root_order, -1);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Walker w;
    w.target = n;
    w.leaf_fn = &fn;
    w.run_from(roots[i]);
  }
}

SearchReport census(int n, const CensusOptions& options) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("census: order out of range");
  SearchReport rep;
  rep.n = n;
  std::function<void(const Graph&)> fn = [&](const Graph& g) {
    classify(g, rep);
  };
  Walker w;
  w.target = n;
  w.edge_cap = effective_cap(n, options);
  w.leaf_fn = &fn;
  w.run_from(Graph(1));
  finalize(rep);
  rep.roots_covered = {0};
  return rep;
}

std::vector<ShardDescriptor> shard(int n, int prefix_depth) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("shard: order out of range");
  if (prefix_depth < 0 || prefix_depth >= n)
    throw std::invalid_argument("shard: need 0 <= prefix_depth < n");
  std::vector<Graph> roots = roots_at_order(n, 1 + prefix_depth, -1);
  std::vector<ShardDescriptor> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    ShardDescriptor d;
    d.n = n;
    d.prefix_depth = prefix_depth;
    d.root_index = static_cast<int>(i);
    d.root_count = static_cast<int>(roots.size());
    d.root_graph6 = to_graph6(roots[i]);
    out.push_back(std::move(d));
  }
  return out;
}

SearchReport census_shard(const ShardDescriptor& desc,
                          const CensusOptions& options) {
  SearchReport rep;
  rep.n = desc.n;
  rep.prefix_depth = desc.prefix_depth;
  rep.root_count = desc.root_count;
  rep.roots_covered = {desc.root_index};

  Graph root = parse_graph6(desc.root_graph6);
  int cap = effective_cap(desc.n, options);
  if (cap >= 0 && root.edge_count() > cap) {
    finalize(rep);
    return rep;
  }
  std::function<void(const Graph&)> fn = [&](const Graph& g) {
    classify(g, rep);
  };
  Walker w;
  w.target = desc.n;
  w.edge_cap = cap;
  w.leaf_fn = &fn;
  w.run_from(root);
  finalize(rep);
  return rep;
}

SearchReport merge(const std::vector<SearchReport>& parts) {
  if (parts.empty()) throw std::invalid_argument("merge: no reports");
  SearchReport out;
  out.n = parts[0].n;
  out.prefix_depth = parts[0].prefix_depth;
  out.root_count = parts[0].root_count;
  std::vector<int> covered;
  for (const SearchReport& p : parts) {
    if (p.n != out.n || p.prefix_depth != out.prefix_depth ||
        p.root_count != out.root_count)
      throw std::invalid_argument("merge: reports from different shardings");
    out.counts += p.counts;
    out.witnesses.insert(out.witnesses.end(), p.witnesses.begin(),
                         p.witnesses.end());
    covered.insert(covered.end(), p.roots_covered.begin(),
                   p.roots_covered.end());
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
    throw std::invalid_argument("merge: overlapping shards");
  if (static_cast<int>(covered.size()) != out.root_count)
    throw std::invalid_argument("merge: missing shards");
  for (int i = 0; i < out.root_count; ++i)
    if (covered[i] != i) throw std::invalid_argument("merge: missing shards");
  out.roots_covered = std::move(covered);
  finalize(out);
  return out;
}

SearchReport census_parallel(int n, const CensusOptions& options) {
  int depth = std::min(n - 1, 4);
  std::vector<ShardDescriptor> descs = shard(n, depth);
  std::vector<SearchReport> parts(descs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < descs.size(); ++i)
    parts[i] = census_shard(descs[i], options);
  SearchReport rep = merge(parts);
  // Present the merged result as a plain full census.
  rep.prefix_depth = 0;
  rep.root_count = 1;
  rep.roots_covered = {0};
  return rep;
}

}  // namespace d2c
