#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "d2c/graph.hpp"

namespace d2c {

/// Per-order census counters. All counts except total_graphs are over
/// isomorphism classes of D2C graphs.
struct CensusCounts {
  long long total_graphs = 0;
  long long d2c = 0;
  long long d2c_nonbipartite = 0;
  long long with_dominating_edge = 0;
  long long attaining_murty_simon = 0;    // m = ⌊n²/4⌋
  long long attaining_strengthened = 0;   // m = ⌊(n−1)²/4⌋ + 1
  long long exceptions_not_in_c5plus = 0; // non-bipartite, strengthened, ∉ C5+

  CensusCounts& operator+=(const CensusCounts& o);
  bool operator==(const CensusCounts&) const = default;
};

struct CensusOptions {
  /// Skip subtrees that already exceed ⌊n²/4⌋ edges. Safe for all D2C
  /// classification counts (the conjecture is proven at these orders) but
  /// total_graphs then counts only the surviving classes.
  bool prune_edge_bound = false;
};

/// One unit of sharded work: the subtree below a fixed accepted graph of
/// order 1 + prefix_depth, identified by its position in generation order.
struct ShardDescriptor {
  int n = 0;             // target order
  int prefix_depth = 0;  // roots have order 1 + prefix_depth
  int root_index = 0;
  int root_count = 0;
  std::string root_graph6;
};

struct SearchReport {
  int n = 0;
  CensusCounts counts;
  std::vector<std::string> witnesses;  // sorted graph6 of the exceptions

  // Shard coverage, used by merge to reject gaps and overlaps.
  int prefix_depth = 0;
  int root_count = 1;
  std::vector<int> roots_covered;  // full census covers {0..root_count-1}

  bool operator==(const SearchReport&) const = default;
};

/// Calls fn exactly once per isomorphism class of graphs of order n,
/// generated by canonical augmentation. 1 <= n <= 11 is practical.
void for_each_graph(int n, const std::function<void(const Graph&)>& fn);

/// Same stream, distributed over OpenMP threads by generation subtree.
/// fn must be thread-safe; the visiting order is unspecified.
void for_each_graph_parallel(int n, const std::function<void(const Graph&)>& fn);

SearchReport census(int n, const CensusOptions& options = {});

/// Census with the subtrees processed in parallel; identical report.
SearchReport census_parallel(int n, const CensusOptions& options = {});

/// Descriptors for every generation subtree rooted at order 1+prefix_depth.
/// prefix_depth = 0 yields the single full-census shard.
std::vector<ShardDescriptor> shard(int n, int prefix_depth);

SearchReport census_shard(const ShardDescriptor& desc,
                          const CensusOptions& options = {});

/// Sums counts and unions witnesses. Throws std::invalid_argument when the
/// parts disagree on n/depth or their shard coverage overlaps or has gaps.
SearchReport merge(const std::vector<SearchReport>& parts);

}  // namespace d2c
