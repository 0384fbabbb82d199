#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dmlab/graph.hpp"

namespace dmlab {

/// Largest order for which enumerate_regular is guaranteed complete.
inline constexpr int kEnumerationMaxOrder = 10;

struct EnumerationTask {
  int order = 0;
  int valency = 4;
  bool connected_only = true;
  /// Emit in lexicographic order of canonical certificates.
  bool sorted = false;
};

using GraphSink = std::function<void(const Graph&)>;

/// Emits every r-regular simple graph of the given order exactly once up to
/// isomorphism. Throws PreconditionError when n*r is odd or r >= n (r > 0),
/// and RangeError beyond kEnumerationMaxOrder.
void enumerate_regular(const EnumerationTask& task, const GraphSink& sink);
std::vector<Graph> enumerate_regular(const EnumerationTask& task);

struct CensusRow {
  int order = 0;
  std::uint64_t graphs = 0;
  std::uint64_t candidates = 0;
  /// Candidates confirmed by search; only filled when confirmation is requested.
  std::uint64_t distance_magic = 0;
  std::vector<Graph> candidate_graphs;
};

/// Enumerates connected 4-regular graphs for each order, runs
/// corollary_filter on each, and optionally confirms candidates by search.
std::vector<CensusRow> census_pipeline(const std::vector<int>& orders, bool confirm_by_search);

}  // namespace dmlab
