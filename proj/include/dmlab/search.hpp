#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dmlab/graph.hpp"
#include "dmlab/labeling.hpp"
#include "dmlab/qw.hpp"

namespace dmlab {

enum class SearchMode { FindOne, CountAll };

/// Dynamic: forced vertices first, then most labeled neighbours, then index.
/// Static: descending degree then index, fixed for the whole run.
enum class VertexOrder { Dynamic, Static };

struct PruningRules {
  /// A vertex whose neighbourhood is fully labeled must have weight 0. Also
  /// forces the label of a vertex that is the last unlabeled neighbour of
  /// some vertex.
  bool zero_sum_closure = true;
  /// Partial neighbour sums plus the smallest / largest possible completions
  /// from the unused labels must straddle 0.
  bool interval = true;
  /// Only positive labels at the root; every labeling's negation is another.
  bool sign_symmetry = true;
};

struct SearchOptions {
  SearchMode mode = SearchMode::FindOne;
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget_secs;
  /// Run corollary_filter first; a RuledOut graph is reported NotFound
  /// without searching.
  bool prefilter = true;
  VertexOrder order = VertexOrder::Dynamic;
  PruningRules pruning;
};

enum class SearchVerdict { Found, NotFound, BudgetExhausted };
const char* to_string(SearchVerdict v);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t closure_prunes = 0;
  std::uint64_t interval_prunes = 0;
  std::uint64_t forced_conflicts = 0;
  bool prefilter_ruled_out = false;
};

struct SearchOutcome {
  SearchVerdict verdict = SearchVerdict::NotFound;
  /// First labeling found (both modes).
  std::optional<CenteredLabeling> labeling;
  /// Count mode: labelings with the root label positive, and all labelings.
  std::uint64_t folded_count = 0;
  std::uint64_t raw_count = 0;
  SearchStats stats;
};

/// Complete backtracking search for distance magic labelings.
///
/// Requires a connected, regular graph of even valency and even order;
/// throws PreconditionError otherwise. Without budgets, NotFound proves that
/// no labeling exists.
SearchOutcome find_labeling(const Graph& g, const SearchOptions& opts = {});

/// Builds QW(profile) and searches it to completion. Throws RangeError when
/// a budget in `opts` runs out before a verdict.
bool decide_profile(const SegmentProfile& profile, const SearchOptions& opts = {});

}  // namespace dmlab
