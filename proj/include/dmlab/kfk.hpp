#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "dmlab/graph.hpp"
#include "dmlab/labeling.hpp"

namespace dmlab {

/// 4-cycle (a, b, c, d) with edges ab, bc, cd, da whose antipodal pairs
/// (a, c) and (b, d) carry labels summing to 0. Reported with a the least
/// vertex and b < d, so each cycle appears once.
struct ZeroAntipodalCycle {
  std::array<Vertex, 4> v;

  friend auto operator<=>(const ZeroAntipodalCycle&, const ZeroAntipodalCycle&) = default;
};

/// All qualifying 4-cycles in lexicographic order. Throws PreconditionError
/// when `lab` is not a distance magic labeling of g.
std::vector<ZeroAntipodalCycle> find_zero_antipodal_cycles(const Graph& g, const CenteredLabeling& lab);

struct Expansion {
  Graph graph;
  CenteredLabeling labeling;
};

/// Deletes the edges of the cycle, adds vertices n and n+1 joined to all
/// four cycle vertices, and labels them +(n+1) and -(n+1). The result is
/// re-verified; a failed audit throws logic_error.
Expansion expand(const Graph& g, const CenteredLabeling& lab, const ZeroAntipodalCycle& cycle);

/// Uses the lexicographically least qualifying cycle. Throws
/// PreconditionError when there is none.
Expansion expand(const Graph& g, const CenteredLabeling& lab);

}  // namespace dmlab
