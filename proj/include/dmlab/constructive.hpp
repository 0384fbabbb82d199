#pragma once

#include <optional>
#include <vector>

#include "dmlab/labeling.hpp"
#include "dmlab/qw.hpp"

namespace dmlab {

/// Per-segment bookkeeping for the explicit labeling of a distance magic
/// QW-graph.
struct SegmentPlanEntry {
  int index;         // i, 1-based
  int start;         // k_i
  int end;           // k_{i+1}, with k_{t+1} = m
  int length;        // k_{i+1} - k_i
  SegmentType type;  // A or B
  int preceding_b;   // b_i: type-B segments before this one
  /// For a type-B segment with even b_i: the next type-B segment (i').
  /// For a type-B segment with odd b_i: the segment it is paired with (i).
  std::optional<int> partner;

  int sign() const { return preceding_b % 2 == 0 ? 1 : -1; }
};

struct SegmentPlan {
  int m = 0;
  std::vector<SegmentPlanEntry> segments;
  /// (i, i') for each type-B segment i with even b_i, in increasing i.
  std::vector<std::pair<int, int>> pairs;

  const SegmentPlanEntry& segment(int index) const { return segments[index - 1]; }
};

/// Throws PreconditionError unless classify(s) reports distance magic.
SegmentPlan plan(const QWSequence& s);

/// The explicit distance magic labeling of QW(S). Every block is written by
/// exactly one rule; a second write or a missing block raises logic_error.
CenteredLabeling construct_labeling(const QWSequence& s);

/// Variant that swaps the labels of blocks k_{i+1}-1 and k_{i'+1}-2 for each
/// type-B pair, so that every Gamma_i = B_{k_i} .. B_{k_{i+1}-1} maps onto
/// {1-2k_{i+1}, ..., -2k_i-1} u {2k_i+1, ..., 2k_{i+1}-1}. Same label
/// multiset as construct_labeling; not distance magic in general.
CenteredLabeling construct_tilde_labeling(const QWSequence& s);

/// Which rule assigned each block (for diagnostics and tests).
enum class BlockRule { First, Second, Interior, PairFar, PairNear, PairLast, Penultimate, Last };
const char* to_string(BlockRule r);
std::vector<BlockRule> block_rules(const QWSequence& s);

/// True iff every block label is 0 or +-2 and follows the per-segment
/// pattern: l_{k_i} = -2 sgn, l_{k_i+1} = 2 sgn, interior blocks 0 / 2 sgn /
/// -2 sgn for j = 0,2 / 1 / 3 mod 4, l_{k_{i+1}-2} = +-2 sgn (type A / B) and
/// l_{k_{i+1}-1} = 0, where sgn = (-1)^{b_i}.
bool block_label_pattern(const QWSequence& s, const CenteredLabeling& lab);

/// Checks the per-Gamma_i label ranges of a tilde labeling, and that the
/// smallest absolute value 2k_i+1 sits on x_{k_i} and y_{k_i+1}.
bool tilde_ranges_hold(const QWSequence& s, const CenteredLabeling& tilde);

}  // namespace dmlab
