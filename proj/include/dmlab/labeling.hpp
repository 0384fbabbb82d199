#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dmlab/graph.hpp"
#include "dmlab/qw.hpp"

namespace dmlab {

/// Labels are 64-bit so that weights never overflow for orders up to 2^30.
using Label = std::int64_t;
inline constexpr std::int64_t kMaxLabelOrder = std::int64_t{1} << 30;

/// Vertex-indexed labels meant to be a bijection onto
/// N = {1-n, 3-n, ..., n-1}. The container itself does not enforce this;
/// verify() reports it.
struct CenteredLabeling {
  std::vector<Label> labels;

  int order() const { return static_cast<int>(labels.size()); }
  friend bool operator==(const CenteredLabeling&, const CenteredLabeling&) = default;
};

/// Vertex-indexed labels meant to be a permutation of {1, ..., n}.
struct StandardLabeling {
  std::vector<Label> labels;

  int order() const { return static_cast<int>(labels.size()); }
  friend bool operator==(const StandardLabeling&, const StandardLabeling&) = default;
};

/// The sorted label set N for order n.
std::vector<Label> centered_label_set(int order);

bool is_centered_bijection(std::span<const Label> labels);
bool is_standard_bijection(std::span<const Label> labels);

struct VerificationReport {
  std::vector<Label> weights;
  bool bijective = false;
  /// Target weight: 0 for centered labelings, r(n+1)/2 for standard ones.
  Label target = 0;
  bool pass = false;
  /// Lowest vertex whose weight misses the target, if any.
  std::optional<Vertex> first_violation;
};

/// Computes every weight (no early exit). Throws PreconditionError on an
/// order mismatch.
VerificationReport verify(const Graph& g, const CenteredLabeling& lab);

/// Standard scheme; the target is r(n+1)/2 and requires g to be r-regular
/// (pass is false otherwise).
VerificationReport verify_standard(const Graph& g, const StandardLabeling& lab);

/// l~(u) = (l(u) + n + 1) / 2. Throws PreconditionError if the input is not
/// a bijection onto N.
StandardLabeling to_standard(const CenteredLabeling& lab);
/// l(u) = 2 l~(u) - 1 - n.
CenteredLabeling from_standard(const StandardLabeling& lab);

/// Labels u_i, v_i of W(k) with 2k-2i-1 and -(2k-2i-1).
CenteredLabeling wreath_labeling(int k);

/// l_i = l(x_i) + l(y_i), i in Z_m.
std::vector<Label> block_labels(const QWSequence& s, const CenteredLabeling& lab);

/// Checks, for every i in Z_m, the recurrence a zero-weight labeling forces:
///   s_i = s_{i+1} = 1:  l_{i+2} = -l_i
///   s_i = 0, s_{i+1} = 1:  2 l_{i+2} = -(l_i + l_{i+1})
///   s_i = 1, s_{i+1} = 0:  l_{i+2} = -2 l_i - l_{i+1}
bool check_block_recurrence(const QWSequence& s, std::span<const Label> blocks);

/// True iff l_{i+1} != -l_{i+2} for every i with s_i = 0.
bool check_rung_blocks_distinct(const QWSequence& s, std::span<const Label> blocks);

}  // namespace dmlab
