#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmlab/graph.hpp"

namespace dmlab {

/// Bit sequence S = [s_0, ..., s_{m-1}] defining a quasi wreath graph.
///
/// Invariants: m >= 3, s_0 = 0, s_{m-1} = 1 and no two consecutive zeros
/// (positions i, i+1 for i < m-1). Only constructible through
/// validate_sequence / profile_to_sequence.
class QWSequence {
 public:
  int length() const { return static_cast<int>(bits_.size()); }
  int operator[](int i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const QWSequence&, const QWSequence&) = default;

 private:
  explicit QWSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
  friend QWSequence validate_sequence(std::span<const int> bits);

  std::vector<std::uint8_t> bits_;
};

/// Run lengths (a_1, ..., a_r) of a sequence; every part is at least 2.
using SegmentProfile = std::vector<int>;

enum class SegmentType { A, B, Other };

/// Segment i covers blocks start+1 .. start+length (indices mod m).
struct Segment {
  int index;   // 1-based
  int start;   // k_i, the position of the zero bit opening the segment
  int length;
  SegmentType type;

  friend bool operator==(const Segment&, const Segment&) = default;
};

SegmentType segment_type(int length);
const char* to_string(SegmentType t);

QWSequence validate_sequence(std::span<const int> bits);
inline QWSequence validate_sequence(std::initializer_list<int> bits) {
  return validate_sequence(std::span<const int>(bits.begin(), bits.size()));
}

QWSequence profile_to_sequence(std::span<const int> profile);
inline QWSequence profile_to_sequence(std::initializer_list<int> profile) {
  return profile_to_sequence(std::span<const int>(profile.begin(), profile.size()));
}
SegmentProfile sequence_to_profile(const QWSequence& s);

/// Parses "11,3,5,3" into a profile. Throws ParseError.
SegmentProfile parse_profile(std::string_view text);
std::string format_profile(std::span<const int> profile);

/// Vertex convention: x_i -> i, y_i -> m + i.
inline Vertex qw_x(int /*m*/, int i) { return i; }
inline Vertex qw_y(int m, int i) { return m + i; }

Graph build_qw(const QWSequence& s);

/// W(k): u_i -> i, v_i -> k + i, N(u_i) = N(v_i) = {u_{i+-1}, v_{i+-1}}.
Graph build_wreath(int k);

std::vector<Segment> segments(const QWSequence& s);

struct Classification {
  bool distance_magic = false;
  /// Empty when distance magic; otherwise one line per offending segment
  /// and/or the odd type-B count.
  std::vector<std::string> reasons;
  int type_a = 0;
  int type_b = 0;
  int other = 0;
};

/// Decides distance-magicness of QW(S): every segment length odd and an even
/// number of lengths congruent to 1 mod 4.
Classification classify(const QWSequence& s);

}  // namespace dmlab
