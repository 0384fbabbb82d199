#include "dmlab/qw.hpp"

#include <charconv>

#include "dmlab/error.hpp"

namespace dmlab {

SegmentType segment_type(int length) {
  switch (length % 4) {
    case 3: return SegmentType::A;
    case 1: return SegmentType::B;
    default: return SegmentType::Other;
  }
}

const char* to_string(SegmentType t) {
  switch (t) {
    case SegmentType::A: return "A";
    case SegmentType::B: return "B";
    default: return "OTHER";
  }
}

QWSequence validate_sequence(std::span<const int> bits) {
  const int m = static_cast<int>(bits.size());
  if (m < 3) throw PreconditionError("QW sequence needs m >= 3, got m=" + std::to_string(m));
  for (int i = 0; i < m; ++i)
    if (bits[i] != 0 && bits[i] != 1)
      throw PreconditionError("QW sequence entry s_" + std::to_string(i) + " is not a bit");
  if (bits[0] != 0) throw PreconditionError("QW sequence must start with s_0 = 0");
  if (bits[m - 1] != 1) throw PreconditionError("QW sequence must end with s_{m-1} = 1");
  for (int i = 0; i + 1 < m; ++i)
    if (bits[i] == 0 && bits[i + 1] == 0)
      throw PreconditionError("QW sequence has consecutive zeros at position " + std::to_string(i));
  return QWSequence(std::vector<std::uint8_t>(bits.begin(), bits.end()));
}

QWSequence profile_to_sequence(std::span<const int> profile) {
  if (profile.empty()) throw PreconditionError("segment profile is empty");
  std::vector<int> bits;
  for (int a : profile) {
    if (a < 2) throw PreconditionError("segment length " + std::to_string(a) + " is below 2");
    bits.push_back(0);
    bits.insert(bits.end(), a - 1, 1);
  }
  return validate_sequence(bits);
}

SegmentProfile sequence_to_profile(const QWSequence& s) {
  SegmentProfile out;
  for (const auto& seg : segments(s)) out.push_back(seg.length);
  return out;
}

SegmentProfile parse_profile(std::string_view text) {
  SegmentProfile out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size() || value <= 0)
      throw ParseError("profile: '" + std::string(tok) + "' is not a positive integer");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_profile(std::span<const int> profile) {
  std::string out;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(profile[k]);
  }
  return out;
}

Graph build_qw(const QWSequence& s) {
  const int m = s.length();
  std::vector<Edge> edges;
  edges.reserve(4 * m);
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    edges.emplace_back(qw_x(m, i), qw_x(m, j));
    edges.emplace_back(qw_y(m, i), qw_y(m, j));
  }
  // Zeros are isolated, so the rungs from s_{i-1} = 0 and s_i = 0 never coincide.
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    if (s[i] == 0) {
      edges.emplace_back(qw_x(m, i), qw_y(m, i));
      edges.emplace_back(qw_x(m, j), qw_y(m, j));
    } else {
      edges.emplace_back(qw_x(m, i), qw_y(m, j));
      edges.emplace_back(qw_x(m, j), qw_y(m, i));
    }
  }
  return Graph(2 * m, edges);
}

Graph build_wreath(int k) {
  if (k < 3) throw PreconditionError("wreath graph W(k) needs k >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    edges.emplace_back(i, j);
    edges.emplace_back(k + i, k + j);
    edges.emplace_back(i, k + j);
    edges.emplace_back(k + i, j);
  }
  return Graph(2 * k, edges);
}

std::vector<Segment> segments(const QWSequence& s) {
  const int m = s.length();
  std::vector<int> zeros;
  for (int i = 0; i < m; ++i)
    if (s[i] == 0) zeros.push_back(i);
  std::vector<Segment> out;
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    const int start = zeros[k];
    const int next = k + 1 < zeros.size() ? zeros[k + 1] : m;
    out.push_back({static_cast<int>(k) + 1, start, next - start, segment_type(next - start)});
  }
  return out;
}

Classification classify(const QWSequence& s) {
  Classification c;
  for (const auto& seg : segments(s)) {
    switch (seg.type) {
      case SegmentType::A: ++c.type_a; break;
      case SegmentType::B: ++c.type_b; break;
      case SegmentType::Other:
        ++c.other;
        c.reasons.push_back("segment " + std::to_string(seg.index) + " (start " +
                            std::to_string(seg.start) + ") has even length " +
                            std::to_string(seg.length));
        break;
    }
  }
  if (c.type_b % 2 != 0)
    c.reasons.push_back("odd count of type-B segments (" + std::to_string(c.type_b) + ")");
  c.distance_magic = c.reasons.empty();
  return c;
}

}  // namespace dmlab
