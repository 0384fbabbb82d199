#include "dmlab/constructive.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "dmlab/error.hpp"

namespace dmlab {

SegmentPlan plan(const QWSequence& s) {
  const auto verdict = classify(s);
  if (!verdict.distance_magic)
    throw PreconditionError("QW(" + format_profile(sequence_to_profile(s)) +
                            ") is not distance magic: " + verdict.reasons.front());
  SegmentPlan p;
  p.m = s.length();
  int b = 0;
  for (const auto& seg : segments(s)) {
    p.segments.push_back({seg.index, seg.start, seg.start + seg.length, seg.length, seg.type, b,
                          std::nullopt});
    if (seg.type == SegmentType::B) ++b;
  }
  int open = 0;
  for (auto& e : p.segments) {
    if (e.type != SegmentType::B) continue;
    if (e.preceding_b % 2 == 0) {
      open = e.index;
    } else {
      e.partner = open;
      p.segments[open - 1].partner = e.index;
      p.pairs.emplace_back(open, e.index);
    }
  }
  return p;
}

const char* to_string(BlockRule r) {
  switch (r) {
    case BlockRule::First: return "first";
    case BlockRule::Second: return "second";
    case BlockRule::Interior: return "interior";
    case BlockRule::PairFar: return "pair-far";
    case BlockRule::PairNear: return "pair-near";
    case BlockRule::PairLast: return "pair-last";
    case BlockRule::Penultimate: return "penultimate";
    case BlockRule::Last: return "last";
  }
  return "?";
}

namespace {

struct BlockAssignment {
  std::vector<Label> x, y;
  std::vector<std::optional<BlockRule>> rule;
};

class Builder {
 public:
  explicit Builder(int m) {
    out_.x.assign(m, 0);
    out_.y.assign(m, 0);
    out_.rule.assign(m, std::nullopt);
  }

  void put(int block, Label x, Label y, BlockRule rule) {
    auto& slot = out_.rule.at(block);
    if (slot)
      throw std::logic_error("block " + std::to_string(block) + " written by rule '" +
                             to_string(*slot) + "' and again by '" + to_string(rule) + "'");
    slot = rule;
    out_.x[block] = x;
    out_.y[block] = y;
  }

  BlockAssignment finish() && {
    for (std::size_t b = 0; b < out_.rule.size(); ++b)
      if (!out_.rule[b]) throw std::logic_error("block " + std::to_string(b) + " was never labeled");
    return std::move(out_);
  }

 private:
  BlockAssignment out_;
};

// <alpha, beta> for interior blocks, j >= 2.
std::pair<Label, Label> interior_offset(Label j) {
  switch (j % 4) {
    case 0: return {2 * j + 3, 2 * j + 3};
    case 1: return {2 * j - 1, 2 * j - 3};
    case 2: return {2 * j + 1, 2 * j + 1};
    default: return {2 * j + 1, 2 * j + 3};
  }
}

BlockAssignment assign_blocks(const QWSequence& s, bool tilde) {
  const SegmentPlan p = plan(s);
  Builder b(p.m);

  for (const auto& seg : p.segments) {
    const Label sgn = seg.sign();
    const Label base = 2 * Label{seg.start};
    b.put(seg.start, sgn * (base + 1), sgn * (-base - 3), BlockRule::First);
    b.put(seg.start + 1, sgn * (base + 3), sgn * (-base - 1), BlockRule::Second);
    for (int j = 2; j <= seg.length - 3; ++j) {
      auto [alpha, beta] = interior_offset(j);
      b.put(seg.start + j, sgn * (base + alpha), sgn * (-base - beta), BlockRule::Interior);
    }
  }

  for (auto [i, ip] : p.pairs) {
    const auto& first = p.segment(i);
    const auto& second = p.segment(ip);
    const Label near_end = 2 * Label{first.end};
    const Label far_end = 2 * Label{second.end};
    if (!tilde) {
      b.put(second.end - 2, near_end - 1, -near_end + 3, BlockRule::PairFar);
      b.put(first.end - 1, far_end - 3, -far_end + 3, BlockRule::PairLast);
    } else {
      b.put(second.end - 2, far_end - 3, -far_end + 3, BlockRule::PairFar);
      b.put(first.end - 1, near_end - 1, -near_end + 3, BlockRule::PairLast);
    }
    b.put(first.end - 2, near_end - 3, -near_end + 1, BlockRule::PairNear);
  }

  for (const auto& seg : p.segments) {
    if (seg.type == SegmentType::A && seg.length > 3) {
      const Label end = 2 * Label{seg.end};
      b.put(seg.end - 2, seg.sign() * (end - 5), seg.sign() * (-end + 7), BlockRule::Penultimate);
    }
  }

  for (const auto& seg : p.segments) {
    const bool last_rule = seg.type == SegmentType::A || seg.preceding_b % 2 == 1;
    if (last_rule) {
      const Label end = 2 * Label{seg.end};
      b.put(seg.end - 1, end - 1, -end + 1, BlockRule::Last);
    }
  }
  return std::move(b).finish();
}

CenteredLabeling to_labeling(const BlockAssignment& a) {
  const int m = static_cast<int>(a.x.size());
  CenteredLabeling lab;
  lab.labels.resize(2 * m);
  for (int i = 0; i < m; ++i) {
    lab.labels[qw_x(m, i)] = a.x[i];
    lab.labels[qw_y(m, i)] = a.y[i];
  }
  return lab;
}

}  // namespace

CenteredLabeling construct_labeling(const QWSequence& s) { return to_labeling(assign_blocks(s, false)); }

CenteredLabeling construct_tilde_labeling(const QWSequence& s) {
  return to_labeling(assign_blocks(s, true));
}

std::vector<BlockRule> block_rules(const QWSequence& s) {
  auto a = assign_blocks(s, false);
  std::vector<BlockRule> out;
  for (const auto& r : a.rule) out.push_back(*r);
  return out;
}

bool block_label_pattern(const QWSequence& s, const CenteredLabeling& lab) {
  const SegmentPlan p = plan(s);
  const auto blocks = block_labels(s, lab);
  for (Label l : blocks)
    if (l != 0 && l != 2 && l != -2) return false;
  for (const auto& seg : p.segments) {
    const Label sgn = seg.sign();
    auto at = [&](int j) { return blocks[seg.start + j]; };
    if (at(0) != -2 * sgn || at(1) != 2 * sgn) return false;
    for (int j = 2; j <= seg.length - 3; ++j) {
      const Label want = j % 2 == 0 ? 0 : (j % 4 == 1 ? 2 * sgn : -2 * sgn);
      if (at(j) != want) return false;
    }
    if (seg.length > 3) {
      const Label want = seg.type == SegmentType::A ? 2 * sgn : -2 * sgn;
      if (at(seg.length - 2) != want) return false;
    }
    if (at(seg.length - 1) != 0) return false;
  }
  return true;
}

bool tilde_ranges_hold(const QWSequence& s, const CenteredLabeling& tilde) {
  const SegmentPlan p = plan(s);
  const int m = p.m;
  if (tilde.order() != 2 * m) return false;
  for (const auto& seg : p.segments) {
    std::vector<Label> got;
    for (int blk = seg.start; blk < seg.end; ++blk) {
      got.push_back(tilde.labels[qw_x(m, blk)]);
      got.push_back(tilde.labels[qw_y(m, blk)]);
    }
    std::vector<Label> want;
    const Label lo = 2 * Label{seg.start} + 1, hi = 2 * Label{seg.end} - 1;
    for (Label v = lo; v <= hi; v += 2) {
      want.push_back(v);
      want.push_back(-v);
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) return false;
    if (std::abs(tilde.labels[qw_x(m, seg.start)]) != lo) return false;
    if (std::abs(tilde.labels[qw_y(m, seg.start + 1)]) != lo) return false;
  }
  return true;
}

}  // namespace dmlab
