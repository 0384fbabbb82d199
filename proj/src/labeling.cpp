#include "dmlab/labeling.hpp"

#include <algorithm>

#include "dmlab/error.hpp"

namespace dmlab {

std::vector<Label> centered_label_set(int order) {
  std::vector<Label> out(order);
  for (int k = 0; k < order; ++k) out[k] = 1 - order + 2 * Label{k};
  return out;
}

namespace {

bool is_permutation_of(std::span<const Label> labels, Label first, Label step) {
  const Label n = static_cast<Label>(labels.size());
  std::vector<char> seen(labels.size(), 0);
  for (Label l : labels) {
    Label offset = l - first;
    if (offset < 0 || offset % step != 0) return false;
    Label k = offset / step;
    if (k >= n || seen[k]) return false;
    seen[k] = 1;
  }
  return true;
}

void check_order(const Graph& g, int order) {
  if (g.order() != order)
    throw PreconditionError("labeling has " + std::to_string(order) + " labels but the graph has " +
                            std::to_string(g.order()) + " vertices");
  if (order > kMaxLabelOrder) throw RangeError("labeling order exceeds 2^30");
}

VerificationReport weigh(const Graph& g, std::span<const Label> labels, Label target, bool bijective) {
  VerificationReport r;
  r.bijective = bijective;
  r.target = target;
  r.weights.assign(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    Label w = 0;
    for (Vertex u : g.neighbors(v)) w += labels[u];
    r.weights[v] = w;
    if (w != target && !r.first_violation) r.first_violation = v;
  }
  r.pass = bijective && !r.first_violation;
  return r;
}

}  // namespace

bool is_centered_bijection(std::span<const Label> labels) {
  if (labels.empty()) return false;
  return is_permutation_of(labels, 1 - static_cast<Label>(labels.size()), 2);
}

bool is_standard_bijection(std::span<const Label> labels) {
  if (labels.empty()) return false;
  return is_permutation_of(labels, 1, 1);
}

VerificationReport verify(const Graph& g, const CenteredLabeling& lab) {
  check_order(g, lab.order());
  return weigh(g, lab.labels, 0, is_centered_bijection(lab.labels));
}

VerificationReport verify_standard(const Graph& g, const StandardLabeling& lab) {
  check_order(g, lab.order());
  const int r = g.degree(0);
  const Label n = g.order();
  // r(n+1)/2 is an integer only for even r or odd n; a non-integral target
  // can never be met, which weigh() records as a violation at vertex 0.
  const bool integral = (Label{r} * (n + 1)) % 2 == 0;
  auto report = weigh(g, lab.labels, Label{r} * (n + 1) / 2, is_standard_bijection(lab.labels));
  if (!integral || !is_regular(g, r)) {
    report.pass = false;
    if (!report.first_violation) report.first_violation = 0;
  }
  return report;
}

StandardLabeling to_standard(const CenteredLabeling& lab) {
  if (!is_centered_bijection(lab.labels))
    throw PreconditionError("to_standard: labels are not a bijection onto the centered set");
  const Label n = lab.order();
  StandardLabeling out;
  out.labels.reserve(lab.labels.size());
  for (Label l : lab.labels) out.labels.push_back((l + n + 1) / 2);
  return out;
}

CenteredLabeling from_standard(const StandardLabeling& lab) {
  if (!is_standard_bijection(lab.labels))
    throw PreconditionError("from_standard: labels are not a permutation of 1..n");
  const Label n = lab.order();
  CenteredLabeling out;
  out.labels.reserve(lab.labels.size());
  for (Label l : lab.labels) out.labels.push_back(2 * l - 1 - n);
  return out;
}

CenteredLabeling wreath_labeling(int k) {
  if (k < 3) throw PreconditionError("wreath graph W(k) needs k >= 3");
  CenteredLabeling out;
  out.labels.resize(2 * k);
  for (int i = 0; i < k; ++i) {
    const Label value = 2 * Label{k} - 2 * i - 1;
    out.labels[i] = value;
    out.labels[k + i] = -value;
  }
  return out;
}

std::vector<Label> block_labels(const QWSequence& s, const CenteredLabeling& lab) {
  const int m = s.length();
  if (lab.order() != 2 * m)
    throw PreconditionError("block_labels: labeling order " + std::to_string(lab.order()) +
                            " does not match 2m = " + std::to_string(2 * m));
  std::vector<Label> out(m);
  for (int i = 0; i < m; ++i) out[i] = lab.labels[qw_x(m, i)] + lab.labels[qw_y(m, i)];
  return out;
}

bool check_block_recurrence(const QWSequence& s, std::span<const Label> blocks) {
  const int m = s.length();
  if (static_cast<int>(blocks.size()) != m) return false;
  for (int i = 0; i < m; ++i) {
    const Label a = blocks[i], b = blocks[(i + 1) % m], c = blocks[(i + 2) % m];
    const int si = s[i], sj = s[(i + 1) % m];
    bool ok = true;
    if (si == 1 && sj == 1) ok = c == -a;
    else if (si == 0 && sj == 1) ok = 2 * c == -(a + b);
    else if (si == 1 && sj == 0) ok = c == -2 * a - b;
    if (!ok) return false;
  }
  return true;
}

bool check_rung_blocks_distinct(const QWSequence& s, std::span<const Label> blocks) {
  const int m = s.length();
  for (int i = 0; i < m; ++i)
    if (s[i] == 0 && blocks[(i + 1) % m] == -blocks[(i + 2) % m]) return false;
  return true;
}

}  // namespace dmlab
