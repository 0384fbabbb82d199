#include "dmlab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "dmlab/error.hpp"
#include "dmlab/search.hpp"
#include "dmlab/spectral.hpp"

namespace dmlab {

namespace {

using Mask = std::uint32_t;

// Vertex-by-vertex edge completion. The lowest unsaturated vertex v picks its
// missing neighbours among higher unsaturated vertices. Candidates with the
// same current neighbourhood are interchangeable, so within each such class
// only a prefix is chosen. Survivors are deduplicated by certificate.
class RegularGenerator {
 public:
  explicit RegularGenerator(const EnumerationTask& task)
      : n_(task.order), r_(task.valency), connected_(task.connected_only), adj_(n_, 0), deg_(n_, 0) {}

  std::vector<Graph> run() {
    extend();
    return std::move(found_);
  }

 private:
  void add_edge(int a, int b) {
    adj_[a] |= Mask{1} << b;
    adj_[b] |= Mask{1} << a;
    ++deg_[a];
    ++deg_[b];
  }
  void remove_edge(int a, int b) {
    adj_[a] &= ~(Mask{1} << b);
    adj_[b] &= ~(Mask{1} << a);
    --deg_[a];
    --deg_[b];
  }

  bool feasible() const {
    Mask open = 0;
    for (int u = 0; u < n_; ++u)
      if (deg_[u] < r_) open |= Mask{1} << u;
    for (int u = 0; u < n_; ++u) {
      if (deg_[u] >= r_) continue;
      const Mask avail = open & ~adj_[u] & ~(Mask{1} << u);
      if (std::popcount(avail) < r_ - deg_[u]) return false;
    }
    return true;
  }

  // True when the component of vertex 0 is saturated but does not cover
  // every vertex: no completion can be connected.
  bool component_closed() const {
    Mask seen = 1, frontier = 1;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    if (std::popcount(seen) == n_) return false;
    for (Mask s = seen; s; s &= s - 1)
      if (deg_[std::countr_zero(s)] < r_) return false;
    return true;
  }

  void emit() {
    std::vector<Edge> edges;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (adj_[a] >> b & 1) edges.emplace_back(a, b);
    Graph g(n_, edges);
    if (connected_ && !is_connected(g)) return;
    if (seen_.insert(canonical_certificate(g)).second) found_.push_back(std::move(g));
  }

  void extend() {
    if (connected_ && n_ > 1 && component_closed()) return;
    int v = 0;
    while (v < n_ && deg_[v] == r_) ++v;
    if (v == n_) {
      emit();
      return;
    }
    // Classes of eligible partners keyed by current neighbourhood.
    std::map<Mask, std::vector<int>> by_nbhd;
    for (int u = v + 1; u < n_; ++u)
      if (deg_[u] < r_ && !(adj_[v] >> u & 1)) by_nbhd[adj_[u]].push_back(u);
    std::vector<std::vector<int>> classes;
    for (auto& [mask, members] : by_nbhd) classes.push_back(std::move(members));
    std::vector<int> chosen;
    pick(v, classes, 0, r_ - deg_[v], chosen);
  }

  void pick(int v, const std::vector<std::vector<int>>& classes, std::size_t cls, int need,
            std::vector<int>& chosen) {
    if (need == 0) {
      for (int u : chosen) add_edge(v, u);
      if (feasible()) extend();
      for (int u : chosen) remove_edge(v, u);
      return;
    }
    if (cls == classes.size()) return;
    const auto& members = classes[cls];
    const int most = std::min<int>(need, static_cast<int>(members.size()));
    for (int take = most; take >= 0; --take) {
      for (int k = 0; k < take; ++k) chosen.push_back(members[k]);
      pick(v, classes, cls + 1, need - take, chosen);
      chosen.resize(chosen.size() - take);
    }
  }

  const int n_, r_;
  const bool connected_;
  std::vector<Mask> adj_;
  std::vector<int> deg_;
  std::set<CanonicalCertificate> seen_;
  std::vector<Graph> found_;
};

void check_task(const EnumerationTask& task) {
  if (task.order < 1) throw PreconditionError("enumerate: order must be at least 1");
  if (task.valency < 0) throw PreconditionError("enumerate: valency must be non-negative");
  if (task.valency > 0 && task.valency >= task.order)
    throw PreconditionError("enumerate: valency " + std::to_string(task.valency) +
                            " needs more than " + std::to_string(task.order) + " vertices");
  if ((task.order * task.valency) % 2 != 0)
    throw PreconditionError("enumerate: n*r must be even");
  if (task.order > kEnumerationMaxOrder)
    throw RangeError("enumerate: order " + std::to_string(task.order) +
                     " is beyond the guaranteed range (n <= " +
                     std::to_string(kEnumerationMaxOrder) + ")");
}

}  // namespace

std::vector<Graph> enumerate_regular(const EnumerationTask& task) {
  check_task(task);
  auto graphs = RegularGenerator(task).run();
  if (task.sorted) {
    std::vector<std::pair<CanonicalCertificate, std::size_t>> keyed;
    for (std::size_t k = 0; k < graphs.size(); ++k)
      keyed.emplace_back(canonical_certificate(graphs[k]), k);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Graph> out;
    for (auto& [cert, k] : keyed) out.push_back(graphs[k]);
    return out;
  }
  return graphs;
}

void enumerate_regular(const EnumerationTask& task, const GraphSink& sink) {
  for (const auto& g : enumerate_regular(task)) sink(g);
}

std::vector<CensusRow> census_pipeline(const std::vector<int>& orders, bool confirm_by_search) {
  std::vector<CensusRow> rows;
  for (int n : orders) {
    CensusRow row;
    row.order = n;
    for (const auto& g : enumerate_regular(EnumerationTask{n, 4, true, true})) {
      ++row.graphs;
      if (!corollary_filter(g).candidate) continue;
      ++row.candidates;
      row.candidate_graphs.push_back(g);
      // The centered search needs even order; odd-order candidates stay unconfirmed.
      if (confirm_by_search && n % 2 == 0) {
        SearchOptions opts;
        opts.prefilter = false;
        if (find_labeling(g, opts).verdict == SearchVerdict::Found) ++row.distance_magic;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dmlab
