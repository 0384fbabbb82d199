#include "dmlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>

#include "dmlab/error.hpp"
#include "dmlab/spectral.hpp"

namespace dmlab {

const char* to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::Found: return "Found";
    case SearchVerdict::NotFound: return "NotFound";
    case SearchVerdict::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

namespace {

class Backtracker {
 public:
  Backtracker(const Graph& g, const SearchOptions& opts)
      : g_(g), opts_(opts), n_(g.order()), valency_(g.degree(0)) {
    values_ = centered_label_set(n_);
    // Try order: descending absolute value, positive first.
    try_order_.resize(n_);
    std::iota(try_order_.begin(), try_order_.end(), 0);
    std::sort(try_order_.begin(), try_order_.end(), [&](int a, int b) {
      Label x = values_[a], y = values_[b];
      if (std::abs(x) != std::abs(y)) return std::abs(x) > std::abs(y);
      return x > y;
    });
    label_.assign(n_, 0);
    assigned_.assign(n_, 0);
    used_.assign(n_, 0);
    partial_.assign(n_, 0);
    open_.assign(n_, valency_);
    labeled_nb_.assign(n_, 0);
    static_order_.resize(n_);
    std::iota(static_order_.begin(), static_order_.end(), 0);
    std::stable_sort(static_order_.begin(), static_order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    start_ = std::chrono::steady_clock::now();
  }

  SearchOutcome run() {
    recurse(0);
    SearchOutcome out;
    out.stats = stats_;
    if (!first_.empty()) out.labeling = CenteredLabeling{first_};
    if (opts_.mode == SearchMode::CountAll) {
      if (opts_.pruning.sign_symmetry) {
        out.folded_count = count_;
        out.raw_count = 2 * count_;
      } else {
        out.raw_count = count_;
        out.folded_count = count_ / 2;
      }
    }
    if (exhausted_) out.verdict = SearchVerdict::BudgetExhausted;
    else out.verdict = first_.empty() ? SearchVerdict::NotFound : SearchVerdict::Found;
    return out;
  }

 private:
  enum class Step { Continue, Stop };

  bool budget_hit() {
    if (opts_.node_budget && stats_.nodes > *opts_.node_budget) return true;
    if (opts_.time_budget_secs && (stats_.nodes & 1023) == 1) {
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > *opts_.time_budget_secs) return true;
    }
    return false;
  }

  // Index into values_ of label l, or -1.
  int value_index(Label l) const {
    Label k = l + n_ - 1;
    if (k < 0 || k % 2 != 0 || k / 2 >= n_) return -1;
    return static_cast<int>(k / 2);
  }

  // Chooses the next vertex; sets `forced` to the value index it must take
  // (or -1). Returns -1 on a forced conflict.
  Vertex choose(int& forced, bool& conflict) {
    conflict = false;
    forced = -1;
    Vertex best = -1;
    int best_key = -1;
    for (int k = 0; k < n_; ++k) {
      Vertex v = opts_.order == VertexOrder::Static ? static_order_[k] : k;
      if (assigned_[v]) continue;
      int f = -1;
      if (opts_.pruning.zero_sum_closure) {
        for (Vertex u : g_.neighbors(v)) {
          if (open_[u] != 1) continue;
          int idx = value_index(-partial_[u]);
          if (idx < 0 || used_[idx] || (f >= 0 && f != idx)) {
            conflict = true;
            return v;
          }
          f = idx;
        }
      }
      if (opts_.order == VertexOrder::Static) {
        forced = f;
        return v;
      }
      if (f >= 0) {
        forced = f;
        return v;
      }
      if (labeled_nb_[v] > best_key) {
        best_key = labeled_nb_[v];
        best = v;
      }
    }
    return best;
  }

  bool interval_ok() {
    // Sums of the k smallest / largest unused labels, k <= valency.
    std::vector<Label> lo(valency_ + 1, 0), hi(valency_ + 1, 0);
    int taken = 0;
    for (int i = 0; i < n_ && taken < valency_; ++i)
      if (!used_[i]) {
        ++taken;
        lo[taken] = lo[taken - 1] + values_[i];
      }
    const int lo_avail = taken;
    taken = 0;
    for (int i = n_ - 1; i >= 0 && taken < valency_; --i)
      if (!used_[i]) {
        ++taken;
        hi[taken] = hi[taken - 1] + values_[i];
      }
    for (Vertex u = 0; u < n_; ++u) {
      const int k = open_[u];
      if (k == 0) continue;
      if (k > lo_avail) return false;
      if (partial_[u] + lo[k] > 0 || partial_[u] + hi[k] < 0) return false;
    }
    return true;
  }

  void assign(Vertex v, int idx) {
    const Label l = values_[idx];
    label_[v] = l;
    assigned_[v] = 1;
    used_[idx] = 1;
    for (Vertex u : g_.neighbors(v)) {
      partial_[u] += l;
      --open_[u];
      ++labeled_nb_[u];
    }
  }

  void unassign(Vertex v, int idx) {
    const Label l = values_[idx];
    for (Vertex u : g_.neighbors(v)) {
      partial_[u] -= l;
      ++open_[u];
      --labeled_nb_[u];
    }
    used_[idx] = 0;
    assigned_[v] = 0;
    label_[v] = 0;
  }

  bool closure_ok(Vertex v) const {
    for (Vertex u : g_.neighbors(v))
      if (open_[u] == 0 && partial_[u] != 0) return false;
    return true;
  }

  Step on_leaf() {
    for (Vertex u = 0; u < n_; ++u)
      if (partial_[u] != 0) return Step::Continue;
    if (first_.empty()) first_ = label_;
    ++count_;
    return opts_.mode == SearchMode::FindOne ? Step::Stop : Step::Continue;
  }

  Step recurse(int depth) {
    ++stats_.nodes;
    if (budget_hit()) {
      exhausted_ = true;
      return Step::Stop;
    }
    if (depth == n_) return on_leaf();

    int forced;
    bool conflict;
    Vertex v = choose(forced, conflict);
    if (conflict) {
      ++stats_.forced_conflicts;
      return Step::Continue;
    }
    const bool fold_sign = depth == 0 && opts_.pruning.sign_symmetry;
    for (int idx : try_order_) {
      if (used_[idx]) continue;
      if (forced >= 0 && idx != forced) continue;
      if (fold_sign && values_[idx] < 0) continue;
      assign(v, idx);
      bool ok = true;
      if (opts_.pruning.zero_sum_closure && !closure_ok(v)) {
        ++stats_.closure_prunes;
        ok = false;
      }
      if (ok && opts_.pruning.interval && !interval_ok()) {
        ++stats_.interval_prunes;
        ok = false;
      }
      Step step = ok ? recurse(depth + 1) : Step::Continue;
      unassign(v, idx);
      if (step == Step::Stop) return Step::Stop;
    }
    return Step::Continue;
  }

  const Graph& g_;
  const SearchOptions& opts_;
  const int n_;
  const int valency_;
  std::vector<Label> values_;
  std::vector<int> try_order_;
  std::vector<Label> label_;
  std::vector<char> assigned_, used_;
  std::vector<Label> partial_;
  std::vector<int> open_, labeled_nb_;
  std::vector<Vertex> static_order_;
  std::vector<Label> first_;
  std::uint64_t count_ = 0;
  bool exhausted_ = false;
  SearchStats stats_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SearchOutcome find_labeling(const Graph& g, const SearchOptions& opts) {
  const int r = g.degree(0);
  if (!is_regular(g, r)) throw PreconditionError("search: graph is not regular");
  if (r % 2 != 0) throw PreconditionError("search: valency " + std::to_string(r) + " is odd");
  if (g.order() % 2 != 0)
    throw PreconditionError("search: NoOddOrder: order " + std::to_string(g.order()) +
                            " is odd; the centered label set needs even n");
  if (!is_connected(g)) throw PreconditionError("search: graph is not connected");

  if (opts.prefilter && !corollary_filter(g).candidate) {
    SearchOutcome out;
    out.verdict = SearchVerdict::NotFound;
    out.stats.prefilter_ruled_out = true;
    return out;
  }
  return Backtracker(g, opts).run();
}

bool decide_profile(const SegmentProfile& profile, const SearchOptions& opts) {
  SearchOptions o = opts;
  o.mode = SearchMode::FindOne;
  auto out = find_labeling(build_qw(profile_to_sequence(profile)), o);
  if (out.verdict == SearchVerdict::BudgetExhausted)
    throw RangeError("decide_profile: search budget exhausted for QW(" + format_profile(profile) + ")");
  return out.verdict == SearchVerdict::Found;
}

}  // namespace dmlab
