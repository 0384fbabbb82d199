#include "doctest.h"
#include "dmlab/enumerate.hpp"
#include "dmlab/error.hpp"
#include "dmlab/search.hpp"
#include "support.hpp"

using namespace dmlab;
using namespace dmlab::testing;

namespace {

SearchOptions counting() {
  SearchOptions o;
  o.mode = SearchMode::CountAll;
  o.prefilter = false;
  return o;
}

// Connected, even valency, even order graphs with at most 10 vertices.
std::vector<Graph> small_instances() {
  std::vector<Graph> out;
  for (int n : {6, 8, 10}) {
    auto gs = enumerate_regular(EnumerationTask{n, 4, true, false});
    out.insert(out.end(), gs.begin(), gs.end());
  }
  for (int n : {4, 6, 8, 10}) out.push_back(cycle_graph(n));
  for_each_profile({2, 3, 4, 5}, 3, 5, [&](const SegmentProfile& p) {
    out.push_back(build_qw(profile_to_sequence(p)));
  });
  return out;
}

}  // namespace

TEST_CASE("search examples") {
  auto w3 = find_labeling(build_wreath(3));
  CHECK(w3.verdict == SearchVerdict::Found);
  REQUIRE(w3.labeling);
  CHECK(verify(build_wreath(3), *w3.labeling).pass);

  CHECK(find_labeling(build_qw(profile_to_sequence({4}))).verdict == SearchVerdict::NotFound);
  CHECK(find_labeling(cycle_graph(4)).verdict == SearchVerdict::Found);
  CHECK(std::string(to_string(SearchVerdict::BudgetExhausted)) == "BudgetExhausted");
}

TEST_CASE("search preconditions") {
  CHECK_THROWS_AS(find_labeling(complete_graph(5)), PreconditionError);       // odd order
  CHECK_THROWS_AS(find_labeling(complete_graph(4)), PreconditionError);       // odd valency
  CHECK_THROWS_AS(find_labeling(Graph(4, {{0, 1}, {1, 2}})), PreconditionError);
  Graph two_c4(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
  CHECK_THROWS_AS(find_labeling(two_c4), PreconditionError);
}

TEST_CASE("prefilter short-circuits ruled out graphs") {
  auto out = find_labeling(cycle_graph(6));
  CHECK(out.verdict == SearchVerdict::NotFound);
  CHECK(out.stats.prefilter_ruled_out);
  CHECK(out.stats.nodes == 0);
  SearchOptions off;
  off.prefilter = false;
  auto full = find_labeling(cycle_graph(6), off);
  CHECK(full.verdict == SearchVerdict::NotFound);
  CHECK_FALSE(full.stats.prefilter_ruled_out);
}

TEST_CASE("counts agree with brute force") {
  std::vector<Graph> graphs = {cycle_graph(4), cycle_graph(6), cycle_graph(8), build_wreath(3), build_wreath(4)};
  for (auto p : {SegmentProfile{4}, SegmentProfile{2, 2}, SegmentProfile{3}}) graphs.push_back(build_qw(profile_to_sequence(p)));
  for (auto g : enumerate_regular(EnumerationTask{8, 4, true, false})) graphs.push_back(g);
  for (const auto& g : graphs) {
    auto out = find_labeling(g, counting());
    CHECK(out.raw_count == brute_force_count(g));
    CHECK(out.raw_count == 2 * out.folded_count);
    CHECK((out.verdict == SearchVerdict::Found) == (out.raw_count > 0));
  }
}

TEST_CASE("pruning rules and ordering do not change results") {
  auto instances = small_instances();
  const PruningRules variants[] = {
      {false, true, true}, {true, false, true}, {true, true, false}, {false, false, false}};
  for (const auto& g : instances) {
    auto reference = find_labeling(g, counting());
    REQUIRE(reference.raw_count % 2 == 0);
    for (const auto& rules : variants) {
      auto opts = counting();
      opts.pruning = rules;
      // Without closure or interval pruning the tree gets large; verdicts
      // are still checked, counts only where cheap.
      if (!rules.zero_sum_closure && !rules.interval && g.order() > 8) {
        opts.mode = SearchMode::FindOne;
        REQUIRE(find_labeling(g, opts).verdict == reference.verdict);
        continue;
      }
      auto out = find_labeling(g, opts);
      REQUIRE(out.verdict == reference.verdict);
      REQUIRE(out.raw_count == reference.raw_count);
    }
    auto opts = counting();
    opts.order = VertexOrder::Static;
    auto st = find_labeling(g, opts);
    REQUIRE(st.verdict == reference.verdict);
    REQUIRE(st.raw_count == reference.raw_count);
  }
}

TEST_CASE("prefilter never changes a verdict") {
  for (const auto& g : small_instances()) {
    SearchOptions on, off;
    off.prefilter = false;
    REQUIRE(find_labeling(g, on).verdict == find_labeling(g, off).verdict);
  }
}

TEST_CASE("found labelings verify") {
  for (const auto& g : small_instances()) {
    auto out = find_labeling(g);
    if (out.verdict == SearchVerdict::Found) REQUIRE(verify(g, *out.labeling).pass);
  }
}

TEST_CASE("search agrees with the classifier for 2m <= 14") {
  for_each_profile({2, 3, 4, 5, 6, 7}, 3, 7, [&](const SegmentProfile& p) {
    SearchOptions opts;
    opts.prefilter = false;
    REQUIRE_MESSAGE(decide_profile(p, opts) == classify(profile_to_sequence(p)).distance_magic,
                    format_profile(p));
  });
}

TEST_CASE("budgets") {
  auto g = build_qw(profile_to_sequence({2, 2, 3}));
  SearchOptions opts;
  opts.prefilter = false;
  opts.node_budget = 5;
  auto out = find_labeling(g, opts);
  CHECK(out.verdict == SearchVerdict::BudgetExhausted);
  CHECK(out.stats.nodes <= 6);
  CHECK_THROWS_AS(decide_profile({2, 2, 3}, opts), RangeError);

  SearchOptions timed;
  timed.prefilter = false;
  timed.time_budget_secs = 0.0;
  CHECK(find_labeling(g, timed).verdict == SearchVerdict::BudgetExhausted);
}
