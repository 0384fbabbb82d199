#include <set>

#include "doctest.h"
#include "dmlab/enumerate.hpp"
#include "dmlab/error.hpp"
#include "dmlab/qw.hpp"
#include "support.hpp"

using namespace dmlab;
using namespace dmlab::testing;

namespace {

std::size_t count(int n, int r, bool connected) {
  return enumerate_regular(EnumerationTask{n, r, connected, false}).size();
}

}  // namespace

TEST_CASE("smallest quartic graphs") {
  auto five = enumerate_regular(EnumerationTask{5, 4, true, false});
  REQUIRE(five.size() == 1);
  CHECK(are_isomorphic(five[0], complete_graph(5)));

  auto six = enumerate_regular(EnumerationTask{6, 4, true, false});
  REQUIRE(six.size() == 1);
  CHECK(are_isomorphic(six[0], build_wreath(3)));
}

TEST_CASE("connected quartic counts") {
  const std::size_t expected[] = {1, 1, 2, 6, 16, 59};
  for (int n = 5; n <= 10; ++n) CHECK(count(n, 4, true) == expected[n - 5]);
  // Including disconnected graphs only adds K5 + K5 at n = 10.
  CHECK(count(10, 4, false) == 60);
}

TEST_CASE("other valencies match known counts") {
  // Connected cubic graphs on 4, 6, 8, 10 vertices, then all cubic graphs.
  CHECK(count(4, 3, true) == 1);
  CHECK(count(6, 3, true) == 2);
  CHECK(count(8, 3, true) == 5);
  CHECK(count(10, 3, true) == 19);
  CHECK(count(8, 3, false) == 6);
  CHECK(count(10, 3, false) == 21);
  for (int n = 3; n <= 10; ++n) CHECK(count(n, 2, true) == 1);
  CHECK(count(9, 2, false) == 4);  // C9, C6+C3, C5+C4, 3C3
  CHECK(count(4, 0, false) == 1);
}

TEST_CASE("enumeration output is regular, isomorph-free and sorted on request") {
  for (int n = 6; n <= 10; ++n) {
    auto gs = enumerate_regular(EnumerationTask{n, 4, true, true});
    std::vector<CanonicalCertificate> certs;
    for (const auto& g : gs) {
      REQUIRE(is_regular(g, 4));
      REQUIRE(is_connected(g));
      certs.push_back(canonical_certificate(g));
    }
    CHECK(std::set<CanonicalCertificate>(certs.begin(), certs.end()).size() == certs.size());
    CHECK(std::is_sorted(certs.begin(), certs.end()));
  }
}

TEST_CASE("known quartic graphs appear in the enumeration") {
  for (int n = 6; n <= 10; n += 2) {
    std::set<CanonicalCertificate> certs;
    for (const auto& g : enumerate_regular(EnumerationTask{n, 4, true, false})) certs.insert(canonical_certificate(g));
    CHECK(certs.count(canonical_certificate(build_wreath(n / 2))));
    for_each_profile({2, 3, 4, 5}, 5, n / 2, [&](const SegmentProfile& p) {
      int m = 0;
      for (int a : p) m += a;
      if (2 * m == n) CHECK(certs.count(canonical_certificate(build_qw(profile_to_sequence(p)))));
    });
  }
}

TEST_CASE("sink form emits the same graphs") {
  std::vector<Graph> seen;
  enumerate_regular(EnumerationTask{9, 4, true, true}, [&](const Graph& g) { seen.push_back(g); });
  CHECK(seen == enumerate_regular(EnumerationTask{9, 4, true, true}));
}

TEST_CASE("enumeration preconditions") {
  CHECK_THROWS_AS(enumerate_regular(EnumerationTask{4, 4, true, false}), PreconditionError);
  CHECK_THROWS_AS(enumerate_regular(EnumerationTask{7, 3, true, false}), PreconditionError);
  CHECK_THROWS_AS(enumerate_regular(EnumerationTask{11, 4, true, false}), RangeError);
}

TEST_CASE("census") {
  auto rows = census_pipeline({6, 7, 8, 9, 10}, true);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].graphs == 1);
  CHECK(rows[0].candidates == 1);
  CHECK(rows[0].distance_magic == 1);
  CHECK(rows[1].candidates == 0);
  CHECK(rows[2].candidates == 1);
  CHECK(rows[2].distance_magic == 1);
  CHECK(rows[3].candidates == 0);
  CHECK(rows[4].graphs == 59);
  CHECK(rows[4].candidates == 1);
  CHECK(rows[4].distance_magic == 1);
  REQUIRE(rows[4].candidate_graphs.size() == 1);
}
