#include <set>

#include "doctest.h"
#include "dmlab/error.hpp"
#include "dmlab/qw.hpp"
#include "support.hpp"

using namespace dmlab;
using namespace dmlab::testing;

namespace {

std::vector<int> bits_of(const QWSequence& s) { return {s.bits().begin(), s.bits().end()}; }

std::vector<int> random_bits(int m) {
  // Zero at 0, one at m-1, zeros never adjacent.
  std::vector<int> b(m, 1);
  b[0] = 0;
  for (int i = 2; i < m - 1; ++i)
    if (b[i - 1] == 1 && uniform(0, 2) == 0) b[i] = 0;
  return b;
}

}  // namespace

TEST_CASE("sequence validation") {
  CHECK(validate_sequence({0, 1, 1}).length() == 3);
  CHECK(validate_sequence({0, 1, 0, 1}).length() == 4);
  CHECK_THROWS_AS(validate_sequence({0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(validate_sequence({0, 1}), PreconditionError);
  CHECK_THROWS_AS(validate_sequence({1, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(validate_sequence({0, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(validate_sequence({0, 1, 2}), PreconditionError);
}

TEST_CASE("profile conversions") {
  CHECK(bits_of(profile_to_sequence({3, 3})) == std::vector<int>{0, 1, 1, 0, 1, 1});
  CHECK(bits_of(profile_to_sequence({7})) == std::vector<int>{0, 1, 1, 1, 1, 1, 1});
  CHECK(bits_of(profile_to_sequence({2, 2})) == std::vector<int>{0, 1, 0, 1});
  CHECK_THROWS_AS(profile_to_sequence({1, 3}), PreconditionError);
  CHECK_THROWS_AS(profile_to_sequence({2}), PreconditionError);
  CHECK_THROWS_AS(profile_to_sequence(std::initializer_list<int>{}), PreconditionError);

  CHECK(parse_profile("11,3,5,3") == SegmentProfile{11, 3, 5, 3});
  CHECK(parse_profile(" 3 , 3 ") == SegmentProfile{3, 3});
  CHECK_THROWS_AS(parse_profile(""), ParseError);
  CHECK_THROWS_AS(parse_profile("3,,3"), ParseError);
  CHECK_THROWS_AS(parse_profile("3,x"), ParseError);
  CHECK_THROWS_AS(parse_profile("3,-5"), ParseError);
  CHECK(format_profile(SegmentProfile{11, 3, 5}) == "11,3,5");
}

TEST_CASE("QW(3) neighbourhoods") {
  // m = 3, S = [0,1,1]: x_0 ~ x_1, x_2 (cycle), y_0 (rung), y_2 (crossing at s_2).
  auto g = build_qw(validate_sequence({0, 1, 1}));
  CHECK(g.order() == 6);
  CHECK(g.neighbors(0) == std::vector<Vertex>{1, 2, 3, 5});
  CHECK(are_isomorphic(g, build_wreath(3)));
  CHECK(are_isomorphic(g, octahedron()));
}

TEST_CASE("wreath graphs") {
  auto w4 = build_wreath(4);
  CHECK(w4.order() == 8);
  CHECK(is_regular(w4, 4));
  CHECK_FALSE(has_triangle(w4));
  for (int i = 0; i < 4; ++i) CHECK(w4.neighbors(i) == w4.neighbors(4 + i));
  CHECK_THROWS_AS(build_wreath(2), PreconditionError);
}

TEST_CASE("every small profile gives a connected 4-regular graph of order 2m") {
  int profiles = 0;
  for_each_profile({2, 3, 4, 5, 6, 7, 8, 9}, 5, 45, [&](const SegmentProfile& p) {
    ++profiles;
    auto s = profile_to_sequence(p);
    REQUIRE(sequence_to_profile(s) == p);
    auto g = build_qw(s);
    int sum = 0;
    for (int a : p) sum += a;
    REQUIRE(g.order() == 2 * sum);
    REQUIRE(is_regular(g, 4));
    REQUIRE(is_connected(g));
  });
  // Every composition except the lone part 2, which is too short.
  CHECK(profiles == 8 + 64 + 512 + 4096 + 32768 - 1);
}

TEST_CASE("random long sequences") {
  for (int trial = 0; trial < 500; ++trial) {
    auto b = random_bits(uniform(3, 200));
    auto s = validate_sequence(b);
    auto g = build_qw(s);
    REQUIRE(g.order() == 2 * s.length());
    REQUIRE(is_regular(g, 4));
    REQUIRE(is_connected(g));
    auto p = sequence_to_profile(s);
    REQUIRE(bits_of(profile_to_sequence(p)) == b);
    int zeros = 0;
    for (int x : b) zeros += x == 0;
    REQUIRE(static_cast<int>(p.size()) == zeros);
  }
}

TEST_CASE("segments and types") {
  auto segs = segments(profile_to_sequence({5, 2}));
  REQUIRE(segs.size() == 2);
  CHECK(segs[0] == Segment{1, 0, 5, SegmentType::B});
  CHECK(segs[1] == Segment{2, 5, 2, SegmentType::Other});
  CHECK(segment_type(3) == SegmentType::A);
  CHECK(segment_type(11) == SegmentType::A);
  CHECK(segment_type(9) == SegmentType::B);
  CHECK(segment_type(4) == SegmentType::Other);
  CHECK(std::string(to_string(SegmentType::A)) == "A");
}

TEST_CASE("classification examples") {
  auto c = classify(profile_to_sequence({3, 3}));
  CHECK(c.distance_magic);
  CHECK(c.reasons.empty());
  CHECK(c.type_a == 2);

  CHECK(classify(profile_to_sequence({7})).distance_magic);
  CHECK(classify(profile_to_sequence({5, 5})).distance_magic);
  CHECK(classify(profile_to_sequence({11, 3, 5, 3, 7, 5, 3})).distance_magic);

  auto odd_b = classify(profile_to_sequence({5}));
  CHECK_FALSE(odd_b.distance_magic);
  REQUIRE(odd_b.reasons.size() == 1);
  CHECK(odd_b.reasons[0].find("type-B") != std::string::npos);

  auto even = classify(profile_to_sequence({3, 4}));
  CHECK_FALSE(even.distance_magic);
  CHECK(even.other == 1);
  REQUIRE(even.reasons.size() == 1);
  CHECK(even.reasons[0].find("segment 2") != std::string::npos);
}

TEST_CASE("classification agrees with the definition on every small profile") {
  for_each_profile({2, 3, 4, 5, 6, 7, 8, 9}, 5, 45, [&](const SegmentProfile& p) {
    bool all_odd = true;
    int b = 0;
    for (int a : p) {
      all_odd = all_odd && a % 2 == 1;
      b += a % 4 == 1;
    }
    auto c = classify(profile_to_sequence(p));
    REQUIRE(c.distance_magic == (all_odd && b % 2 == 0));
    REQUIRE(c.type_a + c.type_b + c.other == static_cast<int>(p.size()));
    REQUIRE(c.reasons.empty() == c.distance_magic);
  });
}
