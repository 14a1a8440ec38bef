#include "cayley/annulus.hpp"
#include "cayley/deadends.hpp"
#include "cayley/error.hpp"
#include "cayley/oracles.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cayley;

namespace {

std::size_t index_of(const BallTable& t, const std::string& text) {
  auto i = t.find(t.model().parse(text));
  REQUIRE(i);
  return *i;
}

}  // namespace

TEST_CASE("groups without dead-ends") {
  const auto& z = testing::table("z", 12);
  for (int n = 0; n <= 5; ++n) CHECK(find_deadends(n, z).empty());
  const auto& zwz = testing::table("zz-walk-or-switch", 10);
  for (int n = 0; n <= 4; ++n) CHECK(find_deadends(n, zwz).empty());
}

TEST_CASE("line dead-ends of depth min(b,-a)") {
  const auto& t = testing::table("line-lamplighter m=2", 18);
  DeadEndAnalyzer an(t);
  auto k1 = index_of(t, "w:0;-1:1,0:1,1:1");
  CHECK(t.level(k1) == 4);
  CHECK(an.is_deadend(k1));
  CHECK(an.retreat_depth(k1) == 1);
  CHECK(an.width(k1) == 3);
  CHECK(an.shadow_depth(k1) == 1);
  CHECK(an.width(k1) <= 2 * an.shadow_depth(k1) + 1);

  auto k2 = index_of(t, "w:0;-2:1,-1:1,0:1,1:1,2:1");
  CHECK(t.level(k2) == 8);
  CHECK(an.is_deadend(k2));
  CHECK(an.retreat_depth(k2) == 2);
  CHECK(an.width(k2) == 5);
  CHECK(an.width(k2) <= 9);

  bool listed = false;
  for (const auto& d : an.find_deadends(4)) listed |= d.element == "w:0;-1:1,0:1,1:1";
  CHECK(listed);
}

TEST_CASE("trivial values") {
  const auto& t = testing::table("line-lamplighter m=2", 12);
  DeadEndAnalyzer an(t);
  auto id = index_of(t, "w:0;");
  CHECK(an.width(id) == 1);
  CHECK(an.shadow_depth(id) == 0);
  CHECK(an.retreat_depth(id) == 0);
  auto ray = index_of(t, "w:3;0:1,1:1,3:1");
  CHECK_FALSE(an.is_deadend(ray));
  CHECK(an.width(ray) == 1);
  CHECK(an.retreat_depth(ray) == 0);
  CHECK(an.straight(ray));
  CHECK(an.shadow_depth(ray) == 0);
}

TEST_CASE("straightness") {
  const auto& t = testing::table("line-lamplighter m=2", 16);
  DeadEndAnalyzer an(t);
  auto between = index_of(t, "w:1;-1:1,3:1");
  int n = t.level(between);
  CHECK(an.certificate(n).in_infinite(between));
  CHECK_FALSE(an.straight(between));

  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < t.level_range(an.straight_table().valid_up_to()).end; ++i)
    mismatches += an.straight(i) != line_straight_oracle(t.element(i), t.model());
  CHECK(mismatches == 0);
  CHECK_THROWS_AS(an.straight(t.level_range(t.radius()).begin), Error);

  const auto& z = testing::table("z", 8);
  DeadEndAnalyzer zan(z);
  for (std::size_t i = 0; i < z.level_range(zan.straight_table().valid_up_to()).end; ++i) CHECK(zan.straight(i));
  const auto& tree = testing::table("tree d=3", 8);
  DeadEndAnalyzer tan(tree);
  for (int k = 1; k <= 4; ++k) CHECK(tan.s_infinity_ratio(k).straight_ratio() == 1.0);
}

TEST_CASE("line straight-ratio golden numbers") {
  const auto& t = testing::table("line-lamplighter m=2", 16);
  DeadEndAnalyzer an(t);
  auto c = an.s_infinity_ratio(8);
  CHECK(c.sphere == 2104);
  CHECK(c.straight_ratio() == doctest::Approx(0.928).epsilon(0.002));
}

TEST_CASE("pointwise bounds on small balls") {
  for (auto [d, N] : {std::pair{"line-lamplighter m=2", 12}, {"ladder-lamplighter m=2 set=sws", 10},
                      {"tree-lamplighter d=3 m=2", 8}}) {
    const auto& t = testing::table(d, N);
    DeadEndAnalyzer an(t);
    for (int n = 1; 2 * n + 2 <= N; ++n) {
      auto range = t.level_range(n);
      for (std::size_t i = range.begin; i < range.end; ++i) {
        int rd = an.retreat_depth(i), wid = an.width(i), sd = an.shadow_depth(i);
        CHECK(rd <= n / 2);
        CHECK(wid <= n + 1);
        CHECK(2 * rd + 1 <= wid);
        CHECK(wid <= 2 * sd + 1);
      }
    }
  }
}

TEST_CASE("radius preconditions") {
  const auto& t = testing::table("line-lamplighter m=2", 8);
  DeadEndAnalyzer an(t);
  auto g = t.level_range(4).begin;
  CHECK_THROWS_AS(an.width(g), Error);
  CHECK_NOTHROW(an.retreat_depth(g));
  CHECK_THROWS_AS(an.retreat_depth(t.level_range(5).begin), Error);
  CHECK_THROWS_AS(an.find_deadends(4), Error);
}
