#include <cmath>
#include <cstdio>
#include <filesystem>

#include "cayley/ball_table.hpp"
#include "cayley/error.hpp"
#include "cayley/models.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cayley;

TEST_CASE("sphere sizes") {
  const auto& z = testing::table("z", 3);
  CHECK(z.size() == 7);
  CHECK(z.sphere_size(3) == 2);
  CHECK(testing::table("line-lamplighter m=2", 1).sphere_size(1) == 9);
  CHECK(testing::table("tree d=3", 2).sphere_size(2) == 6);
  CHECK(testing::table("z2", 2).sphere_size(2) == 8);
  CHECK(testing::table("z2-king", 1).sphere_size(1) == 8);
}

TEST_CASE("line growth golden numbers") {
  const auto& t = testing::table("line-lamplighter m=2", 8);
  std::vector<std::size_t> sizes;
  for (int n = 0; n <= 8; ++n) sizes.push_back(t.sphere_size(n));
  CHECK(sizes == std::vector<std::size_t>{1, 9, 20, 48, 106, 232, 488, 1024, 2104});
  CHECK(sphere(t, 4).size() == 106);
}

TEST_CASE("enumeration is canonical") {
  auto m = make_group("zz-walk-or-switch");
  auto a = enumerate_ball(m, 6), b = enumerate_ball(m, 6);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.key(i) == b.key(i));
    if (i > 0) CHECK(a.level(i - 1) <= a.level(i));
  }
}

TEST_CASE("word lengths") {
  const auto& t = testing::table("line-lamplighter m=2", 4);
  const auto& m = t.model();
  CHECK(word_length(m.identity(), t) == 0);
  CHECK(word_length(m.parse("w:1;0:1,1:1"), t) == 1);
  CHECK(word_length(m.parse("w:9;"), t) == std::nullopt);
}

TEST_CASE("closed forms agree with breadth-first search") {
  auto line = cross_check_lengths(testing::table("line-lamplighter m=2", 8));
  CHECK_FALSE(line.skipped);
  CHECK(line.mismatches.empty());
  CHECK(cross_check_lengths(testing::table("tree-lamplighter d=3 m=2", 6)).mismatches.empty());
  CHECK(cross_check_lengths(testing::table("line-lamplighter m=3", 6)).mismatches.empty());
  CHECK(cross_check_lengths(testing::table("zz-walk-or-switch", 8)).mismatches.empty());
  CHECK(cross_check_lengths(testing::table("ladder-lamplighter m=2 set=sws", 4)).skipped);
}

TEST_CASE("neighbors stay consistent with levels") {
  const auto& t = testing::table("ladder-lamplighter m=2 set=s1", 4);
  std::vector<std::size_t> nbrs;
  for (std::size_t i = 0; i < t.size(); ++i) {
    t.neighbors(i, nbrs);
    for (auto j : nbrs)
      if (j != kAbsent) CHECK(std::abs(t.level(j) - t.level(i)) <= 1);
  }
}

TEST_CASE("budget") {
  auto m = make_group("line-lamplighter m=2");
  try {
    enumerate_ball(m, 20, 500);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.completed_radius() == 5);
  }
}

TEST_CASE("ball cache round-trip") {
  auto dir = std::filesystem::temp_directory_path() / "cayley-unit-cache";
  std::filesystem::remove_all(dir);
  auto m = make_group("tree-lamplighter d=3 m=2");
  auto first = cached_ball(m, 4, kDefaultBudget, dir.string());
  auto second = cached_ball(m, 4, kDefaultBudget, dir.string());
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first.key(i) == second.key(i));
  CHECK(std::filesystem::exists(dir / ball_cache_name(*m, 4)));
  std::filesystem::remove_all(dir);
}
