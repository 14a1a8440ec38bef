#include <cmath>

#include "cayley/annulus.hpp"
#include "cayley/error.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cayley;

namespace {

Element zwz_start(int n) { return WreathElement{n + 1, {}}; }
Element zwz_end(int n) {
  WreathElement g{0, {}};
  g.lamps.set(0, n + 1);
  return g;
}

}  // namespace

TEST_CASE("infinite-component certification") {
  const auto& t = testing::table("line-lamplighter m=2", 12);
  const auto& m = t.model();
  CHECK(certify_infinite(m.parse("w:0;-1:1,1:1"), 4, t) == Reach::InFinite);
  for (int n = 1; n <= 6; ++n) {
    WreathElement g{n, {}};
    for (int s = 0; s <= n; ++s) g.lamps.set(s, 1);
    CHECK(certify_infinite(g, static_cast<int>(m.exact_length(g)), t) == Reach::InInfinite);
  }
  const auto& z = testing::table("z", 10);
  CHECK(certify_infinite(z.model().parse("b:5"), 5, z) == Reach::InInfinite);
  CHECK_THROWS_AS(certify_infinite(m.parse("w:7;"), 7, t), Error);
}

TEST_CASE("certificate agrees with single-element certification") {
  const auto& t = testing::table("tree-lamplighter d=3 m=2", 6);
  for (int n = 2; n <= 3; ++n) {
    InfiniteCertificate cert(t, n);
    auto range = t.level_range(n);
    for (std::size_t i = range.begin; i < range.end; ++i)
      CHECK(cert.in_infinite(i) == (certify_infinite(t.element(i), n, t) == Reach::InInfinite));
  }
}

TEST_CASE("annulus construction") {
  auto z = build_annulus(3, 0, false, testing::table("z", 6));
  CHECK(z.vertex_count() == 2);
  CHECK(z.adj.empty());
  CHECK_FALSE(is_connected(z));

  const auto& t = testing::table("line-lamplighter m=2", 8);
  auto filtered = build_annulus(4, 0, true, t);
  CHECK(2 * filtered.vertex_count() > t.sphere_size(4));
  CHECK_THROWS_AS(build_annulus(5, 4, false, t), Error);
  CHECK_THROWS_AS(build_annulus(5, 0, true, t), Error);
}

TEST_CASE("line components") {
  const auto& t = testing::table("line-lamplighter m=2", 10);
  CHECK(components(build_annulus(5, 2, true, t), Restriction::SphereInfinite).blocks.size() >= 16);
  CHECK(components(build_annulus(4, 5, true, t), Restriction::Full).blocks.size() == 3);
  CHECK(components(build_annulus(4, 6, true, t), Restriction::Full).blocks.size() == 1);
}

TEST_CASE("free tree components") {
  const auto& t = testing::table("tree d=3", 8);
  auto p = components(build_annulus(2, 1, true, t), Restriction::Full);
  CHECK(p.blocks.size() == 6);
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= 3; ++r) CHECK(components(build_annulus(n, r, true, t), Restriction::SphereInfinite).h ==
                                       doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partition blocks cover the restriction") {
  const auto& t = testing::table("ladder-lamplighter m=2 set=sws", 8);
  auto a = build_annulus(3, 2, true, t);
  auto p = components(a, Restriction::SphereInfinite);
  std::size_t covered = 0;
  for (const auto& b : p.blocks) covered += b.members.size();
  CHECK(covered == p.total);
  CHECK(is_connected(a) == (components(a, Restriction::Full).blocks.size() == 1));
}

TEST_CASE("entropy") {
  auto one = entropy_of_sizes({7});
  CHECK(one.H == 0.0);
  CHECK(one.h == 1.0);
  auto even = entropy_of_sizes({3, 3, 3, 3});
  CHECK(even.H == doctest::Approx(std::log(4.0)));
  CHECK(even.h == doctest::Approx(1.0));
  auto skew = entropy_of_sizes({9, 1});
  CHECK(skew.h < 1.0);
  CHECK(skew.blocks == 2);
}

TEST_CASE("thickness") {
  const auto& t = testing::table("line-lamplighter m=2", 10);
  CHECK(connection_thickness(4, 6, t).thickness == 6);
  auto one = connection_thickness(1, 4, t);
  REQUIRE(one.thickness);
  CHECK(*one.thickness <= 2);
  auto capped = connection_thickness(4, 3, t);
  CHECK_FALSE(capped.thickness);
  CHECK(capped.component_counts.size() == 4);
  auto scan = connection_thickness(3, 7, t, true);
  CHECK(scan.monotone);
}

TEST_CASE("Z wr Z spheres need thickness 3") {
  const auto& t = testing::table("zz-walk-or-switch", 12);
  auto r = connection_thickness(5, 4, t);
  CHECK(r.thickness == 3);
  CHECK_FALSE(is_connected(build_annulus(5, 1, false, t)));
  CHECK_FALSE(is_connected(build_annulus(5, 2, false, t)));
}

TEST_CASE("induced distances") {
  const auto& t = testing::table("zz-walk-or-switch", 10);
  auto a2 = build_annulus(4, 2, false, t);
  CHECK(induced_distance(a2, zwz_start(4), zwz_start(4)) == 0);
  CHECK_FALSE(induced_distance(a2, zwz_start(4), zwz_end(4)));
  auto a3 = build_annulus(4, 3, false, t);
  auto d = induced_distance(a3, zwz_start(4), zwz_end(4));
  REQUIRE(d);
  CHECK(*d >= 8);
  CHECK_THROWS_AS(induced_distance(a3, t.model().identity(), zwz_end(4)), Error);
}

TEST_CASE("diameter and sprawl") {
  CHECK_FALSE(induced_diameter(build_annulus(3, 0, false, testing::table("z", 4))).diameter);
  const auto& t = testing::table("line-lamplighter m=2", 8);
  auto a = build_annulus(3, 5, false, t);
  auto d = induced_diameter(a);
  REQUIRE(d.diameter);
  CHECK(*d.diameter > 0);
  CHECK_FALSE(d.lower_bound);

  const auto& z = testing::table("z", 3);
  auto single = build_annulus(0, 0, false, z);
  CHECK(single.vertex_count() == 1);
  CHECK(sprawl_estimate(single, 10, 1) == 0.0);
  double s1 = sprawl_estimate(a, 200, 42), s2 = sprawl_estimate(a, 200, 42);
  CHECK(s1 == s2);
  CHECK(s1 <= *d.diameter);
  CHECK_THROWS_AS(sprawl_estimate(build_annulus(3, 0, false, z), 10, 1), Error);
}

TEST_CASE("almost-convexity probe") {
  auto grid = almost_convexity_probe(2, 3, 7, testing::table("z2", 9));
  REQUIRE(grid.size() == 5);
  for (const auto& row : grid) CHECK(row.detour == grid.front().detour);
  auto zwz = almost_convexity_probe(2, 3, 7, testing::table("zz-walk-or-switch", 9));
  REQUIRE(zwz.size() == 5);
  for (std::size_t i = 1; i < zwz.size(); ++i) {
    REQUIRE(zwz[i].detour);
    CHECK(*zwz[i].detour > *zwz[i - 1].detour);
  }
}

TEST_CASE("ladder cutset") {
  const auto& t = testing::table("ladder-lamplighter m=2 set=sws", 6);
  auto two = verify_ladder_cutset(2, t);
  CHECK(two.separation >= 4);
  CHECK(two.pass);
  auto three = verify_ladder_cutset(3, t);
  CHECK(three.separation >= 6);
  CHECK(three.pass);
  try {
    verify_ladder_cutset(2, testing::table("line-lamplighter m=2", 4));
    FAIL("expected WrongModel");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongModel);
  }
}
