#include "cayley/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "cayley/error.hpp"
#include "cayley/models.hpp"

namespace cayley {

const char* to_string(Reach r) noexcept {
  return r == Reach::InInfinite ? "InInfinite" : "InFinite";
}

const char* to_string(SameComponent s) noexcept {
  switch (s) {
    case SameComponent::Same: return "Same";
    case SameComponent::Different: return "Different";
    case SameComponent::Unknown: return "Unknown";
  }
  return "Unknown";
}

LineShape line_shape(const WreathElement& g) {
  LineShape s;
  s.z = g.position;
  s.a = std::min<std::int64_t>(0, s.z);
  s.b = std::max<std::int64_t>(0, s.z);
  auto lamps = g.lamps.entries();
  if (!lamps.empty()) {
    s.a = std::min(s.a, lamps.front().site);
    s.b = std::max(s.b, lamps.back().site);
  }
  return s;
}

WreathElement mirror(const WreathElement& g) {
  std::vector<LampEntry> entries;
  for (const auto& e : g.lamps.entries()) entries.push_back({-e.site, e.value});
  return WreathElement{-g.position, LampConfig(std::move(entries))};
}

namespace {

void check_length(const Element& g, int n, const GroupModel& model) {
  if (model.exact_length(g) != n)
    fail(ErrorKind::LengthMismatch, "element " + model.format(g) + " is not in S(" + std::to_string(n) + ")");
}

bool line_finite(const WreathElement& w) {
  LineShape s = line_shape(w.position >= 0 ? w : mirror(w));
  return s.a < 0 && s.z < s.b && s.z < -s.a;
}

bool tree_finite(const WreathElement& w, const InvolutionTree& tree) {
  // Finite iff the ball of radius h(gamma)+1 lies inside C(g).
  std::set<Site> c{0};
  auto climb = [&](Site v) {
    while (c.insert(v).second) v = tree.parent(v);
  };
  climb(w.position);
  for (const auto& e : w.lamps.entries()) climb(e.site);
  int radius = InvolutionTree::height(w.position) + 1;
  std::vector<Site> frontier{0};
  for (int h = 0; h < radius; ++h) {
    std::vector<Site> next;
    for (Site v : frontier)
      for (Site u : tree.neighbors(v)) {
        if (InvolutionTree::height(u) != h + 1) continue;
        if (!c.count(u)) return false;
        next.push_back(u);
      }
    frontier = std::move(next);
  }
  return true;
}

}  // namespace

Reach infinite_component_oracle(const Element& g, int n, const GroupModel& model) {
  auto family = model.info().family;
  if (family != Family::LineLamplighter && family != Family::TreeLamplighter)
    fail(ErrorKind::NoOracle, "no infinite-component oracle for " + model.name());
  check_length(g, n, model);
  const auto& w = g.wreath();
  bool finite = family == Family::LineLamplighter
                    ? line_finite(w)
                    : tree_finite(w, static_cast<const InvolutionTree&>(
                                         static_cast<const WreathModel&>(model).base()));
  return finite ? Reach::InFinite : Reach::InInfinite;
}

SameComponent same_component_oracle(const Element& g, const Element& g2, int n, int r,
                                    const GroupModel& model) {
  if (model.info().family != Family::LineLamplighter)
    fail(ErrorKind::NoOracle, "no component oracle for " + model.name());
  check_length(g, n, model);
  check_length(g2, n, model);
  // the lone switch joins all of S(1)
  if (n <= 1) return SameComponent::Unknown;
  WreathElement x = g.wreath(), y = g2.wreath();
  if (x.position < 0) {
    x = mirror(x);
    y = mirror(y);
  }
  LineShape s = line_shape(x), t = line_shape(y);
  auto agree_outside = [&](std::int64_t lo, std::int64_t hi) {
    std::set<Site> sites;
    for (const auto& e : x.lamps.entries()) sites.insert(e.site);
    for (const auto& e : y.lamps.entries()) sites.insert(e.site);
    for (Site site : sites)
      if ((site < lo || site > hi) && x.lamps.at(site) != y.lamps.at(site)) return false;
    return true;
  };
  if (s.z - r > 0) {
    bool same = s.a == t.a && s.b == t.b && s.z == t.z && agree_outside(s.z - r, s.z);
    return same ? SameComponent::Same : SameComponent::Different;
  }
  if (s.z < std::min(s.b, -s.a)) {
    bool same = s.a == t.a && s.b == t.b && std::llabs(t.z) == s.z && agree_outside(-s.z, s.z);
    return same ? SameComponent::Same : SameComponent::Different;
  }
  return SameComponent::Unknown;
}

bool line_straight_oracle(const Element& g, const GroupModel& model) {
  if (model.info().family != Family::LineLamplighter)
    fail(ErrorKind::NoOracle, "no straightness oracle for " + model.name());
  const auto& w = g.wreath();
  // the lone switch at the origin is a dead-end of length 1
  if (w.position == 0 && w.lamps.size() == 1 && w.lamps.entries().front().site == 0) return false;
  LineShape s = line_shape(w);
  return (s.z >= 0 && (s.a == 0 || s.z == s.b)) || (s.z <= 0 && (s.b == 0 || s.z == s.a));
}

}  // namespace cayley
