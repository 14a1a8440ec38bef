#include <algorithm>

#include "cayley/error.hpp"
#include "cayley/models.hpp"
#include "cayley/oracles.hpp"
#include "cayley/paths.hpp"
#include "walker.hpp"

namespace cayley {

namespace {

using detail::Walker;

constexpr LampValue kOn = 1;

const WreathModel& line_model(const GroupModel& model) {
  if (model.info().family != Family::LineLamplighter)
    fail(ErrorKind::WrongModel, "line path construction needs a line lamplighter, got " + model.name());
  return static_cast<const WreathModel&>(model);
}

void check_line_input(const Element& g, int n, const GroupModel& model) {
  if (n < 2) fail(ErrorKind::UnsupportedRadius, "line paths need n >= 2");
  if (infinite_component_oracle(g, n, model) != Reach::InInfinite)
    fail(ErrorKind::NotInInfiniteComponent, model.format(g) + " is not in S(" + std::to_string(n) + ")^inf");
}

// Walks to `target` one site at a time, optionally switching off each lamp it leaves.
void walk_to(Walker& w, Site target, bool clear_behind = false) {
  while (w.pos() != target) {
    Site next = w.pos() + (target > w.pos() ? 1 : -1);
    if (clear_behind)
      w.step(next, LampValue{0});
    else
      w.step(next);
  }
}

void light_here(Walker& w) {
  if (w.lamp(w.pos()) == 0) w.set_here(kOn);
}

// Arrives at `to` with its lamp on.
void step_lit(Walker& w, Site to, std::optional<LampValue> depart = std::nullopt) {
  LampConfig tmp = w.cur().lamps;
  w.step(to, depart, tmp.at(to) == 0 ? std::optional<LampValue>(kOn) : std::nullopt);
}

// Case (i): 0 <= |a| <= z <= b <= n-1. Ends with b increased by one.
void case_one(Walker& w) {
  LineShape s = line_shape(w.cur());
  std::int64_t gap = s.b - s.z;
  Site a1 = s.a - (gap + 1) / 2;
  // b stays put: when z = b its lamp is lit on leaving.
  if (s.z == s.b && w.lamp(s.z) == 0) w.set_here(kOn);
  // A, B, C: left to a1 with every lamp kept, lighting a1 on arrival.
  if (a1 == s.a) {
    walk_to(w, a1);
  } else {
    walk_to(w, a1 + 1);
    step_lit(w, a1);
  }
  // D, E, F: right to b+1, lighting it.
  walk_to(w, s.b);
  step_lit(w, s.b + 1);
  // G, H: back to a1.
  walk_to(w, a1);
  // I: switch off a1 while stepping to a2 = a1+1, which stays lit.
  step_lit(w, a1 + 1, LampValue{0});
  // J, K: right to the new position.
  walk_to(w, gap % 2 == 0 ? s.b : s.b + 1);
}

// Case (ii): 0 <= z = b < |a|. Ends in case (i) with a' = -z, b' = |a|.
void case_two(Walker& w) {
  LineShape s = line_shape(w.cur());
  // A: right to b1 = |a|, lit. B, C: left to a.
  Site b1 = -s.a;
  walk_to(w, b1 - 1);
  step_lit(w, b1);
  walk_to(w, s.a);
  // D: right to a1 = -z switching lamps off, a1 stays lit.
  Site a1 = -s.z;
  walk_to(w, a1 - 1, true);
  if (a1 < 0)
    step_lit(w, a1, LampValue{0});
  else
    w.step(a1, LampValue{0});
  walk_to(w, s.z);
}

// From a = 0, b = z = n: erase every lamp while keeping the one at n lit until the end.
void normalize(Walker& w, std::int64_t n) {
  if (w.cur().lamps.empty()) return;
  light_here(w);
  walk_to(w, 0);
  walk_to(w, n - 1, true);
  w.step(n, LampValue{0}, LampValue{0});
}

// g with z >= 0 in S(n)^inf, walk to (n, no lamps).
std::vector<Element> positive_walk(const WreathElement& g, std::int64_t n) {
  Walker w(g);
  for (std::int64_t guard = 0;; ++guard) {
    if (guard > 4 * n + 8) fail(ErrorKind::Internal, "line construction did not terminate");
    LineShape s = line_shape(w.cur());
    if (s.b >= n) break;
    if (s.z >= -s.a)
      case_one(w);
    else if (s.z == s.b)
      case_two(w);
    else
      fail(ErrorKind::Internal, "element outside the cases of the construction");
  }
  LineShape s = line_shape(w.cur());
  if (s.a != 0 || s.z != n) fail(ErrorKind::Internal, "construction ended away from a=0, b=z=n");
  normalize(w, n);
  return std::move(w.walk());
}

std::vector<Element> mirrored(std::vector<Element> walk) {
  for (auto& e : walk) e = Element(mirror(e.wreath()));
  return walk;
}

// Walk from g to (sign*n, no lamps). Needs z >= 0 for sign +1 and z <= 0 for sign -1.
std::vector<Element> signed_walk(const WreathElement& g, std::int64_t n, int sign) {
  if (sign > 0) return positive_walk(g, n);
  return mirrored(positive_walk(mirror(g), n));
}

int sign_of(const WreathElement& g) { return g.position >= 0 ? 1 : -1; }

std::vector<Element> canonical_walk(const WreathElement& g, std::int64_t n) {
  return signed_walk(g, n, sign_of(g));
}

void append(std::vector<Element>& out, const std::vector<Element>& more, bool reversed) {
  auto add = [&](const Element& e) {
    if (out.empty() || !(out.back() == e)) out.push_back(e);
  };
  if (reversed)
    std::for_each(more.rbegin(), more.rend(), add);
  else
    std::for_each(more.begin(), more.end(), add);
}

}  // namespace

PathCertificate line_connect_canonical(const Element& g, int n, const GroupModel& model) {
  line_model(model);
  check_line_input(g, n, model);
  return make_certificate(model, canonical_walk(g.wreath(), n), n, 2 * n + 2);
}

PathCertificate line_connect(const Element& g, const Element& g2, int n, const GroupModel& model) {
  line_model(model);
  check_line_input(g, n, model);
  check_line_input(g2, n, model);
  std::vector<Element> walk;
  append(walk, canonical_walk(g.wreath(), n), false);
  int s1 = sign_of(g.wreath()), s2 = sign_of(g2.wreath());
  if (s1 != s2) {
    // Crossing element: b = ceil(n/3), z = |a| = n - 2b, lamps on at a and b.
    std::int64_t b = (n + 2) / 3, z = n - 2 * b;
    WreathElement cross{z, {}};
    cross.lamps.set(b, kOn);
    if (z > 0) cross.lamps.set(-z, kOn);
    std::vector<Element> bridge;
    append(bridge, signed_walk(cross, n, 1), true);
    Walker w(cross);
    walk_to(w, -z);
    append(bridge, w.walk(), false);
    append(bridge, signed_walk(w.cur(), n, -1), false);
    append(walk, bridge, s1 < 0);
  }
  append(walk, canonical_walk(g2.wreath(), n), true);
  return make_certificate(model, walk, n, 2 * n + 2);
}

}  // namespace cayley
