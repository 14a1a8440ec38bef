#include <algorithm>
#include <set>

#include "cayley/error.hpp"
#include "cayley/models.hpp"
#include "cayley/oracles.hpp"
#include "cayley/paths.hpp"
#include "walker.hpp"

namespace cayley {

namespace {

using detail::Walker;

constexpr LampValue kOn = 1;

struct TreeRun {
  const InvolutionTree& tree;
  int R;
  Walker w;
  TreeRunStats stats;

  int h(Site v) const { return InvolutionTree::height(v); }

  std::set<Site> hull() const {
    std::set<Site> c{0};
    auto climb = [&](Site v) {
      while (c.insert(v).second) v = tree.parent(v);
    };
    climb(w.pos());
    for (const auto& e : w.cur().lamps.entries()) climb(e.site);
    return c;
  }

  std::vector<Site> children(Site v) const {
    std::vector<Site> out;
    for (Site u : tree.neighbors(v))
      if (h(u) == h(v) + 1) out.push_back(u);
    return out;
  }

  // Vertices of the geodesic from u to v, both included.
  std::vector<Site> geodesic(Site u, Site v) const {
    std::vector<Site> up, down;
    while (h(u) > h(v)) up.push_back(u), u = tree.parent(u);
    while (h(v) > h(u)) down.push_back(v), v = tree.parent(v);
    while (u != v) {
      up.push_back(u), u = tree.parent(u);
      down.push_back(v), v = tree.parent(v);
    }
    up.push_back(u);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
  }

  // Leaves the current vertex lit, then walks the geodesic keeping every lamp.
  void go_to(Site target, bool keep_lit = true) {
    auto route = geodesic(w.pos(), target);
    for (std::size_t i = 1; i < route.size(); ++i) {
      bool lit = keep_lit && i == 1 && w.lamp(w.pos()) == 0;
      w.step(route[i], lit ? std::optional<LampValue>(kOn) : std::nullopt);
    }
  }

  void light(Site v) {
    go_to(v);
    if (w.lamp(v) == 0) w.set_here(kOn);
  }

  // Walks towards `target` and stops at the first vertex of height `stop` past the turning point.
  void descend_towards(Site target, int stop) {
    auto route = geodesic(w.pos(), target);
    std::size_t lowest = 0;
    for (std::size_t i = 0; i < route.size(); ++i)
      if (h(route[i]) < h(route[lowest])) lowest = i;
    std::size_t end = route.size() - 1;
    for (std::size_t i = lowest; i < route.size(); ++i)
      if (h(route[i]) == stop) {
        end = i;
        break;
      }
    for (std::size_t i = 1; i <= end; ++i) w.step(route[i]);
  }

  // First vertex outside C in breadth-first order from `root`, descendants within `radius`.
  // Its parent lies in C, so lighting it adds exactly one edge.
  std::optional<Site> outside(const std::set<Site>& c, Site root, int radius) const {
    std::vector<Site> layer{root};
    for (int k = 0; k <= radius && !layer.empty(); ++k) {
      for (Site v : layer)
        if (!c.count(v)) return v;
      std::vector<Site> next;
      for (Site v : layer)
        for (Site ch : children(v)) next.push_back(ch);
      layer.swap(next);
    }
    return std::nullopt;
  }

  // Claim: raise the lighter to height >= R inside S(n, R).
  void claim(const std::set<Site>& c) {
    int h0 = h(w.pos());
    Site v = -1, out = -1;
    for (Site x : c) {
      if (h(x) > h0) continue;
      for (Site y : children(x))
        if (!c.count(y)) {
          v = x, out = y;
          break;
        }
      if (v >= 0) break;
    }
    Site deep = *std::max_element(c.begin(), c.end(), [&](Site a, Site b) { return h(a) < h(b); });
    if (v < 0 || h(deep) < R) fail(ErrorKind::Internal, "claim phase found no boundary vertex or deep vertex");
    go_to(v);
    w.step(out, std::nullopt, kOn);
    w.step(v);
    descend_towards(deep, h0 + 2);
    ++stats.claim_rounds;
  }

  bool elementary(const std::set<Site>& c) const {
    if (h(w.pos()) != R) return false;
    for (Site x : c)
      if (h(x) > R) return false;
    return true;
  }

  void iterate(const std::set<Site>& c) {
    Site gamma = w.pos();
    int hg = h(gamma);
    Site delta = tree.ancestor(gamma, R + 2);
    Site vmax = -1;
    int hmax = -1;
    for (Site x : c)
      if ((delta == 0 || tree.is_descendant(x, delta)) && h(x) > hmax) hmax = h(x), vmax = x;
    auto off = hg <= R + 2 ? outside(c, 0, R) : outside(c, delta, R + 1);
    if (!off) fail(ErrorKind::Internal, "no free vertex in the search region");
    if (hg == hmax) {
      light(*off);
      go_to(gamma);
      Site p = tree.parent(gamma);
      w.step(p, LampValue{0});
      Site sibling = -1;
      for (Site s : children(p))
        if (s != gamma && c.count(s)) {
          sibling = s;
          break;
        }
      if (sibling >= 0) {
        w.step(sibling);
        ++stats.case_1a;
      } else {
        w.step(tree.parent(p), LampValue{0});
        ++stats.case_1b;
      }
    } else {
      light(*off);
      if (hmax >= hg + 2) {
        descend_towards(vmax, hg + 2);
        ++stats.case_2a;
      } else {
        go_to(vmax, false);
        w.step(tree.parent(vmax), LampValue{0});
        ++stats.case_2b;
      }
    }
  }

  // From C = B_T(e,R), lighter at height R: every lamp of the ball at value 1, lighter at e.
  void finish() {
    while (w.pos() != 0) w.step(tree.parent(w.pos()), kOn);
    sweep(0);
    if (w.lamp(0) != kOn) w.set_here(kOn);
  }

  void sweep(Site v) {
    if (h(v) >= R) return;
    for (Site c : children(v)) {
      w.step(c, kOn, kOn);
      sweep(c);
      w.step(v, kOn);
    }
  }
};

}  // namespace

std::int64_t tree_ball_edges(int d, int R) {
  std::int64_t total = 0, layer = d;
  for (int k = 1; k <= R; ++k, layer *= d - 1) total += layer;
  return total;
}

std::size_t tree_iteration_cap(int d, int R) {
  auto v = static_cast<std::size_t>(tree_ball_edges(d, R + 2) + 1);
  return 16 * v * v;
}

Element sample_tree_sphere(const GroupModel& model, int n, std::mt19937_64& rng) {
  if (model.info().family != Family::TreeLamplighter)
    fail(ErrorKind::WrongModel, "tree sampling needs a tree lamplighter, got " + model.name());
  if (n < 2) fail(ErrorKind::InvalidParameter, "tree sampling needs n >= 2");
  const auto& wm = static_cast<const WreathModel&>(model);
  const auto& tree = static_cast<const InvolutionTree&>(wm.base());
  auto pick = [&](std::size_t size) { return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng); };
  // |g| = 2k - h with h <= k and h = n mod 2.
  std::vector<int> heights;
  for (int h = n % 2; h <= n; h += 2) heights.push_back(h);
  int hg = heights[pick(heights.size())];
  int k = (n + hg) / 2;
  Site gamma = 0;
  std::set<Site> c{0};
  for (int i = 0; i < hg; ++i) {
    std::vector<Site> up;
    for (Site u : tree.neighbors(gamma))
      if (InvolutionTree::height(u) > InvolutionTree::height(gamma)) up.push_back(u);
    gamma = up[pick(up.size())];
    c.insert(gamma);
  }
  while (static_cast<int>(c.size()) - 1 < k) {
    std::vector<Site> frontier;
    for (Site x : c)
      for (Site u : tree.neighbors(x))
        if (InvolutionTree::height(u) > InvolutionTree::height(x) && !c.count(u)) frontier.push_back(u);
    c.insert(frontier[pick(frontier.size())]);
  }
  int m = wm.lamp_order();
  std::uniform_int_distribution<LampValue> value(1, m - 1), coin(0, 1);
  WreathElement g{gamma, {}};
  for (Site x : c) {
    bool leaf = x != 0;
    for (Site u : tree.neighbors(x))
      if (InvolutionTree::height(u) > InvolutionTree::height(x) && c.count(u)) leaf = false;
    if ((leaf && x != gamma) || coin(rng)) g.lamps.set(x, value(rng));
  }
  return g;
}

PathCertificate tree_connect_elementary(const Element& g, int R, const GroupModel& model, TreeRunStats* stats) {
  if (model.info().family != Family::TreeLamplighter)
    fail(ErrorKind::WrongModel, "tree path construction needs a tree lamplighter, got " + model.name());
  const auto& wm = static_cast<const WreathModel&>(model);
  const auto& tree = static_cast<const InvolutionTree&>(wm.base());
  if (R < 1) fail(ErrorKind::WrongRadiusForm, "R must be at least 1");
  std::int64_t n = 2 * tree_ball_edges(tree.degree(), R) - R;
  std::int64_t len = model.exact_length(g);
  if (len != n)
    fail(ErrorKind::WrongRadiusForm, "|g| = " + std::to_string(len) + " but R = " + std::to_string(R) +
                                         " needs n = 2|B_T(e,R)| - R = " + std::to_string(n));
  if (infinite_component_oracle(g, static_cast<int>(n), model) != Reach::InInfinite)
    fail(ErrorKind::NotInInfiniteComponent, model.format(g) + " is not in S(n)^inf");

  TreeRun run{tree, R, Walker(g.wreath()), {}};
  while (run.h(run.w.pos()) <= R - 2) run.claim(run.hull());
  std::size_t cap = tree_iteration_cap(tree.degree(), R);
  for (;;) {
    auto c = run.hull();
    if (run.elementary(c)) break;
    if (++run.stats.iterations > cap) fail(ErrorKind::Internal, "tree construction exceeded its iteration cap");
    run.iterate(c);
  }
  run.finish();
  if (stats) *stats = run.stats;
  return make_certificate(model, run.w.walk(), static_cast<int>(n), static_cast<int>(n) + R + 4);
}

}  // namespace cayley
