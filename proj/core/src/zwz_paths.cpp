#include <algorithm>

#include "cayley/error.hpp"
#include "cayley/models.hpp"
#include "cayley/paths.hpp"
#include "walker.hpp"

namespace cayley {

namespace {

using detail::Walker;

int sign(LampValue v) { return (v > 0) - (v < 0); }

// Shortest tour from 0 through `sites` ending at `end`.
std::int64_t tour(const LampConfig& f, Site extra, Site end) {
  std::int64_t a = std::min<std::int64_t>({0, extra, end}), b = std::max<std::int64_t>({0, extra, end});
  for (const auto& e : f.entries()) a = std::min(a, e.site), b = std::max(b, e.site);
  return 2 * (b - a) - std::abs(end);
}

// Sites visited by the optimal tour of g, from 0 to the position.
std::vector<Site> tour_path(const WreathElement& g) {
  Site z = g.position, a = std::min<Site>(0, z), b = std::max<Site>(0, z);
  for (const auto& e : g.lamps.entries()) a = std::min(a, e.site), b = std::max(b, e.site);
  std::vector<Site> path{0};
  auto go = [&](Site to) {
    while (path.back() != to) path.push_back(path.back() + (to > path.back() ? 1 : -1));
  };
  if (z >= 0) {
    go(a), go(b), go(z);
  } else {
    go(b), go(a), go(z);
  }
  return path;
}

struct Bricks {
  Walker w;

  void walk(Site to) {
    WreathElement next = w.cur();
    next.position = to;
    w.push(std::move(next));
  }
  void add(LampValue delta) {
    WreathElement next = w.cur();
    next.lamps.set(next.position, next.lamps.at(next.position) + delta);
    w.push(std::move(next));
  }

  // Moves `count` bricks from the current site p to the neighbour q, one at a time.
  // dir_l is the direction in which the pile at q grows.
  void transfer(Site q, std::int64_t count, int dir_l) {
    Site p = w.pos();
    LampConfig start = w.cur().lamps;
    std::int64_t here = tour(start, p, p), there = tour(start, p, q);
    for (std::int64_t s = 0; s < count; ++s) {
      LampValue toward_zero = -sign(w.lamp(p));
      if (there >= here) {
        // Cases 1 and 2: lower the pile at p first.
        add(toward_zero);
        walk(q);
        add(dir_l);
        walk(p);
      } else {
        // Case 3: raise the pile at q first.
        walk(q);
        add(dir_l);
        walk(p);
        add(toward_zero);
      }
    }
  }

  // One induction step: empty the pile at p onto q, move to q, add the extra brick.
  void collapse_step(Site q, int dir_l) {
    transfer(q, std::abs(w.lamp(w.pos())), dir_l);
    walk(q);
    add(dir_l);
  }
};

int grow_direction(LampValue current) { return current != 0 ? sign(current) : 1; }

}  // namespace

PathCertificate zwz_collapse(const Element& g, int n, const GroupModel& model) {
  if (model.info().family != Family::ZwrZ)
    fail(ErrorKind::WrongModel, "brick collapse needs the Z wr Z walk-or-switch model, got " + model.name());
  if (n < 0) fail(ErrorKind::InvalidParameter, "n must be non-negative");
  std::int64_t len = model.exact_length(g);
  if (len < n || len > n + 2)
    fail(ErrorKind::OutsideAnnulus, model.format(g) + " has length " + std::to_string(len) + ", outside S(" +
                                        std::to_string(n) + ",2)");
  Bricks b{Walker(g.wreath())};
  if (len == n + 2) {
    for (std::size_t i = 0; i < model.generator_count(); ++i) {
      Element next = model.multiply_generator(g, i);
      if (model.exact_length(next) == n + 1) {
        b.w.push(next.wreath());
        break;
      }
    }
  } else if (len == n) {
    b.add(grow_direction(b.w.lamp(b.w.pos())));
  }
  auto path = tour_path(b.w.cur());
  for (std::size_t t = path.size() - 1; t > 0; --t) {
    if (b.w.pos() != path[t]) fail(ErrorKind::Internal, "brick walk left the tour");
    b.collapse_step(path[t - 1], grow_direction(b.w.lamp(path[t - 1])));
  }
  if (b.w.lamp(0) < 0) {
    // Sign change through (1, n at 1): move all but one brick, drop the last one, then collapse back.
    std::int64_t pile = std::abs(b.w.lamp(0));
    b.transfer(1, pile - 1, 1);
    b.add(1);
    b.walk(1);
    b.collapse_step(0, 1);
  }
  return make_certificate(model, b.w.walk(), n, n + 2);
}

}  // namespace cayley
