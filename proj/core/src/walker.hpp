#ifndef CAYLEY_SRC_WALKER_HPP
#define CAYLEY_SRC_WALKER_HPP

#include <optional>
#include <vector>

#include "cayley/element.hpp"

namespace cayley::detail {

// Records a lamplighter walk one generator at a time.
class Walker {
 public:
  explicit Walker(WreathElement start) : cur_(std::move(start)) { walk_.emplace_back(cur_); }

  const WreathElement& cur() const noexcept { return cur_; }
  Site pos() const noexcept { return cur_.position; }
  LampValue lamp(Site s) const noexcept { return cur_.lamps.at(s); }
  std::vector<Element>& walk() noexcept { return walk_; }

  // Switch at the current site, step to `to`, switch at `to`: one sws generator.
  void step(Site to, std::optional<LampValue> depart = std::nullopt,
            std::optional<LampValue> arrive = std::nullopt) {
    if (depart) cur_.lamps.set(cur_.position, *depart);
    cur_.position = to;
    if (arrive) cur_.lamps.set(to, *arrive);
    walk_.emplace_back(cur_);
  }

  // Lone switch at the current site.
  void set_here(LampValue v) {
    if (cur_.lamps.at(cur_.position) == v) return;
    cur_.lamps.set(cur_.position, v);
    walk_.emplace_back(cur_);
  }

  // Direct move to an adjacent element.
  void push(WreathElement next) {
    cur_ = std::move(next);
    walk_.emplace_back(cur_);
  }

 private:
  WreathElement cur_;
  std::vector<Element> walk_;
};

}  // namespace cayley::detail

#endif
