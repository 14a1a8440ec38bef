#ifndef CAYLEY_TEST_HELPERS_HPP
#define CAYLEY_TEST_HELPERS_HPP

#include <map>
#include <memory>
#include <string>

#include "cayley/ball_table.hpp"
#include "cayley/models.hpp"

namespace testing {

// Tables shared across test cases within one process.
inline const cayley::BallTable& table(const std::string& model, int N) {
  static std::map<std::pair<std::string, int>, std::unique_ptr<cayley::BallTable>> cache;
  auto& slot = cache[{model, N}];
  if (!slot) slot = std::make_unique<cayley::BallTable>(cayley::enumerate_ball(cayley::make_group(model), N));
  return *slot;
}

inline cayley::Element parse(const cayley::BallTable& t, const std::string& text) { return t.model().parse(text); }

}  // namespace testing

#endif
