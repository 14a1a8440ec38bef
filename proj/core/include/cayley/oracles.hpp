#ifndef CAYLEY_ORACLES_HPP
#define CAYLEY_ORACLES_HPP

#include <cstdint>

#include "cayley/element.hpp"
#include "cayley/group_model.hpp"

namespace cayley {

enum class Reach { InInfinite, InFinite };
enum class SameComponent { Same, Different, Unknown };

const char* to_string(Reach r) noexcept;
const char* to_string(SameComponent s) noexcept;

// Extremes of supp(f) together with 0 and z, for elements over Z.
struct LineShape {
  std::int64_t a = 0;  // <= 0
  std::int64_t b = 0;  // >= 0
  std::int64_t z = 0;
};

LineShape line_shape(const WreathElement& g);
// Reflection x -> -x of position and lamp sites.
WreathElement mirror(const WreathElement& g);

// Exact test for membership of g in S(n)^inf (line and tree lamplighters).
// Throws NoOracle for other models, LengthMismatch if |g| != n.
Reach infinite_component_oracle(const Element& g, int n, const GroupModel& model);

// Same/Different when one of the two described regimes applies, Unknown otherwise.
SameComponent same_component_oracle(const Element& g, const Element& g2, int n, int r,
                                    const GroupModel& model);

// Line lamplighter: g admits a geodesic ray leaving through S(n), S(n+1), ...
bool line_straight_oracle(const Element& g, const GroupModel& model);

}  // namespace cayley

#endif
