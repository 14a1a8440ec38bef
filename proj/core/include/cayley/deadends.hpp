#ifndef CAYLEY_DEADENDS_HPP
#define CAYLEY_DEADENDS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cayley/annulus.hpp"
#include "cayley/ball_table.hpp"

namespace cayley {

struct DeadEndReport {
  std::string element;  // text encoding
  int n = 0;
  bool is_deadend = false;
  int width = 0;
  int retreat_depth = 0;
  int shadow_depth = 0;
  bool straight = false;
};

struct SInfinityCounts {
  int n = 0;
  std::size_t straight = 0;  // |S(n)^s-inf|
  std::size_t infinite = 0;  // |S(n)^inf|
  std::size_t sphere = 0;    // |S(n)|
  double straight_ratio() const { return sphere ? static_cast<double>(straight) / sphere : 0.0; }
  double finite_ratio() const { return sphere ? static_cast<double>(sphere - infinite) / sphere : 0.0; }
};

// Monotone reachability from the top level of the table: x at level k is
// straight when some neighbour at level k+1 is. Reported only for levels at
// most N - margin.
class StraightTable {
 public:
  StraightTable(const BallTable& table, int margin);
  int margin() const noexcept { return margin_; }
  int valid_up_to() const noexcept { return table_->radius() - margin_; }
  bool straight(std::size_t index) const;

 private:
  const BallTable* table_;
  int margin_;
  std::vector<char> straight_;
};

// Certifies levels up to N/2; on the line, non-straight elements pass the
// fixed point only from about 2N/3 upwards.
inline int default_straight_margin(int N) { return N - N / 2; }

// Shares certificates and the straightness table across queries.
class DeadEndAnalyzer {
 public:
  explicit DeadEndAnalyzer(const BallTable& table, std::optional<int> margin = std::nullopt);

  const BallTable& table() const noexcept { return *table_; }
  bool is_deadend(std::size_t index) const;
  int width(std::size_t index);
  int retreat_depth(std::size_t index);
  int shadow_depth(std::size_t index);
  bool straight(std::size_t index);
  DeadEndReport report(std::size_t index);

  std::vector<DeadEndReport> find_deadends(int n);
  SInfinityCounts s_infinity_ratio(int n);
  const InfiniteCertificate& certificate(int n);
  const StraightTable& straight_table();

 private:
  const BallTable* table_;
  int margin_;
  std::map<int, std::unique_ptr<InfiniteCertificate>> certs_;
  std::unique_ptr<StraightTable> straight_;
};

std::vector<DeadEndReport> find_deadends(int n, const BallTable& table);
int width(const Element& g, const BallTable& table);
int retreat_depth(const Element& g, const BallTable& table);
int shadow_depth(const Element& g, const BallTable& table, std::optional<int> margin = std::nullopt);
bool straight_infinity(const Element& g, const BallTable& table, std::optional<int> margin = std::nullopt);
SInfinityCounts s_infinity_ratio(int n, const BallTable& table, std::optional<int> margin = std::nullopt);

}  // namespace cayley

#endif
