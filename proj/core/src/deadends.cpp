#include "cayley/deadends.hpp"

#include <algorithm>
#include <unordered_map>

#include "cayley/error.hpp"

namespace cayley {

namespace {

std::size_t index_of(const Element& g, const BallTable& table) {
  auto i = table.find(g);
  if (!i) fail(ErrorKind::InsufficientRadius, "element lies outside B(" + std::to_string(table.radius()) + ")");
  return *i;
}

void require_radius(const BallTable& table, int needed, const std::string& what) {
  if (table.radius() < needed)
    fail(ErrorKind::InsufficientRadius, what + " needs B(" + std::to_string(needed) + "), table has B(" +
                                            std::to_string(table.radius()) + ")");
}

}  // namespace

StraightTable::StraightTable(const BallTable& table, int margin) : table_(&table), margin_(margin) {
  if (margin < 0 || margin > table.radius()) fail(ErrorKind::InvalidParameter, "straightness margin out of range");
  int N = table.radius();
  straight_.assign(table.size(), 0);
  auto top = table.level_range(N);
  for (std::size_t i = top.begin; i < top.end; ++i) straight_[i] = 1;
  std::vector<std::size_t> nbrs;
  for (int k = N - 1; k >= 0; --k) {
    auto r = table.level_range(k);
    for (std::size_t i = r.begin; i < r.end; ++i) {
      table.neighbors(i, nbrs);
      for (std::size_t j : nbrs)
        if (j != kAbsent && table.level(j) == k + 1 && straight_[j]) {
          straight_[i] = 1;
          break;
        }
    }
  }
}

bool StraightTable::straight(std::size_t index) const {
  if (table_->level(index) > valid_up_to())
    fail(ErrorKind::InsufficientRadius, "straightness is certified only up to level " + std::to_string(valid_up_to()));
  return straight_[index] != 0;
}

DeadEndAnalyzer::DeadEndAnalyzer(const BallTable& table, std::optional<int> margin)
    : table_(&table), margin_(margin.value_or(default_straight_margin(table.radius()))) {}

const InfiniteCertificate& DeadEndAnalyzer::certificate(int n) {
  auto& slot = certs_[n];
  if (!slot) slot = std::make_unique<InfiniteCertificate>(*table_, n);
  return *slot;
}

const StraightTable& DeadEndAnalyzer::straight_table() {
  if (!straight_) straight_ = std::make_unique<StraightTable>(*table_, margin_);
  return *straight_;
}

bool DeadEndAnalyzer::is_deadend(std::size_t index) const {
  int n = table_->level(index);
  require_radius(*table_, n + 1, "dead-end test");
  std::vector<std::size_t> nbrs;
  table_->neighbors(index, nbrs);
  for (std::size_t j : nbrs)
    if (j != kAbsent && table_->level(j) == n + 1) return false;
  return true;
}

int DeadEndAnalyzer::width(std::size_t index) {
  int n = table_->level(index);
  require_radius(*table_, 2 * n + 2, "width");
  const auto& cert = certificate(n + 1);
  std::unordered_map<std::size_t, int> dist{{index, 0}};
  std::vector<std::size_t> queue{index};
  std::vector<std::size_t> nbrs;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t v = queue[q];
    int dv = dist[v];
    if (table_->level(v) > n && cert.in_infinite(v)) return dv;
    table_->neighbors(v, nbrs);
    for (std::size_t u : nbrs)
      if (u != kAbsent && dist.emplace(u, dv + 1).second) queue.push_back(u);
  }
  fail(ErrorKind::InsufficientRadius, "no escape found inside the table");
}

int DeadEndAnalyzer::retreat_depth(std::size_t index) {
  int n = table_->level(index);
  require_radius(*table_, 2 * n, "retreat depth");
  for (int d = 0; d <= n; ++d) {
    int m = n - d;
    if (m <= 1 || certificate(m).in_infinite(index)) return d;
  }
  return n;
}

bool DeadEndAnalyzer::straight(std::size_t index) { return straight_table().straight(index); }

int DeadEndAnalyzer::shadow_depth(std::size_t index) {
  int n = table_->level(index);
  const auto& st = straight_table();
  std::vector<std::size_t> layer{index}, next, nbrs;
  for (int k = 0; k <= n; ++k) {
    for (std::size_t y : layer)
      if (st.straight(y)) return k;
    next.clear();
    for (std::size_t y : layer) {
      table_->neighbors(y, nbrs);
      for (std::size_t u : nbrs)
        if (u != kAbsent && table_->level(u) == n - k - 1) next.push_back(u);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer.swap(next);
  }
  fail(ErrorKind::Internal, "no straight geodesic predecessor, not even the identity");
}

DeadEndReport DeadEndAnalyzer::report(std::size_t index) {
  DeadEndReport r;
  r.element = table_->model().format(table_->element(index));
  r.n = table_->level(index);
  r.is_deadend = is_deadend(index);
  r.width = width(index);
  r.retreat_depth = retreat_depth(index);
  r.shadow_depth = shadow_depth(index);
  r.straight = straight(index);
  return r;
}

std::vector<DeadEndReport> DeadEndAnalyzer::find_deadends(int n) {
  require_radius(*table_, 2 * n + 2, "find_deadends at n=" + std::to_string(n));
  std::vector<DeadEndReport> out;
  auto r = table_->level_range(n);
  for (std::size_t i = r.begin; i < r.end; ++i)
    if (is_deadend(i)) out.push_back(report(i));
  return out;
}

SInfinityCounts DeadEndAnalyzer::s_infinity_ratio(int n) {
  SInfinityCounts c;
  c.n = n;
  const auto& st = straight_table();
  const auto& cert = certificate(n);
  auto r = table_->level_range(n);
  c.sphere = r.size();
  for (std::size_t i = r.begin; i < r.end; ++i) {
    if (st.straight(i)) ++c.straight;
    if (cert.in_infinite(i)) ++c.infinite;
  }
  return c;
}

std::vector<DeadEndReport> find_deadends(int n, const BallTable& table) {
  return DeadEndAnalyzer(table).find_deadends(n);
}

int width(const Element& g, const BallTable& table) {
  return DeadEndAnalyzer(table).width(index_of(g, table));
}

int retreat_depth(const Element& g, const BallTable& table) {
  return DeadEndAnalyzer(table).retreat_depth(index_of(g, table));
}

int shadow_depth(const Element& g, const BallTable& table, std::optional<int> margin) {
  return DeadEndAnalyzer(table, margin).shadow_depth(index_of(g, table));
}

bool straight_infinity(const Element& g, const BallTable& table, std::optional<int> margin) {
  return DeadEndAnalyzer(table, margin).straight(index_of(g, table));
}

SInfinityCounts s_infinity_ratio(int n, const BallTable& table, std::optional<int> margin) {
  return DeadEndAnalyzer(table, margin).s_infinity_ratio(n);
}

}  // namespace cayley
