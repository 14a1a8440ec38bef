#include "cayley/annulus.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>

#include "cayley/base_group.hpp"
#include "cayley/error.hpp"
#include "cayley/union_find.hpp"

namespace cayley {

namespace {

void require_radius(const BallTable& table, int needed, const std::string& what) {
  if (table.radius() < needed)
    fail(ErrorKind::InsufficientRadius, what + " needs B(" + std::to_string(needed) + "), table has B(" +
                                            std::to_string(table.radius()) + ")");
}

}  // namespace

const char* to_string(Restriction r) noexcept {
  switch (r) {
    case Restriction::Full: return "full";
    case Restriction::Sphere: return "sphere";
    case Restriction::SphereInfinite: return "sphere-infinite";
  }
  return "full";
}

// ------------------------------------------------------- InfiniteCertificate

InfiniteCertificate::InfiniteCertificate(const BallTable& table, int n)
    : table_(&table), n_(n), escape_(2 * n - 1) {
  if (n < 0) fail(ErrorKind::InvalidParameter, "radius must be nonnegative");
  if (n <= 1) return;
  require_radius(table, 2 * n, "certifying S(" + std::to_string(n) + ")^inf");
  base_ = table.level_range(n).begin;
  std::size_t end = table.level_range(escape_).end;
  std::size_t below_escape = table.level_range(escape_).begin;
  UnionFind uf(end - base_);
  std::vector<std::size_t> nbrs;
  for (std::size_t i = base_; i < below_escape; ++i) {
    table.neighbors(i, nbrs);
    for (std::size_t j : nbrs)
      if (j != kAbsent && j >= base_ && j < end)
        uf.unite(static_cast<std::uint32_t>(i - base_), static_cast<std::uint32_t>(j - base_));
  }
  std::vector<char> root_infinite(end - base_, 0);
  for (std::size_t i = below_escape; i < end; ++i) root_infinite[uf.find(static_cast<std::uint32_t>(i - base_))] = 1;
  infinite_.resize(below_escape - base_);
  for (std::size_t i = base_; i < below_escape; ++i) {
    bool inf = root_infinite[uf.find(static_cast<std::uint32_t>(i - base_))] != 0;
    infinite_[i - base_] = inf ? 1 : 0;
    if (!inf) ++finite_count_;
  }
}

bool InfiniteCertificate::in_infinite(std::size_t index) const {
  if (n_ <= 1) return true;
  int lvl = table_->level(index);
  if (lvl < n_) fail(ErrorKind::InvalidParameter, "element lies inside B(n-1)");
  if (lvl >= escape_) return true;
  return infinite_[index - base_] != 0;
}

Reach certify_infinite(const Element& g, int n, const BallTable& table) {
  require_radius(table, 2 * n, "certify_infinite at n=" + std::to_string(n));
  auto start = table.find(g);
  if (!start) return Reach::InInfinite;  // |g| > N >= 2n
  int lvl = table.level(*start);
  if (lvl < n) fail(ErrorKind::InvalidParameter, "|g| < n");
  if (n <= 1 || lvl >= 2 * n - 1) return Reach::InInfinite;
  // Best-first search towards high levels.
  std::priority_queue<std::pair<int, std::size_t>> queue;
  std::vector<std::size_t> seen{*start};
  queue.push({lvl, *start});
  std::vector<std::size_t> nbrs;
  while (!queue.empty()) {
    auto [l, i] = queue.top();
    queue.pop();
    if (l >= 2 * n - 1) return Reach::InInfinite;
    table.neighbors(i, nbrs);
    for (std::size_t j : nbrs) {
      if (j == kAbsent || table.level(j) < n) continue;
      auto pos = std::lower_bound(seen.begin(), seen.end(), j);
      if (pos != seen.end() && *pos == j) continue;
      seen.insert(pos, j);
      queue.push({table.level(j), j});
    }
  }
  return Reach::InFinite;
}

// ---------------------------------------------------------------- annulus

std::optional<std::uint32_t> AnnulusGraph::local(std::size_t table_index) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), table_index);
  if (it == vertices.end() || *it != table_index) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertices.begin());
}

std::optional<std::uint32_t> AnnulusGraph::local(const Element& g) const {
  auto i = table->find(g);
  if (!i) return std::nullopt;
  return local(*i);
}

AnnulusGraph build_annulus(int n, int r, bool filtered, const BallTable& table) {
  if (n < 0 || r < 0) fail(ErrorKind::InvalidParameter, "n and r must be nonnegative");
  require_radius(table, n + r, "S(" + std::to_string(n) + "," + std::to_string(r) + ")");
  AnnulusGraph a;
  a.table = &table;
  a.n = n;
  a.r = r;
  a.filtered = filtered;
  std::optional<InfiniteCertificate> cert;
  if (filtered || table.radius() >= 2 * n) cert.emplace(table, n);
  std::size_t begin = table.level_range(n).begin, end = table.level_range(n + r).end;
  for (std::size_t i = begin; i < end; ++i) {
    bool inf = cert ? cert->in_infinite(i) : false;
    if (filtered && !inf) continue;
    a.vertices.push_back(i);
    if (cert) a.in_infinite.push_back(inf ? 1 : 0);
  }
  a.adj_offsets.reserve(a.vertices.size() + 1);
  a.adj_offsets.push_back(0);
  std::vector<std::size_t> nbrs;
  for (std::size_t v = 0; v < a.vertices.size(); ++v) {
    table.neighbors(a.vertices[v], nbrs);
    for (std::size_t j : nbrs) {
      if (j == kAbsent || j < begin || j >= end) continue;
      if (auto u = a.local(j)) a.adj.push_back(*u);
    }
    a.adj_offsets.push_back(static_cast<std::uint32_t>(a.adj.size()));
  }
  return a;
}

ComponentPartition components(const AnnulusGraph& annulus, Restriction restrict) {
  if (restrict == Restriction::SphereInfinite && annulus.in_infinite.empty())
    fail(ErrorKind::InsufficientRadius, "sphere-infinite restriction needs a certified annulus");
  std::size_t nv = annulus.vertex_count();
  UnionFind uf(nv);
  for (std::uint32_t v = 0; v < nv; ++v)
    for (std::uint32_t e = annulus.adj_offsets[v]; e < annulus.adj_offsets[v + 1]; ++e) uf.unite(v, annulus.adj[e]);
  ComponentPartition p;
  p.restricted_to = restrict;
  std::vector<std::size_t> block_of(nv, kAbsent);
  for (std::uint32_t v = 0; v < nv; ++v) {
    if (restrict != Restriction::Full && annulus.level(v) != annulus.n) continue;
    if (restrict == Restriction::SphereInfinite && !annulus.in_infinite[v]) continue;
    std::uint32_t root = uf.find(v);
    if (block_of[root] == kAbsent) {
      block_of[root] = p.blocks.size();
      p.blocks.push_back(Block{p.blocks.size(), {}});
    }
    p.blocks[block_of[root]].members.push_back(annulus.vertices[v]);
    ++p.total;
  }
  auto e = entropy(p);
  p.H = e.H;
  p.h = e.h;
  return p;
}

EntropyResult entropy_of_sizes(const std::vector<std::size_t>& sizes) {
  EntropyResult out;
  double total = 0;
  for (auto s : sizes) total += static_cast<double>(s);
  out.blocks = sizes.size();
  if (sizes.size() <= 1 || total == 0) return out;
  for (auto s : sizes) {
    if (s == 0) continue;
    double mu = static_cast<double>(s) / total;
    out.H -= mu * std::log(mu);
  }
  out.h = out.H / std::log(static_cast<double>(sizes.size()));
  return out;
}

EntropyResult entropy(const ComponentPartition& partition) {
  std::vector<std::size_t> sizes;
  sizes.reserve(partition.blocks.size());
  for (const auto& b : partition.blocks) sizes.push_back(b.members.size());
  return entropy_of_sizes(sizes);
}

// --------------------------------------------------------------- thickness

ThicknessResult connection_thickness(int n, int r_max, const BallTable& table, bool full_scan) {
  if (n < 0 || r_max < 0) fail(ErrorKind::InvalidParameter, "n and r_max must be nonnegative");
  require_radius(table, std::max(2 * n, n + r_max), "thickness at n=" + std::to_string(n));
  InfiniteCertificate cert(table, n);
  std::size_t base = table.level_range(n).begin, end = table.level_range(n + r_max).end;
  UnionFind uf(end - base);
  std::vector<char> active(end - base, 0);
  std::size_t count = 0;
  ThicknessResult out;
  std::vector<std::size_t> nbrs;
  for (int r = 0; r <= r_max; ++r) {
    auto shell = table.level_range(n + r);
    for (std::size_t i = shell.begin; i < shell.end; ++i)
      if (cert.in_infinite(i)) {
        active[i - base] = 1;
        ++count;
      }
    for (std::size_t i = shell.begin; i < shell.end; ++i) {
      if (!active[i - base]) continue;
      table.neighbors(i, nbrs);
      for (std::size_t j : nbrs) {
        if (j == kAbsent || j < base || j >= shell.end || !active[j - base]) continue;
        if (uf.unite(static_cast<std::uint32_t>(i - base), static_cast<std::uint32_t>(j - base))) --count;
      }
    }
    out.component_counts.push_back(count);
    if (count == 1 && !out.thickness) {
      out.thickness = r;
      if (!full_scan) break;
    } else if (out.thickness && count != 1) {
      out.monotone = false;
    }
  }
  return out;
}

// --------------------------------------------------------- induced metric

std::vector<int> induced_distances_from(const AnnulusGraph& a, std::uint32_t source) {
  std::vector<int> dist(a.vertex_count(), -1);
  std::vector<std::uint32_t> queue{source};
  dist[source] = 0;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::uint32_t v = queue[q];
    for (std::uint32_t e = a.adj_offsets[v]; e < a.adj_offsets[v + 1]; ++e) {
      std::uint32_t u = a.adj[e];
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::optional<int> induced_distance(const AnnulusGraph& a, const Element& g1, const Element& g2) {
  auto v1 = a.local(g1), v2 = a.local(g2);
  if (!v1 || !v2) fail(ErrorKind::VertexNotInAnnulus, "element not in S(" + std::to_string(a.n) + "," + std::to_string(a.r) + ")");
  int d = induced_distances_from(a, *v1)[*v2];
  if (d < 0) return std::nullopt;
  return d;
}

bool is_connected(const AnnulusGraph& a) {
  if (a.vertex_count() <= 1) return true;
  auto dist = induced_distances_from(a, 0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

DiameterResult induced_diameter(const AnnulusGraph& a) {
  DiameterResult out;
  if (!is_connected(a)) return out;
  std::size_t nv = a.vertex_count();
  if (nv == 0) {
    out.diameter = 0;
    return out;
  }
  std::vector<std::uint32_t> sources;
  if (nv <= kExactDiameterLimit) {
    for (std::uint32_t v = 0; v < nv; ++v) sources.push_back(v);
  } else {
    out.lower_bound = true;
    std::size_t step = nv / 64;
    for (std::size_t v = 0; v < nv; v += step) sources.push_back(static_cast<std::uint32_t>(v));
  }
  int best = 0;
  for (auto s : sources) {
    auto dist = induced_distances_from(a, s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  out.diameter = best;
  return out;
}

double sprawl_estimate(const AnnulusGraph& a, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) fail(ErrorKind::InvalidParameter, "samples must be positive");
  if (!is_connected(a)) fail(ErrorKind::DisconnectedAnnulus, "sprawl needs a connected annulus");
  std::size_t nv = a.vertex_count();
  if (nv <= 1) return 0.0;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
  double sum = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    auto x = static_cast<std::uint32_t>(pick(rng));
    auto y = static_cast<std::uint32_t>(pick(rng));
    sum += induced_distances_from(a, x)[y];
  }
  return sum / static_cast<double>(samples);
}

// ------------------------------------------------------- almost convexity

std::vector<ConvexityRow> almost_convexity_probe(int r, int n_lo, int n_hi, const BallTable& table) {
  if (r < 1 || n_lo < 1 || n_hi < n_lo) fail(ErrorKind::InvalidParameter, "need r >= 1 and 1 <= n_lo <= n_hi");
  require_radius(table, n_hi + r, "almost-convexity probe");
  std::vector<ConvexityRow> rows;
  std::vector<std::size_t> nbrs;
  for (int n = n_lo; n <= n_hi; ++n) {
    ConvexityRow row;
    row.n = n;
    int worst = 0;
    bool unbounded = false;
    auto sph = table.level_range(n);
    std::size_t inner_end = table.level_range(n - 1).end;  // B(n-1) is [0, inner_end)
    for (std::size_t g1 = sph.begin; g1 < sph.end; ++g1) {
      // Targets: elements of S(n) within distance r of g1.
      std::vector<std::pair<std::size_t, int>> frontier{{g1, 0}};
      std::vector<std::size_t> seen{g1};
      std::vector<std::size_t> targets;
      for (std::size_t q = 0; q < frontier.size(); ++q) {
        auto [v, d] = frontier[q];
        if (d == r) continue;
        table.neighbors(v, nbrs);
        for (std::size_t u : nbrs) {
          if (u == kAbsent || std::find(seen.begin(), seen.end(), u) != seen.end()) continue;
          seen.push_back(u);
          frontier.push_back({u, d + 1});
          if (table.level(u) == n && u > g1) targets.push_back(u);
        }
      }
      if (targets.empty()) continue;
      // Distances from g1 through the interior B(n-1).
      std::vector<int> dist(inner_end, -1);
      std::vector<std::size_t> queue;
      table.neighbors(g1, nbrs);
      std::vector<std::size_t> g1_nbrs = nbrs;
      for (std::size_t u : g1_nbrs)
        if (u != kAbsent && u < inner_end && dist[u] < 0) {
          dist[u] = 1;
          queue.push_back(u);
        }
      for (std::size_t q = 0; q < queue.size(); ++q) {
        std::size_t v = queue[q];
        table.neighbors(v, nbrs);
        for (std::size_t u : nbrs)
          if (u != kAbsent && u < inner_end && dist[u] < 0) {
            dist[u] = dist[v] + 1;
            queue.push_back(u);
          }
      }
      for (std::size_t g2 : targets) {
        ++row.pairs;
        if (std::find(g1_nbrs.begin(), g1_nbrs.end(), g2) != g1_nbrs.end()) {
          worst = std::max(worst, 1);
          continue;
        }
        table.neighbors(g2, nbrs);
        int best = -1;
        for (std::size_t y : nbrs)
          if (y != kAbsent && y < inner_end && dist[y] >= 0 && (best < 0 || dist[y] + 1 < best)) best = dist[y] + 1;
        if (best < 0) unbounded = true;
        else worst = std::max(worst, best);
      }
    }
    if (!unbounded) row.detour = worst;
    rows.push_back(row);
  }
  return rows;
}

// ------------------------------------------------------------ ladder cutset

CutsetResult verify_ladder_cutset(int n, const BallTable& table) {
  const auto& info = table.model().info();
  if (info.family != Family::LadderLamplighter || info.variant != "sws")
    fail(ErrorKind::WrongModel, "the cutset check needs the ladder model with the sws set");
  if (n < 1) fail(ErrorKind::InvalidParameter, "n must be positive");
  require_radius(table, n + 2, "ladder cutset");
  const GroupModel& model = table.model();
  auto in_box = [&](const WreathElement& w) {
    if (std::llabs(Ladder::coord(w.position)) > n) return false;
    for (const auto& e : w.lamps.entries())
      if (std::llabs(Ladder::coord(e.site)) > n) return false;
    return true;
  };
  CutsetResult out;
  std::vector<int> dist(table.size(), -1);
  std::vector<std::size_t> queue;
  std::vector<char> right(table.size(), 0);
  for (std::size_t i = 0; i < table.size(); ++i) {
    Element x = table.element(i);
    auto c = Ladder::coord(x.wreath().position);
    if (std::llabs(c) != n + 1) continue;
    bool boundary = false;
    for (std::size_t s = 0; s < model.generator_count() && !boundary; ++s)
      boundary = in_box(model.multiply_generator(x, s).wreath());
    if (!boundary) continue;
    if (c < 0) {
      ++out.left;
      dist[i] = 0;
      queue.push_back(i);
    } else {
      ++out.right;
      right[i] = 1;
    }
  }
  std::vector<std::size_t> nbrs;
  for (std::size_t q = 0; q < queue.size() && out.separation < 0; ++q) {
    std::size_t v = queue[q];
    if (right[v]) {
      out.separation = dist[v];
      break;
    }
    table.neighbors(v, nbrs);
    for (std::size_t u : nbrs)
      if (u != kAbsent && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  out.pass = out.separation >= 2 * n;
  return out;
}

}  // namespace cayley
