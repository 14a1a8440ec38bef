#ifndef CAYLEY_ANNULUS_HPP
#define CAYLEY_ANNULUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/ball_table.hpp"
#include "cayley/oracles.hpp"

namespace cayley {

// Certified infinite part of B(n-1)^c. Every element of a finite component of
// B(n-1)^c lies in B(2n-2), so a component of B(2n-1) \ B(n-1) is infinite
// exactly when it reaches level 2n-1.
class InfiniteCertificate {
 public:
  InfiniteCertificate(const BallTable& table, int n);

  int n() const noexcept { return n_; }
  // Index must have level >= n.
  bool in_infinite(std::size_t index) const;
  std::size_t finite_count() const noexcept { return finite_count_; }

 private:
  const BallTable* table_;
  int n_;
  int escape_;
  std::size_t base_ = 0;
  std::vector<char> infinite_;
  std::size_t finite_count_ = 0;
};

// Single-element certificate; explores only the component of g.
Reach certify_infinite(const Element& g, int n, const BallTable& table);

enum class Restriction { Full, Sphere, SphereInfinite };
const char* to_string(Restriction r) noexcept;

struct AnnulusGraph {
  const BallTable* table = nullptr;
  int n = 0;
  int r = 0;
  bool filtered = false;
  std::vector<std::size_t> vertices;        // table indices, ascending
  std::vector<char> in_infinite;            // empty when not certified
  std::vector<std::uint32_t> adj_offsets;   // CSR over local vertex ids
  std::vector<std::uint32_t> adj;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::optional<std::uint32_t> local(std::size_t table_index) const;
  std::optional<std::uint32_t> local(const Element& g) const;
  int level(std::uint32_t v) const { return table->level(vertices[v]); }
};

// Throws InsufficientRadius when n+r > N, or when certification needs N >= 2n.
AnnulusGraph build_annulus(int n, int r, bool filtered, const BallTable& table);

struct Block {
  std::size_t id = 0;
  std::vector<std::size_t> members;  // table indices, ascending
};

struct ComponentPartition {
  Restriction restricted_to = Restriction::Full;
  std::vector<Block> blocks;  // ordered by smallest member
  std::size_t total = 0;
  double H = 0.0;
  double h = 1.0;
};

ComponentPartition components(const AnnulusGraph& annulus, Restriction restrict);

struct EntropyResult {
  double H = 0.0;
  double h = 1.0;
  std::size_t blocks = 0;
};

// Natural-log Shannon entropy of the counting measure; h = 1 for one block.
EntropyResult entropy(const ComponentPartition& partition);
EntropyResult entropy_of_sizes(const std::vector<std::size_t>& sizes);

struct ThicknessResult {
  std::optional<int> thickness;            // nullopt means above the cap
  std::vector<std::size_t> component_counts;  // S(n,r)^inf components for r = 0..last
  bool monotone = true;                    // connected stays connected
};

// Grows S(n,r)^inf shell by shell in one union-find. When `full_scan` is set
// the scan continues to r_max to check monotonicity.
ThicknessResult connection_thickness(int n, int r_max, const BallTable& table, bool full_scan = false);

std::optional<int> induced_distance(const AnnulusGraph& annulus, const Element& g1, const Element& g2);
std::vector<int> induced_distances_from(const AnnulusGraph& annulus, std::uint32_t source);
bool is_connected(const AnnulusGraph& annulus);

struct DiameterResult {
  std::optional<int> diameter;  // nullopt means disconnected
  bool lower_bound = false;     // sampled sources only
};

inline constexpr std::size_t kExactDiameterLimit = 200'000;
DiameterResult induced_diameter(const AnnulusGraph& annulus);

// Throws DisconnectedAnnulus.
double sprawl_estimate(const AnnulusGraph& annulus, std::size_t samples, std::uint64_t seed);

struct ConvexityRow {
  int n = 0;
  std::size_t pairs = 0;
  std::optional<int> detour;  // nullopt: some pair has no path through B(n-1)
};

// Pairs g1, g2 in S(n) with d(g1,g2) <= r; shortest path whose interior lies in B(n-1).
std::vector<ConvexityRow> almost_convexity_probe(int r, int n_lo, int n_hi, const BallTable& table);

struct CutsetResult {
  int separation = -1;  // -1 when one side is absent from the table
  bool pass = false;
  std::size_t left = 0;
  std::size_t right = 0;
};

CutsetResult verify_ladder_cutset(int n, const BallTable& table);

}  // namespace cayley

#endif
