#ifndef CAYLEY_PATHS_HPP
#define CAYLEY_PATHS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/ball_table.hpp"
#include "cayley/element.hpp"
#include "cayley/group_model.hpp"

namespace cayley {

// A walk in the Cayley graph with the length of every step and the annulus it must stay in.
struct PathCertificate {
  std::string model;
  std::vector<std::string> steps;  // text encodings
  std::vector<std::int64_t> lengths;
  int low = 0;
  int high = 0;
  bool adjacency_ok = true;
  bool window_ok = true;

  bool ok() const noexcept { return adjacency_ok && window_ok; }
  std::size_t size() const noexcept { return steps.size(); }
};

struct VerifyResult {
  bool ok = true;
  std::optional<std::size_t> first_violation;
  std::string reason;
};

// Builds a certificate from a walk, computing lengths with the closed form.
PathCertificate make_certificate(const GroupModel& model, const std::vector<Element>& walk, int low, int high);

// Re-checks parsing, adjacency, recorded lengths and the window.
VerifyResult verify_certificate(const PathCertificate& cert, const BallTable& table);
VerifyResult verify_certificate(const PathCertificate& cert, const GroupModel& model);

// "# model <name>" and "# window <low> <high>" headers, then "<index>,<length>,<encoding>" lines.
std::string serialize_certificate(const PathCertificate& cert);
PathCertificate parse_certificate(std::string_view text);

// Line lamplighter, g in S(n)^inf: walk inside S(n, n+2) to (+-n, no lamps), signed like z.
PathCertificate line_connect_canonical(const Element& g, int n, const GroupModel& model);
// Joins two elements of S(n)^inf, crossing between the two signs when needed.
PathCertificate line_connect(const Element& g, const Element& g2, int n, const GroupModel& model);

struct TreeRunStats {
  std::size_t iterations = 0;
  std::size_t claim_rounds = 0;
  std::size_t case_1a = 0, case_1b = 0, case_2a = 0, case_2b = 0;
};

// Tree lamplighter, n = 2|B_T(e,R)| - R, g in S(n)^inf: walk inside S(n, R+4) to the
// configuration with every lamp of B_T(e,R) at value 1 and the lighter at e.
PathCertificate tree_connect_elementary(const Element& g, int R, const GroupModel& model,
                                        TreeRunStats* stats = nullptr);
// Number of edges of B_T(e,R) in the d-regular tree.
std::int64_t tree_ball_edges(int d, int R);
// Generous cap on the main loop of tree_connect_elementary.
std::size_t tree_iteration_cap(int d, int R);

// Random element of S(n) of a tree lamplighter: a random subtree grown around the geodesic
// to a random position, leaves lit, other lamps random. Not uniform.
Element sample_tree_sphere(const GroupModel& model, int n, std::mt19937_64& rng);

// Z wr Z walk-or-switch, g in S(n,2): the brick-moving walk to (0, (n+1) at 0).
// Steps leaving [n, n+2] are kept and flagged through window_ok.
PathCertificate zwz_collapse(const Element& g, int n, const GroupModel& model);

}  // namespace cayley

#endif
