#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "minkowski/norm.hpp"

namespace minkowski {

struct Instance {
  PolytopalNorm norm;
  std::vector<Vec> terminals;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// A tree on slots [0, terminals) (fixed points) and
/// [terminals, terminals + steiner) (free Steiner points).
struct SteinerTopology {
  std::size_t terminals = 0;
  std::size_t steiner = 0;
  std::vector<Edge> edges;

  std::size_t slots() const { return terminals + steiner; }
};

/// Throws InputError unless the topology is a spanning tree of its slots in
/// which every Steiner slot has degree >= 3.
void validate_topology(const SteinerTopology& t);

enum class CertificateLevel { ExactGlobal, ExactForTopology, Heuristic };
const char* to_string(CertificateLevel level);

struct SteinerTreeResult {
  SteinerTopology topology;
  std::vector<Vec> terminals;
  std::vector<Vec> steiner_positions;
  Rat length;
  CertificateLevel level = CertificateLevel::ExactForTopology;

  /// Terminals followed by Steiner points, indexed like topology slots.
  std::vector<Vec> positions() const;
};

/// Sum of ||x - y|| over the edges. Throws InputError on a dangling index.
Rat tree_length(const PolytopalNorm& n, const std::vector<Vec>& positions, const std::vector<Edge>& edges);

/// Full topologies for n terminals: n - 2 Steiner points of degree 3,
/// (2n - 5)!! of them, generated by inserting terminal k on every edge of each
/// topology for k - 1 terminals. n = 2 yields the single edge. 2 <= n <= 7.
std::vector<SteinerTopology> enumerate_topologies(std::size_t n);

/// Exact minimum length over Steiner positions for one topology (one LP).
SteinerTreeResult optimize_topology(const PolytopalNorm& n, const std::vector<Vec>& terminals,
                                    const SteinerTopology& t);

inline constexpr std::size_t kExactTerminalLimit = 7;

/// Exact Steiner minimal tree by optimizing every full topology. The first
/// topology in enumeration order wins ties. Throws SizeLimit above 7
/// terminals.
SteinerTreeResult exact_smt(const Instance& inst, unsigned jobs = 1);

struct StarVerdict {
  bool is_smt = false;
  Rat star_length;
  SteinerTreeResult smt;  // optimal tree; strictly shorter than the star when !is_smt
};

/// Compares the star from `center` against the exact SMT of the leaves
/// (plus the center when include_center).
StarVerdict star_is_smt(const PolytopalNorm& n, const Vec& center, const std::vector<Vec>& leaves,
                        bool include_center, unsigned jobs = 1);

/// Star from `center` to every terminal. The center becomes a Steiner slot
/// unless it coincides with a terminal.
SteinerTreeResult star_tree(const Instance& inst, const Vec& center);

/// Minimum spanning tree of the terminals (no Steiner points).
SteinerTreeResult minimum_spanning_tree(const Instance& inst);

struct ImproveOptions {
  std::uint64_t seed = 1;
  std::size_t iterations = 300;
};

/// Seeded local search over tree topologies with one LP per candidate.
/// Moves: subtree regrafting, Steiner insertion at an angle (non-absorbing
/// angles preferred), and contraction of a Steiner point into a neighbour.
/// Candidates no longer than the current tree are accepted. The result is
/// never longer than the seed and is reproducible for a fixed seed.
SteinerTreeResult improve_tree(const Instance& inst, const SteinerTreeResult& seed, const ImproveOptions& options = {});

struct ChainReport {
  bool all_absorbing = false;        // (1)
  bool all_distances_two = false;    // (2)
  bool star_smt_of_leaves = false;   // (3)
  bool star_smt_with_origin = false; // (4)
  bool steiner_antipodal = false;
  bool implications_hold = false;    // (2) => (3) => (4) => (1)
  bool equivalence_holds = false;    // all four agree (required only when steiner_antipodal)
  bool ok = false;
  Rat star_length;
  Rat smt_leaves_length;
  Rat smt_with_origin_length;
};

/// Evaluates the four star conditions for unit vectors p_1..p_k (k <= 6) and
/// checks the implication chain, plus full equivalence for Steiner antipodal
/// norms. A single vector (k = 1) is degenerate: all conditions hold by
/// convention. `steiner_antipodal` may be supplied to skip the face scan.
ChainReport verify_theorem_chain(const PolytopalNorm& n, const std::vector<Vec>& unit_vectors, unsigned jobs = 1,
                                 std::optional<bool> steiner_antipodal = std::nullopt);

struct PlaneReport {
  bool all_absorbing = false;
  bool star_is_smt = false;
  bool agree = false;
  Rat star_length;
  Rat smt_length;
};

/// Planar check: all angles p_i o p_j absorbing <=> the star from o is an
/// SMT of {o, p_1, ..., p_k}. k <= 6.
PlaneReport verify_plane_theorem(const PolytopalNorm& n, const std::vector<Vec>& points, unsigned jobs = 1);

}  // namespace minkowski
