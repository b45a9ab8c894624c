#pragma once

// Desk-scale embedding machinery for crowns and tree posets: inclusion
// bigraphs between a family and a slice of it, min-degree cores, greedy
// spiders with color-set disciplines, completion to P_{2k-1} and to crowns,
// the pivot transformation for trees, and marked-chain badness/goodness.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/band.hpp"
#include "rainbow/copy_detect.hpp"
#include "rainbow/family.hpp"
#include "rainbow/poset.hpp"

namespace rainbow {

// ------------------------------------------------------------ bigraphs

// Bipartite graph between `lower` and `upper` with an edge (F, F1) whenever
// F subset F1 and |F| = |F1| - j. Edge color set: F1 \ F.
struct InclusionBigraph {
  SetFamily lower;
  SetFamily upper;
  int j = 0;
  // Neighbor indices, increasing, on the opposite side.
  std::vector<std::vector<int>> lower_adj;
  std::vector<std::vector<int>> upper_adj;

  std::size_t edge_count() const;
  std::size_t vertex_count() const { return lower.size() + upper.size(); }
  double average_degree() const;
  int min_degree() const;  // 0 for the empty graph
};

// upper must be a subfamily of family (BadParams otherwise).
InclusionBigraph build_bigraph(const SetFamily& family, const SetFamily& upper, int j);

// Repeatedly deletes vertices of degree below d. Throws Error if the average
// degree was at least 2d and nothing survives.
InclusionBigraph min_degree_subgraph(const InclusionBigraph& graph, int d);

// ------------------------------------------------------------ spiders

enum class Discipline { kDisjoint, kFraction };

struct SpiderEmbedding {
  Mask center = 0;
  bool center_upper = false;  // center taken from the upper side
  int j = 0;
  int k = 0;                  // only used by the fraction discipline
  Discipline discipline = Discipline::kDisjoint;
  // legs[i][t]: vertex at distance t + 1 from the center.
  std::vector<std::vector<Mask>> legs;
  // edge_colors[i][t]: color set of the edge ending at legs[i][t].
  std::vector<std::vector<Mask>> edge_colors;
  Mask used_colors = 0;

  int leg_length() const { return legs.empty() ? 0 : static_cast<int>(legs.front().size()); }
  Mask leaf(int i) const { return legs[i].back(); }
  Mask leaf_colors(int i) const { return edge_colors[i].back(); }
  // Intersection of every set of the spider.
  Mask intersection() const;
  // Images in the element order of catalog spider:LxN.
  std::vector<Mask> images() const;
};

enum class SpiderStatus { kOk, kStuck, kNotStrong };

struct SpiderResult {
  SpiderStatus status = SpiderStatus::kStuck;
  SpiderEmbedding spider;  // partial when stuck
  int legs_done = 0;
  std::string detail;
};

// Grows legs of `leg_length` one after another from the first usable center,
// always taking the first admissible neighbor. The center sits on the upper
// side exactly when leg_length is even, so leaves come out on the upper side.
// kDisjoint: every new color set avoids all earlier ones. kFraction: every
// new color set meets the earlier union in fewer than j/k elements. The
// result is re-checked as a strong copy of the spider poset.
SpiderResult greedy_spider(const InclusionBigraph& graph, int legs, int leg_length,
                           Discipline discipline, int k = 1);

// ------------------------------------------------------------ completion

struct PathCompletion {
  bool found = false;
  int leaf_a = -1, leaf_b = -1;  // spider leg indices
  int y = 0;                     // element of the intersection left out
  Mask lower_a = 0, lower_b = 0;
  std::optional<CopyEmbedding> copy;  // strong P_{2k-1}
  std::uint64_t triples_tried = 0;
};

// Looks for legs a < b, y in the spider intersection and members G_a, G_b of
// the family with G_a subset F_a \ {y}, |G_a| = |F_a| - j and the lowest
// color of F_a's edge inside G_a (same for b). The two legs plus G_a, G_b form
// P_{2k-1} with a_1 = G_a, a_k = G_b; the first triple whose assembly is a
// strong copy with G_{a_i} not inside G_{a_1} u G_{a_k} wins. Legs must have
// length k - 2. Pairs are split across threads, first hit by order.
PathCompletion complete_p2km1(const SpiderEmbedding& spider, const SetFamily& family, int k);
PathCompletion complete_p2km1_serial(const SpiderEmbedding& spider, const SetFamily& family, int k);

struct CrownCompletion {
  CopyEmbedding copy;  // strong O_2k
  Mask top = 0;        // the added b_k
  bool top_in_band = false;  // |b_k| >= n/2 + 2 sqrt(n ln n)
};

// Adds b_k = [n] minus the lowest element of each A_i \ (A_1 u A_k),
// 2 <= i <= k-1. Throws PreconditionViolated if some A_i lies inside
// A_1 u A_k or an image is outside the standard band, Infeasible if the
// result is not a strong crown.
CrownCompletion complete_crown(const CopyEmbedding& path, int n);

// ------------------------------------------------------------ trees

struct PivotTransform {
  Poset poset;
  std::vector<int> added;  // new chain v_1 < ... < v_{k-2}
  int pivot = -1;          // m in the new poset
  bool degenerate = false; // height(T) <= 2, nothing added
};

// Reverses the Hasse arcs into the maximal element m and hangs a chain of
// height(T) - 3 new elements below m. Throws BadPivot unless m is maximal and
// lies on every longest chain.
PivotTransform t0_transform(const Poset& tree, int m);

struct SpecialTreePlan {
  PivotTransform pivot;
  Poset saturated;
  std::vector<Poset> peel;
  // Step at which the peel equals the union of the down-sets of m's lower
  // neighbours, if it ever does.
  std::optional<int> down_closure_step;
};

SpecialTreePlan special_tree_plan(const Poset& tree, int m);

// ------------------------------------------------------------ marked chains

struct MarkedChain {
  std::vector<int> chain;    // permutation of [n], 1-based
  std::vector<Mask> markers; // increasing size

  std::vector<Mask> chain_sets() const;  // 0, {pi_1}, ..., [n]
  bool on_chain(Mask m) const;
  friend bool operator==(const MarkedChain&, const MarkedChain&) = default;
};

// Every k-marked chain with markers in the family, n <= 8 (TooLarge).
std::vector<MarkedChain> marked_chains(const SetFamily& family, int k);

// Members where g is the d-th marker counted from the top.
std::vector<MarkedChain> l_of(const std::vector<MarkedChain>& chains, Mask g, int d);

enum class Side { kLower, kUpper };

// Proper subsets (lower) or supersets (upper) of g that are comparable to some
// witness set and lie in the band. Throws PreconditionViolated if a witness
// contains g (lower) or lies inside g (upper). n <= 18.
SetFamily forbidden_down(Mask g, const SetFamily& witnesses, const BandSpec& band);
SetFamily forbidden_up(Mask g, const SetFamily& witnesses, const BandSpec& band);

struct BadnessContext {
  int n = 0;
  int t = 1;                // |T|: witness size bound
  std::vector<Mask> pool;   // candidate witness sets, tried as subsets
};

// A witness family drawn from the pool (restricted to the |T|-band and the side
// precondition, at most t sets) such that every member of l_of(chains, g, d)
// has a marker in the forbidden neighborhood. Smallest witness first, then
// lexicographic in pool order. None when l_of is empty.
std::optional<SetFamily> is_bad(Mask g, int d, const std::vector<MarkedChain>& chains,
                                const BadnessContext& ctx, Side side);

// No marker G at depth d is lower- or upper-bad relative to the chains, given
// that some member of l_of(chains, G, d) shares mc's chain.
bool is_good(const MarkedChain& mc, const std::vector<MarkedChain>& chains,
             const BadnessContext& ctx);

struct ExtensionAudit {
  std::uint64_t good_chains = 0;
  std::uint64_t checks = 0;              // (good chain, marker, witness, side)
  std::uint64_t marker_violations = 0;   // no member with markers avoiding the neighborhood
  std::uint64_t chain_violations = 0;    // no member whose whole chain avoids it
};

// For every good member, every marker G at depth d and every admissible
// witness family from the pool, looks for a member of l_of(chains, G, d) whose
// markers (and, separately, whose whole chain) avoid the forbidden
// neighborhood.
ExtensionAudit audit_good_extensions(const std::vector<MarkedChain>& chains,
                                     const BadnessContext& ctx);

}  // namespace rainbow
