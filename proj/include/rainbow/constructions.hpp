#pragma once

// Explicit colorings of 2^[n] that avoid rainbow copies, and the counting
// extraction behind the upper bound for wedge-plus-antichain posets.

#include <optional>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/copy_detect.hpp"
#include "rainbow/family.hpp"

namespace rainbow {

// [a, b] when a <= b, otherwise [a, n] together with [1, b].
struct WrapInterval {
  int a = 1;
  int b = 1;
  Mask mask(int n) const;
};

// Members of a convex family get their own colors, everything else shares one
// more. Throws NotConvex. When the family is all of 2^[n] there is nothing
// left for the shared color and the count is |F|.
Coloring lowertriv_coloring(const SetFamily& family);

// Layers floor(n/2) and floor(n/2)+1 get distinct colors, the rest one color.
// Throws BadParams unless n >= 2.
Coloring butterfly_coloring(int n);

// The chains C_1, ..., C_{s-1} of n - 1 sets each. Throws BadParams unless
// s >= 2 and n >= s + 2.
std::vector<std::vector<Mask>> broom_chains(int n, int s);
// Distinct colors on {0, [n]} and the broom chains; the rest takes the color
// of [n]. (s - 1)(n - 1) + 2 colors.
Coloring broom_chain_coloring(int n, int s);

// k - 2 maximal chains, chain t adding elements in the cyclic order t, t+1,
// ...; only their interiors (sizes 1..n-1) are returned.
std::vector<std::vector<Mask>> disjoint_chain_interiors(int n, int k);
// Distinct colors on 0, [n] and the chain interiors, one shared color
// elsewhere: 3 + (k - 2)(n - 1) colors. Throws BadParams unless k >= 2 and
// n >= 2k.
Coloring antichain_chain_coloring(int n, int k);

struct UnionExtraction {
  SetFamily spread;   // s + 1 sets whose union misses some element
  SetFamily outside;  // k + 1 sets, none inside that union
};

// For a family on one layer j <= n - 2 with more than s*n/2 + k + 1 members.
// Returns nothing when the size hypothesis fails. Throws BadParams when the
// family is not on a single layer or j > n - 2.
std::optional<UnionExtraction> union_extraction(const SetFamily& family, int s, int k);
// Direct check of the extraction's defining properties.
bool is_valid_extraction(const SetFamily& family, const UnionExtraction& e, int s, int k);

struct CertifyReport {
  int color_count = 0;
  std::optional<CopyEmbedding> rainbow;
};

CertifyReport certify(const Coloring& coloring, const Poset& poset, CopyMode mode);

// Largest k such that the coloring has a rainbow strong antichain of size k.
int max_rainbow_antichain(const Coloring& coloring);

}  // namespace rainbow
