#pragma once

// Splits a family by the density of its downward shadows:
//
//   F1: some 1 <= j <= 1000k has |S_j(F)| >= eps / (10000k) * C(|F|, j)
//   F2: not in F1, some j >= 1000k + 1 has |S_j(F)| >= C(|F|, j - 22)
//   F3: the rest
//
// where S_j(F) = {G in family : G subset F, |G| = |F| - j}.

#include <functional>
#include <map>
#include <optional>

#include "rainbow/family.hpp"
#include "rainbow/lubell.hpp"

namespace rainbow {

struct ShadowPartition {
  SetFamily f1;
  SetFamily f2;
  SetFamily f3;
  double epsilon = 0;
  int k = 0;
  // Smallest qualifying j for members of f1 and f2.
  std::map<Mask, int> j_of;
};

enum class ShadowClass { kF1, kF2, kF3 };

struct MemberClassification {
  ShadowClass cls;
  std::optional<int> j;
};

// Classifies one set from its shadow counts: shadow_counts[j] = |S_j(g)|.
MemberClassification classify_by_shadows(int set_size, std::span<const std::uint64_t> shadow_counts,
                                         double epsilon, int k);

// Classifies g against a family given only by a membership predicate. Shadow
// counts are produced lazily by enumerating j-subsets, stopping at the first
// qualifying j, so only cheap instances are practical.
MemberClassification classify_member(int n, Mask g, const std::function<bool(Mask)>& member,
                                     double epsilon, int k);

// Parallel over members. Requires epsilon > 0, k >= 3 and every member inside
// the standard band.
ShadowPartition partition_f123(const SetFamily& family, double epsilon, int k);

// Serial reference for partition_f123.
ShadowPartition partition_f123_serial(const SetFamily& family, double epsilon, int k);

struct SliceSizes {
  int j;
  std::size_t count;
};

// Sizes of the slices {F in f1 : j(F) = j} (resp. f2), ordered by j.
std::vector<SliceSizes> slice_sizes(const ShadowPartition& partition, ShadowClass cls);

// The slice {F in part : j(F) = j}.
SetFamily slice(const ShadowPartition& partition, ShadowClass cls, int j);

}  // namespace rainbow
