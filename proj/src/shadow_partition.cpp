#include "rainbow/shadow_partition.hpp"

#include <algorithm>

#include "rainbow/band.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

constexpr int kLowWindow = 1000;  // F1 looks at j <= 1000k
constexpr int kShadowGap = 22;    // F2 compares against C(|F|, j - 22)

void validate(const SetFamily& family, double epsilon, int k) {
  if (!(epsilon > 0)) throw BadParams("partition_f123: epsilon must be positive");
  if (k < 3) throw BadParams("partition_f123: k must be at least 3");
  const BandSpec band = BandSpec::standard(std::max(family.ground_size(), 1));
  for (Mask m : family) {
    if (!band.contains(m)) {
      throw PreconditionViolated("partition_f123: member " + to_set_string(m) +
                                 " lies outside the standard band");
    }
  }
}

bool low_threshold_met(std::uint64_t count, int set_size, int j, double epsilon, int k) {
  const long double needed = static_cast<long double>(epsilon) /
                             (10000.0L * k) * static_cast<long double>(binomial(set_size, j));
  return static_cast<long double>(count) >= needed;
}

std::vector<std::uint64_t> shadow_counts(const SetFamily& family, Mask g) {
  const int size = popcount(g);
  std::vector<std::uint64_t> counts(size + 1, 0);
  for (Mask m : family) {
    if (is_subset(m, g)) ++counts[size - popcount(m)];
  }
  return counts;
}

ShadowPartition assemble(const SetFamily& family, const std::vector<MemberClassification>& cls,
                         double epsilon, int k) {
  std::vector<Mask> f1, f2, f3;
  ShadowPartition out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Mask m = family[i];
    switch (cls[i].cls) {
      case ShadowClass::kF1: f1.push_back(m); break;
      case ShadowClass::kF2: f2.push_back(m); break;
      case ShadowClass::kF3: f3.push_back(m); break;
    }
    if (cls[i].j) out.j_of[m] = *cls[i].j;
  }
  const int n = family.ground_size();
  out.f1 = SetFamily(n, std::move(f1));
  out.f2 = SetFamily(n, std::move(f2));
  out.f3 = SetFamily(n, std::move(f3));
  out.epsilon = epsilon;
  out.k = k;
  return out;
}

}  // namespace

MemberClassification classify_by_shadows(int set_size, std::span<const std::uint64_t> counts,
                                         double epsilon, int k) {
  const int limit = static_cast<int>(counts.size()) - 1;
  for (int j = 1; j <= std::min(kLowWindow * k, limit); ++j) {
    if (low_threshold_met(counts[j], set_size, j, epsilon, k)) return {ShadowClass::kF1, j};
  }
  for (int j = kLowWindow * k + 1; j <= limit; ++j) {
    if (counts[j] >= binomial(set_size, j - kShadowGap)) return {ShadowClass::kF2, j};
  }
  return {ShadowClass::kF3, std::nullopt};
}

MemberClassification classify_member(int n, Mask g, const std::function<bool(Mask)>& member,
                                     double epsilon, int k) {
  const int size = popcount(g);
  const std::vector<int> elems = elements_of(g);
  auto count_shadow = [&](int j) {
    // Remove every j-subset of g's elements.
    std::uint64_t count = 0;
    for (Mask pick : subsets_of_size(size, j)) {
      Mask removed = 0;
      for (Mask p = pick; p != 0; p &= p - 1) removed |= bit_of(elems[std::countr_zero(p)]);
      if (member(g & ~removed)) ++count;
    }
    return count;
  };
  (void)n;
  for (int j = 1; j <= std::min(kLowWindow * k, size); ++j) {
    if (low_threshold_met(count_shadow(j), size, j, epsilon, k)) return {ShadowClass::kF1, j};
  }
  for (int j = kLowWindow * k + 1; j <= size; ++j) {
    if (count_shadow(j) >= binomial(size, j - kShadowGap)) return {ShadowClass::kF2, j};
  }
  return {ShadowClass::kF3, std::nullopt};
}

ShadowPartition partition_f123_serial(const SetFamily& family, double epsilon, int k) {
  validate(family, epsilon, k);
  std::vector<MemberClassification> cls(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto counts = shadow_counts(family, family[i]);
    cls[i] = classify_by_shadows(popcount(family[i]), counts, epsilon, k);
  }
  return assemble(family, cls, epsilon, k);
}

ShadowPartition partition_f123(const SetFamily& family, double epsilon, int k) {
  validate(family, epsilon, k);
  std::vector<MemberClassification> cls(family.size());
  const auto count = static_cast<std::int64_t>(family.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    auto counts = shadow_counts(family, family[i]);
    cls[i] = classify_by_shadows(popcount(family[i]), counts, epsilon, k);
  }
  return assemble(family, cls, epsilon, k);
}

std::vector<SliceSizes> slice_sizes(const ShadowPartition& partition, ShadowClass cls) {
  const SetFamily& part = cls == ShadowClass::kF1 ? partition.f1 : partition.f2;
  std::map<int, std::size_t> sizes;
  for (Mask m : part) ++sizes[partition.j_of.at(m)];
  std::vector<SliceSizes> out;
  for (auto [j, c] : sizes) out.push_back({j, c});
  return out;
}

SetFamily slice(const ShadowPartition& partition, ShadowClass cls, int j) {
  const SetFamily& part = cls == ShadowClass::kF1 ? partition.f1 : partition.f2;
  std::vector<Mask> members;
  for (Mask m : part) {
    if (partition.j_of.at(m) == j) members.push_back(m);
  }
  return SetFamily(part.ground_size(), std::move(members));
}

}  // namespace rainbow
