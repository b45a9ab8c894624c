#include "rainbow/lubell.hpp"

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

Rational lubell_mass(const SetFamily& family) {
  const int n = family.ground_size();
  Rational total = 0;
  for (Mask m : family) total += Rational(1, BigInt(binomial(n, popcount(m))));
  return total;
}

Rational lambda_below(const SetFamily& family, Mask g) {
  const int size = popcount(g);
  Rational total = 0;
  for (Mask m : family) {
    if (is_subset(m, g)) total += Rational(1, BigInt(binomial(size, popcount(m))));
  }
  return total;
}

std::vector<MaxPartitionClass> max_partition(const SetFamily& family) {
  const int n = family.ground_size();
  if (n > 20) throw TooLarge("max_partition: n must be at most 20");
  const Mask full = full_mask(n);
  std::vector<MaxPartitionClass> out;
  out.reserve(family.size());
  for (Mask top : family) {
    // Saturated chains from `top` up to [n] that avoid every other member:
    // DP over the subsets of the complement, indexed by the added elements.
    const Mask free = full & ~top;
    const int k = popcount(free);
    const std::vector<int> free_elements = elements_of(free);
    std::vector<std::uint64_t> paths(std::size_t{1} << k, 0);
    paths[0] = 1;
    for (std::size_t s = 1; s < paths.size(); ++s) {
      Mask set = top;
      for (int b = 0; b < k; ++b) {
        if (s >> b & 1) set |= bit_of(free_elements[b]);
      }
      if (family.contains(set)) continue;
      std::uint64_t sum = 0;
      for (int b = 0; b < k; ++b) {
        if (s >> b & 1) sum += paths[s & ~(std::size_t{1} << b)];
      }
      paths[s] = sum;
    }
    out.push_back({top, factorial(popcount(top)) * paths.back()});
  }
  return out;
}

Rational lubell_by_max_partition(const SetFamily& family) {
  const BigInt chains = factorial(family.ground_size());
  Rational total = 0;
  for (const auto& cls : max_partition(family)) {
    if (cls.chain_count == 0) continue;
    total += Rational(BigInt(cls.chain_count), chains) * lambda_below(family, cls.top);
  }
  return total;
}

}  // namespace rainbow
