#pragma once

// Subsets of the ground set [n] = {1, ..., n} stored as n-bit masks. Element i
// of [n] is bit i-1.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace rainbow {

using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

constexpr Mask bit_of(int element) { return Mask{1} << (element - 1); }

constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr bool is_proper_subset(Mask a, Mask b) {
  return a != b && is_subset(a, b);
}

constexpr bool comparable(Mask a, Mask b) {
  return is_subset(a, b) || is_subset(b, a);
}

// Lowest element of a nonempty mask, 1-based.
constexpr int lowest_element(Mask m) { return std::countr_zero(m) + 1; }

// Exact binomial coefficient; n <= 66 keeps every value in 64 bits.
std::uint64_t binomial(int n, int k);

// Elements of the mask in increasing order, 1-based.
std::vector<int> elements_of(Mask m);

// "{1,3,4}" style rendering.
std::string to_set_string(Mask m);

// "0x1d" style rendering.
std::string to_hex(Mask m);

// Next mask with the same popcount (Gosper). Caller guarantees the result
// still fits.
constexpr Mask next_same_popcount(Mask m) {
  const Mask c = m & (~m + 1);
  const Mask r = m + c;
  return (((r ^ m) >> 2) / c) | r;
}

// All k-subsets of [n] in increasing numeric order.
std::vector<Mask> subsets_of_size(int n, int k);

// Masks of [n] in layer-major order: by size, then numerically.
std::vector<Mask> layer_major_order(int n);

}  // namespace rainbow
