#pragma once

// Families of subsets of [n] and the basic layer/convexity/shadow operations.

#include <cstddef>
#include <span>
#include <vector>

#include "rainbow/mask.hpp"

namespace rainbow {

// A set family over [n]: strictly increasing masks, each below 2^n.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(int ground_size);
  // Sorts and removes duplicates. Throws BadRange on masks outside [n].
  SetFamily(int ground_size, std::vector<Mask> members);

  int ground_size() const { return ground_size_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Mask> members() const { return members_; }
  Mask operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(Mask m) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int ground_size_ = 0;
  std::vector<Mask> members_;
};

// The k-th layer: all k-subsets of [n]. Throws BadRange.
SetFamily layer(int n, int k);

// Layer sizes closest to n/2, taken in the order floor(n/2), floor(n/2)+1,
// floor(n/2)-1, floor(n/2)+2, ... skipping sizes outside [0, n].
std::vector<int> middle_layer_sizes(int n, int h);

// Union of the h middle layers. Throws BadRange unless 1 <= h <= n+1.
SetFamily middle_layers(int n, int h);

SetFamily full_family(int n);

// C([n-1], floor((n-1)/2)) together with the same sets plus element n.
SetFamily katona_tarjan_family(int n);

SetFamily family_union(const SetFamily& a, const SetFamily& b);

// {[n] \ F : F in family}.
SetFamily complement_family(const SetFamily& family);

// F subset G subset F' with F, F' members forces G to be a member. Uses a
// 2^n membership table, so n <= 26.
bool is_convex(const SetFamily& family);

// Members of the family contained in g.
SetFamily down_in_family(const SetFamily& family, Mask g);

// Members H of the family with H subset g and |H| = |g| - j. Throws BadRange
// unless 0 <= j <= |g|.
SetFamily shadow_in_family(const SetFamily& family, Mask g, int j);

}  // namespace rainbow
