#pragma once

// Bands of sets with size near n/2: |F| within half_width of n/2.
//
// Membership is decided on integers: (2|F| - n)^2 <= ceil(4 * half_width^2).
// The squared bound is computed once in floating point and rounded up, so two
// calls never disagree at the boundary.

#include <cstdint>

#include "rainbow/mask.hpp"

namespace rainbow {

class BandSpec {
 public:
  // half_width = 2 sqrt(n ln n).
  static BandSpec standard(int n);
  // half_width = 4 |T| sqrt(n ln n).
  static BandSpec for_poset(int n, int poset_size);
  static BandSpec with_half_width(int n, double half_width);

  int n() const { return n_; }
  double half_width() const { return half_width_; }
  int poset_size() const { return poset_size_; }
  // ceil(4 * half_width^2), the bound on (2|F| - n)^2.
  std::uint64_t squared_bound() const { return squared_bound_; }

  bool contains_size(std::int64_t size) const;
  bool contains(Mask m) const { return contains_size(popcount(m)); }

  // Largest set size inside the band.
  std::int64_t max_size() const;
  std::int64_t min_size() const;

 private:
  BandSpec(int n, double half_width, int poset_size);

  int n_;
  double half_width_;
  int poset_size_;
  std::uint64_t squared_bound_;
};

inline bool in_band(Mask m, const BandSpec& band) { return band.contains(m); }

}  // namespace rainbow
