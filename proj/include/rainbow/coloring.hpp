#pragma once

// A coloring of all 2^n subsets of [n]. Color ids are dense: every id in
// [0, color_count) is used by at least one mask.

#include <cstdint>
#include <span>
#include <vector>

#include "rainbow/family.hpp"
#include "rainbow/mask.hpp"

namespace rainbow {

using ColorId = std::int32_t;

class Coloring {
 public:
  static constexpr int kMaxGround = 24;

  Coloring() = default;
  // color_of[m] for every mask m < 2^n. Ids must already be dense. Throws
  // BadParams otherwise.
  Coloring(int n, std::vector<ColorId> color_of);
  // Arbitrary ids, renumbered by first occurrence in mask order.
  static Coloring normalized(int n, std::span<const ColorId> raw);
  static Coloring monochromatic(int n);
  static Coloring all_distinct(int n);

  int ground_size() const { return n_; }
  int color_count() const { return color_count_; }
  ColorId operator()(Mask m) const { return color_of_[m]; }
  std::span<const ColorId> colors() const { return color_of_; }
  // Masks with the given color, increasing.
  std::vector<Mask> color_class(ColorId c) const;
  // Complement every mask: the new coloring gives [n] \ m the color of m.
  Coloring complemented() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int n_ = 0;
  int color_count_ = 0;
  std::vector<ColorId> color_of_;
};

}  // namespace rainbow
