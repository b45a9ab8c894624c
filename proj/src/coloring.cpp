#include "rainbow/coloring.hpp"

#include <string>
#include <unordered_map>

#include "rainbow/errors.hpp"

namespace rainbow {

Coloring::Coloring(int n, std::vector<ColorId> color_of) : n_(n), color_of_(std::move(color_of)) {
  if (n < 0 || n > kMaxGround) throw BadParams("coloring: n out of range");
  if (color_of_.size() != (std::size_t{1} << n)) {
    throw BadParams("coloring: expected " + std::to_string(std::size_t{1} << n) + " entries");
  }
  ColorId top = -1;
  for (ColorId c : color_of_) {
    if (c < 0) throw BadParams("coloring: negative color id");
    top = std::max(top, c);
  }
  std::vector<bool> used(top + 1, false);
  for (ColorId c : color_of_) used[c] = true;
  for (ColorId c = 0; c <= top; ++c) {
    if (!used[c]) throw BadParams("coloring: color " + std::to_string(c) + " is unused");
  }
  color_count_ = top + 1;
}

Coloring Coloring::normalized(int n, std::span<const ColorId> raw) {
  std::unordered_map<ColorId, ColorId> ids;
  std::vector<ColorId> out(raw.size());
  for (std::size_t m = 0; m < raw.size(); ++m) {
    auto [it, fresh] = ids.try_emplace(raw[m], static_cast<ColorId>(ids.size()));
    out[m] = it->second;
  }
  return Coloring(n, std::move(out));
}

Coloring Coloring::monochromatic(int n) {
  return Coloring(n, std::vector<ColorId>(std::size_t{1} << n, 0));
}

Coloring Coloring::all_distinct(int n) {
  std::vector<ColorId> out(std::size_t{1} << n);
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = static_cast<ColorId>(m);
  return Coloring(n, std::move(out));
}

std::vector<Mask> Coloring::color_class(ColorId c) const {
  std::vector<Mask> out;
  for (std::size_t m = 0; m < color_of_.size(); ++m) {
    if (color_of_[m] == c) out.push_back(m);
  }
  return out;
}

Coloring Coloring::complemented() const {
  const Mask full = full_mask(n_);
  std::vector<ColorId> out(color_of_.size());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = color_of_[full & ~Mask(m)];
  return normalized(n_, out);
}

}  // namespace rainbow
