#include "rainbow/band.hpp"

#include <cmath>

#include "rainbow/errors.hpp"

namespace rainbow {

BandSpec::BandSpec(int n, double half_width, int poset_size)
    : n_(n), half_width_(half_width), poset_size_(poset_size) {
  if (n < 1) throw BadRange("band: n must be positive");
  if (!(half_width >= 0)) throw BadRange("band: half width must be non-negative");
  squared_bound_ = static_cast<std::uint64_t>(std::ceil(4.0L * half_width * half_width));
}

BandSpec BandSpec::standard(int n) {
  return BandSpec(n, 2.0 * std::sqrt(n * std::log(static_cast<double>(n))), 0);
}

BandSpec BandSpec::for_poset(int n, int poset_size) {
  if (poset_size < 1) throw BadRange("band: poset size must be positive");
  return BandSpec(n, 4.0 * poset_size * std::sqrt(n * std::log(static_cast<double>(n))),
                  poset_size);
}

BandSpec BandSpec::with_half_width(int n, double half_width) {
  return BandSpec(n, half_width, 0);
}

bool BandSpec::contains_size(std::int64_t size) const {
  if (size < 0 || size > n_) return false;
  const std::int64_t d = 2 * size - n_;
  return static_cast<std::uint64_t>(d * d) <= squared_bound_;
}

std::int64_t BandSpec::max_size() const {
  std::int64_t s = n_;
  while (s >= 0 && !contains_size(s)) --s;
  return s;
}

std::int64_t BandSpec::min_size() const {
  std::int64_t s = 0;
  while (s <= n_ && !contains_size(s)) ++s;
  return s;
}

}  // namespace rainbow
