#include "rainbow/family.hpp"

#include <algorithm>

#include "rainbow/errors.hpp"

namespace rainbow {

SetFamily::SetFamily(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 0 || ground_size > kMaxGround) {
    throw BadRange("ground size must be in [0, 64]");
  }
}

SetFamily::SetFamily(int ground_size, std::vector<Mask> members)
    : SetFamily(ground_size) {
  const Mask full = full_mask(ground_size);
  for (Mask m : members) {
    if (!is_subset(m, full)) {
      throw BadRange("mask " + to_hex(m) + " is not a subset of [" +
                     std::to_string(ground_size) + "]");
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

bool SetFamily::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

SetFamily layer(int n, int k) {
  if (n < 0 || n > 63 || k < 0 || k > n) throw BadRange("layer: need 0 <= k <= n <= 63");
  return SetFamily(n, subsets_of_size(n, k));
}

std::vector<int> middle_layer_sizes(int n, int h) {
  if (n < 0 || h < 1 || h > n + 1) throw BadRange("middle_layers: need 1 <= h <= n+1");
  std::vector<int> sizes;
  const int mid = n / 2;
  for (int step = 0; static_cast<int>(sizes.size()) < h; ++step) {
    // step 0 -> mid, 1 -> mid+1, 2 -> mid-1, 3 -> mid+2, ...
    const int size = step % 2 == 0 ? mid - step / 2 : mid + (step + 1) / 2;
    if (size >= 0 && size <= n) sizes.push_back(size);
  }
  return sizes;
}

SetFamily middle_layers(int n, int h) {
  std::vector<Mask> members;
  for (int k : middle_layer_sizes(n, h)) {
    auto l = subsets_of_size(n, k);
    members.insert(members.end(), l.begin(), l.end());
  }
  return SetFamily(n, std::move(members));
}

SetFamily full_family(int n) {
  if (n < 0 || n > 30) throw BadRange("full_family: n must be in [0, 30]");
  std::vector<Mask> members(std::size_t{1} << n);
  for (std::size_t m = 0; m < members.size(); ++m) members[m] = m;
  return SetFamily(n, std::move(members));
}

SetFamily katona_tarjan_family(int n) {
  if (n < 1) throw BadRange("katona_tarjan_family: n >= 1");
  auto base = subsets_of_size(n - 1, (n - 1) / 2);
  std::vector<Mask> members = base;
  for (Mask m : base) members.push_back(m | bit_of(n));
  return SetFamily(n, std::move(members));
}

SetFamily family_union(const SetFamily& a, const SetFamily& b) {
  if (a.ground_size() != b.ground_size()) throw BadRange("family_union: ground sizes differ");
  std::vector<Mask> members(a.begin(), a.end());
  members.insert(members.end(), b.begin(), b.end());
  return SetFamily(a.ground_size(), std::move(members));
}

SetFamily complement_family(const SetFamily& family) {
  const Mask full = full_mask(family.ground_size());
  std::vector<Mask> members;
  members.reserve(family.size());
  for (Mask m : family) members.push_back(full & ~m);
  return SetFamily(family.ground_size(), std::move(members));
}

bool is_convex(const SetFamily& family) {
  const int n = family.ground_size();
  if (n > 26) throw TooLarge("is_convex: n must be at most 26");
  const std::size_t total = std::size_t{1} << n;
  std::vector<unsigned char> in(total, 0), up(total, 0), down(total, 0);
  for (Mask m : family) in[m] = 1;
  // up[m]: some member is a subset of m; down[m]: some member is a superset.
  for (std::size_t m = 0; m < total; ++m) {
    up[m] = in[m];
    for (Mask rest = m; rest != 0 && !up[m]; rest &= rest - 1) {
      up[m] = up[m & ~(rest & (~rest + 1))];
    }
  }
  for (std::size_t i = total; i-- > 0;) {
    down[i] = in[i];
    for (Mask missing = ~static_cast<Mask>(i) & full_mask(n); missing != 0 && !down[i];
         missing &= missing - 1) {
      down[i] = down[i | (missing & (~missing + 1))];
    }
  }
  for (std::size_t m = 0; m < total; ++m) {
    if (up[m] && down[m] && !in[m]) return false;
  }
  return true;
}

SetFamily down_in_family(const SetFamily& family, Mask g) {
  std::vector<Mask> members;
  for (Mask m : family) {
    if (is_subset(m, g)) members.push_back(m);
  }
  return SetFamily(family.ground_size(), std::move(members));
}

SetFamily shadow_in_family(const SetFamily& family, Mask g, int j) {
  const int size = popcount(g);
  if (j < 0 || j > size) throw BadRange("shadow_in_family: need 0 <= j <= |G|");
  std::vector<Mask> members;
  for (Mask m : family) {
    if (is_subset(m, g) && popcount(m) == size - j) members.push_back(m);
  }
  return SetFamily(family.ground_size(), std::move(members));
}

}  // namespace rainbow
