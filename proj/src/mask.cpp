#include "rainbow/mask.hpp"

#include <algorithm>
#include <numeric>
#include <cstdio>

#include "rainbow/errors.hpp"

namespace rainbow {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n > 66) throw BadRange("binomial: n > 66 overflows 64 bits");
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is always integral; split the product with a
    // gcd to stay within 64 bits.
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    std::uint64_t den = static_cast<std::uint64_t>(i);
    std::uint64_t g = std::gcd(result, den);
    result /= g;
    den /= g;
    num /= den;
    result *= num;
  }
  return result;
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(lowest_element(m));
    m &= m - 1;
  }
  return out;
}

std::string to_set_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  s += '}';
  return s;
}

std::string to_hex(Mask m) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "0x%llx", static_cast<unsigned long long>(m));
  return buf;
}

std::vector<Mask> subsets_of_size(int n, int k) {
  if (n < 0 || n > 63 || k < 0 || k > n) {
    throw BadRange("subsets_of_size: need 0 <= k <= n <= 63");
  }
  std::vector<Mask> out;
  out.reserve(binomial(n, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  const Mask limit = Mask{1} << n;
  for (Mask m = (Mask{1} << k) - 1; m < limit; m = next_same_popcount(m)) {
    out.push_back(m);
  }
  return out;
}

std::vector<Mask> layer_major_order(int n) {
  std::vector<Mask> out;
  for (int k = 0; k <= n; ++k) {
    auto layer = subsets_of_size(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace rainbow
