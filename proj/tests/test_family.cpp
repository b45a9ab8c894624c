#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>

#include "oracles.hpp"
#include "rainbow/band.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/family.hpp"
#include "rainbow/lubell.hpp"
#include "rainbow/mask.hpp"

using namespace rainbow;
using oracle::set;

TEST_CASE("binomials agree with Pascal's triangle") {
  for (int n = 0; n <= 62; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::pascal(n, k));
  }
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("subsets of a given size") {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto s = subsets_of_size(n, k);
      CHECK(s.size() == oracle::pascal(n, k));
      CHECK(std::is_sorted(s.begin(), s.end()));
      for (Mask m : s) CHECK(oracle::bits(m) == k);
    }
  }
  const auto order = layer_major_order(4);
  CHECK(order.size() == 16);
  CHECK(order.front() == 0);
  CHECK(order.back() == 15);
}

TEST_CASE("set rendering") {
  CHECK(to_set_string(set({1, 3, 4})) == "{1,3,4}");
  CHECK(to_set_string(0) == "{}");
  CHECK(to_hex(0x1d) == "0x1d");
  CHECK(elements_of(set({2, 5})) == std::vector<int>{2, 5});
}

TEST_CASE("layers and middle layers") {
  CHECK(layer(4, 2).size() == 6);
  CHECK(middle_layers(4, 1) == layer(4, 2));
  const SetFamily m = middle_layers(5, 2);
  CHECK(m.size() == 20);
  CHECK(m == family_union(layer(5, 2), layer(5, 3)));
  CHECK(middle_layer_sizes(6, 4) == std::vector<int>{3, 4, 2, 5});
  CHECK(middle_layers(3, 4) == full_family(3));
  CHECK_THROWS_AS(layer(3, 4), BadRange);
  CHECK_THROWS_AS(middle_layers(3, 5), BadRange);
  CHECK_THROWS_AS(middle_layers(3, 0), BadRange);
}

TEST_CASE("family construction rejects masks outside the ground set") {
  CHECK_THROWS_AS(SetFamily(3, {8}), BadRange);
  const SetFamily f(3, {5, 1, 5});
  CHECK(f.size() == 2);
  CHECK(f[0] == 1);
}

TEST_CASE("convexity examples") {
  CHECK(is_convex(middle_layers(5, 2)));
  CHECK_FALSE(is_convex(SetFamily(2, {0, 3})));
  CHECK(is_convex(katona_tarjan_family(5)));
  CHECK(katona_tarjan_family(5).size() == 2 * binomial(4, 2));
  CHECK(is_convex(SetFamily(3)));
}

TEST_CASE("convexity agrees with the definition on random families") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 3;
    const SetFamily f = oracle::random_family(n, 0.1 + 0.8 * (t % 7) / 7.0, rng);
    CHECK(is_convex(f) == oracle::convex(f));
  }
}

TEST_CASE("middle layers are convex") {
  for (int n = 1; n <= 8; ++n) {
    for (int h = 1; h <= n + 1; ++h) CHECK(is_convex(middle_layers(n, h)));
  }
}

TEST_CASE("shadows inside a family") {
  const Mask g = set({1, 2, 3});
  CHECK(shadow_in_family(full_family(4), full_mask(4), 1).size() == 4);
  CHECK(shadow_in_family(full_family(4), g, 0) == SetFamily(4, {g}));
  CHECK(shadow_in_family(layer(4, 1), g, 0).empty());
  const Mask four = set({1, 2, 4, 6});
  const SetFamily s = shadow_in_family(middle_layers(6, 2), four, 1);
  CHECK(s == SetFamily(6, {set({1, 2, 4}), set({1, 2, 6}), set({1, 4, 6}), set({2, 4, 6})}));
  CHECK_THROWS_AS(shadow_in_family(full_family(3), g, 4), BadRange);
  CHECK(down_in_family(full_family(3), set({1, 2})).size() == 4);
}

TEST_CASE("complement family") {
  const SetFamily f(3, {0, set({1}), set({1, 2})});
  CHECK(complement_family(f) == SetFamily(3, {7, set({2, 3}), set({3})}));
  CHECK(complement_family(complement_family(f)) == f);
}

TEST_CASE("band membership") {
  const BandSpec b100 = BandSpec::standard(100);
  CHECK(b100.half_width() == doctest::Approx(42.92).epsilon(0.001));
  CHECK(b100.contains_size(80));
  CHECK(b100.contains_size(50));
  const BandSpec b4 = BandSpec::standard(10000);
  CHECK(b4.half_width() == doctest::Approx(606.9).epsilon(0.001));
  // 5500 is 500 away from n/2, inside the half width of about 607.
  CHECK(b4.contains_size(5500));
  CHECK_FALSE(b4.contains_size(5700));
  CHECK(b4.contains_size(5606));
  CHECK_FALSE(b4.contains_size(5607));
  CHECK(b4.max_size() == 5606);
  CHECK(b4.min_size() == 10000 - 5606);
  for (int n : {3, 10, 101, 4000}) {
    const BandSpec b = BandSpec::standard(n);
    CHECK(b.contains_size(n / 2));
    for (int t = 1; t <= 4; ++t) {
      const BandSpec bt = BandSpec::for_poset(n, t);
      for (int s = 0; s <= n; ++s) {
        if (b.contains_size(s)) CHECK(bt.contains_size(s));
      }
    }
  }
  CHECK_THROWS_AS(BandSpec::for_poset(10, 0), BadRange);
}

TEST_CASE("band boundary uses the rounded-up squared bound") {
  // half width 2.5 gives the bound ceil(25) = 25, so |2s - n| <= 5.
  const BandSpec b = BandSpec::with_half_width(10, 2.5);
  CHECK(b.squared_bound() == 25);
  CHECK(b.contains_size(0) == false);
  CHECK(b.contains_size(3));
  CHECK_FALSE(b.contains_size(2));
  CHECK(b.contains_size(7));
  CHECK_FALSE(b.contains_size(8));
}

TEST_CASE("Lubell mass examples") {
  for (int n = 1; n <= 8; ++n) CHECK(lubell_mass(full_family(n)) == Rational(n + 1));
  CHECK(lubell_mass(layer(7, 3)) == Rational(1));
  CHECK(lubell_mass(SetFamily(3, {0, set({1}), 7})) == Rational(7, 3));
  const SetFamily chain(2, {0, set({1}), 3});
  CHECK(lambda_below(chain, 3) == Rational(5, 2));
  CHECK(lambda_below(SetFamily(4, {set({1}), set({1, 2})}), set({1})) == Rational(1));
}

TEST_CASE("size bound and max-partition identity on random families") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int n : {3, 5, 7, 9}) {
    for (int t = 0; t < 40; ++t) {
      const SetFamily f = oracle::random_family(n, 0.05 + 0.9 * (t % 10) / 10.0, rng);
      const Rational mass = lubell_mass(f);
      CHECK(Rational(BigInt(f.size())) <= mass * Rational(BigInt(binomial(n, n / 2))));
      CHECK(lubell_by_max_partition(f) == mass);
      // Weighted average: the mass lies between the extreme class values.
      const auto classes = max_partition(f);
      std::optional<Rational> lo, hi;
      std::uint64_t chains = 0;
      for (const auto& c : classes) {
        chains += c.chain_count;
        if (c.chain_count == 0) continue;
        const Rational v = lambda_below(f, c.top);
        if (!lo || v < *lo) lo = v;
        if (!hi || v > *hi) hi = v;
      }
      if (lo) {
        // Chains missing the family contribute zero.
        CHECK(mass <= *hi);
      }
      // Each maximal chain through the family is counted once.
      std::uint64_t factorial = 1;
      for (int i = 2; i <= n; ++i) factorial *= i;
      CHECK(chains <= factorial);
      if (f.contains(full_mask(n))) CHECK(chains == factorial);
      ++checked;
    }
  }
  CHECK(checked == 160);
}

TEST_CASE("antichains have Lubell mass at most one") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const int n = 4 + t % 4;
    std::vector<Mask> order(std::size_t{1} << n);
    std::iota(order.begin(), order.end(), Mask{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Mask> anti;
    for (Mask m : order) {
      bool ok = true;
      for (Mask a : anti) ok &= !oracle::sub(a, m) && !oracle::sub(m, a);
      if (ok) anti.push_back(m);
    }
    CHECK(lubell_mass(SetFamily(n, anti)) <= Rational(1));
  }
}
