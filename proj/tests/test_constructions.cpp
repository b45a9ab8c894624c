#include <doctest.h>

#include "oracles.hpp"
#include "rainbow/catalog.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"

using namespace rainbow;
using oracle::set;

TEST_CASE("wrap-around intervals") {
  CHECK(WrapInterval{2, 4}.mask(5) == set({2, 3, 4}));
  CHECK(WrapInterval{4, 2}.mask(5) == set({4, 5, 1, 2}));
  CHECK(WrapInterval{3, 3}.mask(5) == set({3}));
}

TEST_CASE("colorings built from convex families") {
  CHECK(lowertriv_coloring(middle_layers(4, 1)).color_count() == 7);
  CHECK(lowertriv_coloring(SetFamily(3)).color_count() == 1);
  const Coloring kt = lowertriv_coloring(katona_tarjan_family(5));
  CHECK(kt.color_count() == 13);
  CHECK_FALSE(find_rainbow_copy(catalog("diamond"), kt, CopyMode::kWeak));
  CHECK(lowertriv_coloring(full_family(3)).color_count() == 8);
  CHECK_THROWS_AS(lowertriv_coloring(SetFamily(2, {0, 3})), NotConvex);
}

TEST_CASE("butterfly coloring") {
  CHECK(butterfly_coloring(4).color_count() == 11);
  CHECK(butterfly_coloring(2).color_count() == 4);
  for (int n = 2; n <= 5; ++n) {
    const Coloring c = butterfly_coloring(n);
    CHECK(c.color_count() == static_cast<int>(binomial(n, n / 2) + binomial(n, n / 2 + 1)) + 1);
    CHECK_FALSE(find_rainbow_copy(catalog("butterfly"), c, CopyMode::kStrong));
  }
  CHECK_FALSE(oracle_find_rainbow_copy(catalog("butterfly"), butterfly_coloring(2), CopyMode::kStrong));
  CHECK_FALSE(oracle_find_rainbow_copy(catalog("butterfly"), butterfly_coloring(4), CopyMode::kStrong));
  CHECK_THROWS_AS(butterfly_coloring(1), BadParams);
}

TEST_CASE("butterfly coloring: unrelated differently colored sets meet in at most n/2 elements") {
  for (int n = 6; n <= 12; ++n) {
    const Coloring c = butterfly_coloring(n);
    const Mask top = Mask{1} << n;
    const ColorId white = c(0);
    int worst = 0;
    for (Mask a = 0; a < top; ++a) {
      if (c(a) == white) continue;
      for (Mask b = a + 1; b < top; ++b) {
        if (c(b) == white || oracle::sub(a, b) || oracle::sub(b, a)) continue;
        worst = std::max(worst, oracle::bits(a & b));
      }
    }
    CHECK(worst <= n / 2);
  }
}

TEST_CASE("broom chains") {
  for (int s = 2; s <= 4; ++s) {
    for (int n = s + 2; n <= 9; ++n) {
      const auto chains = broom_chains(n, s);
      REQUIRE(static_cast<int>(chains.size()) == s - 1);
      std::vector<Mask> all;
      for (const auto& c : chains) {
        CHECK(static_cast<int>(c.size()) == n - 1);
        for (std::size_t i = 1; i < c.size(); ++i) CHECK(is_proper_subset(c[i - 1], c[i]));
        all.insert(all.end(), c.begin(), c.end());
      }
      std::sort(all.begin(), all.end());
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
      // No set of chain i contains a set of chain i - 1.
      for (std::size_t i = 1; i < chains.size(); ++i) {
        for (Mask big : chains[i]) {
          for (Mask small : chains[i - 1]) CHECK_FALSE(oracle::sub(small, big));
        }
      }
      CHECK(broom_chain_coloring(n, s).color_count() == (s - 1) * (n - 1) + 2);
    }
  }
  CHECK_THROWS_AS(broom_chains(4, 3), BadParams);
  CHECK_THROWS_AS(broom_chains(5, 1), BadParams);
  const auto c1 = broom_chains(6, 3).front();
  CHECK(c1.front() == set({1}));
  CHECK(c1[1] == set({1, 3}));
  CHECK(c1.back() == set({1, 3, 4, 5, 6}));
}

TEST_CASE("broom coloring certifications") {
  const Coloring c = broom_chain_coloring(6, 3);
  CHECK(c.color_count() == 12);
  CHECK_FALSE(certify(c, catalog("broom:3"), CopyMode::kStrong).rainbow);
  CHECK_FALSE(certify(c.complemented(), catalog("fork:3"), CopyMode::kStrong).rainbow);
  // With s = 2 a chain set, the set below it missing its first element and the
  // singleton of that element form a rainbow wedge.
  const CertifyReport small = certify(broom_chain_coloring(5, 2), catalog("broom:2"), CopyMode::kStrong);
  CHECK(small.color_count == 6);
  REQUIRE(small.rainbow);
  CHECK(is_valid_embedding(*small.rainbow, nullptr));
}

TEST_CASE("antichain colorings") {
  const Coloring c = antichain_chain_coloring(6, 3);
  CHECK(c.color_count() == 8);
  CHECK(max_rainbow_antichain(c) == 2);
  CHECK(antichain_chain_coloring(4, 2).color_count() == 3);
  CHECK(max_rainbow_antichain(antichain_chain_coloring(4, 2)) == 1);
  for (int k = 2; k <= 4; ++k) {
    for (int n = 2 * k; n <= 10; ++n) {
      const auto chains = disjoint_chain_interiors(n, k);
      CHECK(static_cast<int>(chains.size()) == k - 2);
      for (std::size_t a = 0; a < chains.size(); ++a) {
        CHECK(static_cast<int>(chains[a].size()) == n - 1);
        for (std::size_t b = a + 1; b < chains.size(); ++b) {
          for (Mask x : chains[a]) CHECK(std::find(chains[b].begin(), chains[b].end(), x) == chains[b].end());
        }
      }
      CHECK(antichain_chain_coloring(n, k).color_count() == 3 + (k - 2) * (n - 1));
    }
  }
  CHECK_THROWS_AS(antichain_chain_coloring(5, 3), BadParams);
}

TEST_CASE("largest rainbow antichain on small colorings matches the oracle") {
  for (int n = 2; n <= 3; ++n) {
    for (const Coloring& c : {Coloring::all_distinct(n), Coloring::monochromatic(n), butterfly_coloring(n)}) {
      const int got = max_rainbow_antichain(c);
      int want = 0;
      for (int k = 1; k <= 4; ++k) {
        if (oracle_find_rainbow_copy(catalog(CatalogId{CatalogKind::kAntichain, {k}}), c, CopyMode::kStrong)) {
          want = k;
        }
      }
      CHECK(got == want);
    }
  }
}

TEST_CASE("union extraction") {
  const SetFamily f = layer(6, 2);
  const auto e = union_extraction(f, 2, 1);
  REQUIRE(e);
  CHECK(is_valid_extraction(f, *e, 2, 1));
  CHECK(e->spread.size() == 3);
  CHECK(e->outside.size() == 2);
  // Hypothesis fails: |F| = 8 <= 2 * 6 / 2 + 1 + 1.
  const SetFamily small(6, std::vector<Mask>(f.begin(), f.begin() + 8));
  CHECK_FALSE(union_extraction(small, 2, 1));
  CHECK_THROWS_AS(union_extraction(middle_layers(6, 2), 1, 1), BadParams);
  CHECK_THROWS_AS(union_extraction(layer(6, 5), 1, 1), BadParams);
  // s = 1: two 2-sets of [5] sharing an element cover at most 3 points.
  const auto one = union_extraction(layer(5, 2), 1, 1);
  REQUIRE(one);
  CHECK(is_valid_extraction(layer(5, 2), *one, 1, 1));
}

TEST_CASE("certify reports") {
  const CertifyReport b = certify(butterfly_coloring(4), catalog("butterfly"), CopyMode::kStrong);
  CHECK(b.color_count == 11);
  CHECK_FALSE(b.rainbow);
  CHECK(certify(Coloring::all_distinct(3), catalog("chain:2"), CopyMode::kWeak).rainbow);
}
