#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rainbow/catalog.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/copy_detect.hpp"
#include "rainbow/errors.hpp"

using namespace rainbow;
using oracle::set;

namespace {

const CopyMode kModes[] = {CopyMode::kWeak, CopyMode::kStrong};

SetFamily family_of_code(int n, std::uint64_t code) {
  std::vector<Mask> members;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (code >> m & 1) members.push_back(m);
  }
  return SetFamily(n, members);
}

// Naive embedding check written from the definitions.
bool embeds(const Poset& p, const std::vector<Mask>& im, CopyMode mode) {
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (a == b) continue;
      if (im[a] == im[b]) return false;
      const bool inc = oracle::sub(im[a], im[b]);
      if (p.less(a, b) && !inc) return false;
      if (mode == CopyMode::kStrong && inc && !p.less(a, b)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("copy examples") {
  const auto c2 = find_copy(catalog("chain:2"), SetFamily(3, {0, 7}), CopyMode::kWeak);
  REQUIRE(c2);
  CHECK(c2->images == std::vector<Mask>{0, 7});
  CHECK(find_copy(catalog("butterfly"), middle_layers(4, 3), CopyMode::kStrong).has_value());
  const SetFamily chain(4, {0, 1, 3, 7, 15});
  CHECK_FALSE(find_copy(catalog("antichain:2"), chain, CopyMode::kStrong));
  CHECK(find_copy(catalog("antichain:2"), chain, CopyMode::kWeak));
  CHECK(oracle_find_copy(catalog("diamond"), full_family(2), CopyMode::kStrong).has_value());
  CHECK(find_copy(catalog("crown:3"), full_family(3), CopyMode::kStrong).has_value() ==
        oracle_find_copy(catalog("crown:3"), full_family(3), CopyMode::kStrong).has_value());
  CHECK_THROWS_AS(oracle_find_copy(catalog("chain:7"), full_family(3), CopyMode::kWeak), TooLarge);
}

TEST_CASE("freeness examples") {
  const std::vector<Poset> vw{catalog("fork:2"), catalog("broom:2")};
  CHECK(is_free(vw, katona_tarjan_family(5), CopyMode::kWeak));
  CHECK_FALSE(is_free(catalog("chain:2"), SetFamily(3, {1, 3}), CopyMode::kWeak));
  CHECK_FALSE(is_free(catalog("antichain:3"), SetFamily(3, {0, 1, 3}), CopyMode::kWeak));
  CHECK(is_free(catalog("antichain:3"), SetFamily(3, {0, 1}), CopyMode::kWeak));
}

TEST_CASE("search agrees with the exhaustive oracle on every family of 2^[3]") {
  std::vector<Poset> posets;
  for (const CatalogId& id : catalog_ids_up_to(6)) posets.push_back(catalog(id));
  for (std::uint64_t code = 0; code < 256; ++code) {
    const SetFamily f = family_of_code(3, code);
    for (const Poset& p : posets) {
      for (CopyMode mode : kModes) {
        const auto fast = find_copy(p, f, mode);
        const auto slow = oracle_find_copy(p, f, mode);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) CHECK(embeds(p, fast->images, mode));
        if (slow) CHECK(embeds(p, slow->images, mode));
      }
    }
  }
}

TEST_CASE("parallel search returns the serial witness") {
  std::mt19937_64 rng(77);
  std::vector<Poset> posets;
  for (const CatalogId& id : catalog_ids_up_to(6)) posets.push_back(catalog(id));
  for (int t = 0; t < 120; ++t) {
    const SetFamily f = oracle::random_family(5, 0.2 + 0.05 * (t % 10), rng);
    const Poset& p = posets[t % posets.size()];
    for (CopyMode mode : kModes) {
      const auto a = find_copy(p, f, mode);
      const auto b = find_copy_parallel(p, f, mode);
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(a->images == b->images);
    }
  }
}

TEST_CASE("monotone in the family, strong implies weak, and duality") {
  std::mt19937_64 rng(12);
  std::vector<Poset> posets;
  for (const CatalogId& id : catalog_ids_up_to(5)) posets.push_back(catalog(id));
  for (int t = 0; t < 150; ++t) {
    const SetFamily f = oracle::random_family(4, 0.3, rng);
    std::vector<Mask> bigger(f.begin(), f.end());
    bigger.push_back(rng() % 16);
    const SetFamily g(4, bigger);
    const Poset& p = posets[t % posets.size()];
    for (CopyMode mode : kModes) {
      if (find_copy(p, f, mode)) CHECK(find_copy(p, g, mode).has_value());
    }
    if (const auto s = find_copy(p, f, CopyMode::kStrong)) {
      CHECK(is_valid_embedding(p, s->images, CopyMode::kWeak));
    }
    CHECK(find_copy(p, f, CopyMode::kStrong).has_value() ==
          find_copy(dual(p), complement_family(f), CopyMode::kStrong).has_value());
  }
}

TEST_CASE("embedding validity checks") {
  const Poset c2 = catalog("chain:2");
  CHECK(is_valid_embedding(c2, std::vector<Mask>{1, 3}, CopyMode::kStrong));
  CHECK_FALSE(is_valid_embedding(c2, std::vector<Mask>{3, 1}, CopyMode::kWeak));
  CHECK_FALSE(is_valid_embedding(catalog("antichain:2"), std::vector<Mask>{1, 3}, CopyMode::kStrong));
  CHECK(is_valid_embedding(catalog("antichain:2"), std::vector<Mask>{1, 3}, CopyMode::kWeak));
  CHECK_FALSE(is_valid_embedding(catalog("antichain:2"), std::vector<Mask>{1, 1}, CopyMode::kWeak));
  const Coloring mono = Coloring::monochromatic(2);
  CHECK_FALSE(is_valid_embedding(c2, std::vector<Mask>{1, 3}, CopyMode::kWeak, &mono));
}

TEST_CASE("rainbow copies") {
  CHECK(find_rainbow_copy(catalog("chain:2"), Coloring::all_distinct(3), CopyMode::kWeak));
  CHECK_FALSE(find_rainbow_copy(catalog("antichain:2"), Coloring::monochromatic(3), CopyMode::kWeak));
  CHECK_FALSE(find_rainbow_copy(catalog("butterfly"), butterfly_coloring(4), CopyMode::kStrong));
  CHECK(find_rainbow_copy(catalog("butterfly"), butterfly_coloring(4), CopyMode::kWeak));
}

TEST_CASE("rainbow search agrees with the oracle on random colorings") {
  std::mt19937_64 rng(31);
  std::vector<Poset> posets;
  for (const CatalogId& id : catalog_ids_up_to(4)) posets.push_back(catalog(id));
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 2;
    const int palette = 1 + static_cast<int>(rng() % (std::size_t{1} << n));
    std::vector<ColorId> raw(std::size_t{1} << n);
    for (auto& c : raw) c = static_cast<ColorId>(rng() % palette);
    const Coloring c = Coloring::normalized(n, raw);
    const Poset& p = posets[t % posets.size()];
    for (CopyMode mode : kModes) {
      const auto fast = find_rainbow_copy(p, c, mode);
      CHECK(fast.has_value() == oracle_find_rainbow_copy(p, c, mode).has_value());
      if (fast) CHECK(is_valid_embedding(p, fast->images, mode, &c));
    }
  }
}

TEST_CASE("colored queries reject repeated colors") {
  const Poset c3 = catalog("chain:4");
  const std::vector<Mask> cands{0, 1, 3, 7};
  std::vector<ColorId> colors(8, -1);
  colors[0] = 0;
  colors[1] = 1;
  colors[3] = 1;
  colors[7] = 2;
  CopyQuery q{&c3, cands, 3, CopyMode::kStrong, colors, std::nullopt};
  CHECK_FALSE(search_copy(q));
  colors[3] = 3;
  CopyQuery q2{&c3, cands, 3, CopyMode::kStrong, colors, std::nullopt};
  CHECK(search_copy(q2));
  CopyQuery q3{&c3, cands, 3, CopyMode::kStrong, colors, Mask{7}};
  const auto w = search_copy(q3);
  REQUIRE(w);
  CHECK(std::find(w->begin(), w->end(), Mask{7}) != w->end());
}

TEST_CASE("copy modes parse") {
  CHECK(parse_copy_mode("weak") == CopyMode::kWeak);
  CHECK(parse_copy_mode("strong") == CopyMode::kStrong);
  CHECK(to_string(CopyMode::kStrong) == "strong");
  CHECK_THROWS_AS(parse_copy_mode("medium"), ParseError);
}
