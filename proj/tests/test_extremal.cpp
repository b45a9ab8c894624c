#include <doctest.h>

#include <chrono>

#include "oracles.hpp"
#include "rainbow/catalog.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"

using namespace rainbow;

namespace {

SearchConfig cfg_of(int n, std::vector<Poset> posets, CopyMode mode, int threads = 1) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.posets = std::move(posets);
  cfg.mode = mode;
  cfg.threads = threads;
  return cfg;
}

// Largest free family by trying all 2^(2^n) families, n <= 3.
std::int64_t brute_la(int n, const std::vector<Poset>& posets, CopyMode mode, bool convex) {
  std::int64_t best = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (1 << n)); ++code) {
    std::vector<Mask> members;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      if (code >> m & 1) members.push_back(m);
    }
    if (static_cast<std::int64_t>(members.size()) <= best) continue;
    const SetFamily f(n, members);
    if (convex && !oracle::convex(f)) continue;
    bool free = true;
    for (const Poset& p : posets) free &= !oracle_find_copy(p, f, mode).has_value();
    if (free) best = static_cast<std::int64_t>(members.size());
  }
  return best;
}

}  // namespace

TEST_CASE("La examples") {
  CHECK(la_exact(cfg_of(4, {catalog("antichain:2")}, CopyMode::kWeak)).value == 1);
  CHECK(la_exact(cfg_of(4, {catalog("fork:2"), catalog("broom:2")}, CopyMode::kWeak)).value == 6);
  CHECK(la_exact(cfg_of(3, {catalog("chain:2")}, CopyMode::kWeak)).value == 3);
  CHECK(la_exhaustive(cfg_of(3, {catalog("chain:2")}, CopyMode::kWeak)).value == 3);
}

TEST_CASE("La searches agree with brute force at n <= 3") {
  for (const CatalogId& id : catalog_ids_up_to(4)) {
    const Poset p = catalog(id);
    for (CopyMode mode : {CopyMode::kWeak, CopyMode::kStrong}) {
      for (int n = 1; n <= 3; ++n) {
        const std::int64_t want = brute_la(n, {p}, mode, false);
        const std::int64_t want_con = brute_la(n, {p}, mode, true);
        SearchConfig cfg = cfg_of(n, {p}, mode);
        CHECK(la_exact(cfg).value == want);
        CHECK(la_exhaustive(cfg).value == want);
        cfg.convex_only = true;
        CHECK(la_exact(cfg).value == want_con);
        CHECK(la_convex(cfg).value == want_con);
      }
    }
  }
}

TEST_CASE("La witnesses are free and the right size") {
  for (const CatalogId& id : catalog_ids_up_to(4)) {
    const Poset p = catalog(id);
    for (CopyMode mode : {CopyMode::kWeak, CopyMode::kStrong}) {
      const ExtremalResult r = la_exact(cfg_of(4, {p}, mode));
      CHECK(r.exact);
      CHECK(static_cast<std::int64_t>(r.family().size()) == r.value);
      CHECK(is_free(p, r.family(), mode));
    }
  }
}

TEST_CASE("La is monotone in n") {
  for (const CatalogId& id : catalog_ids_up_to(4)) {
    const Poset p = catalog(id);
    std::int64_t prev = 0;
    for (int n = 1; n <= 4; ++n) {
      const std::int64_t v = la_exact(cfg_of(n, {p}, CopyMode::kWeak)).value;
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("parallel La and the exhaustive search match their serial references") {
  for (const CatalogId& id : catalog_ids_up_to(4)) {
    const Poset p = catalog(id);
    for (CopyMode mode : {CopyMode::kWeak, CopyMode::kStrong}) {
      const SearchConfig s = cfg_of(4, {p}, mode, 1);
      const SearchConfig par = cfg_of(4, {p}, mode, 4);
      const ExtremalResult a = la_exact_serial(s), b = la_exact(par);
      CHECK(a.value == b.value);
      CHECK(a.family() == b.family());
      const ExtremalResult c = la_exhaustive_serial(s), d = la_exhaustive(par);
      CHECK(c.value == d.value);
      CHECK(c.family() == d.family());
      CHECK(c.value == a.value);
    }
  }
}

TEST_CASE("ar examples") {
  CHECK(ar_exact(cfg_of(3, {catalog("diamond")}, CopyMode::kWeak)).value == 5);
  CHECK(ar_exact(cfg_of(4, {catalog("antichain:2")}, CopyMode::kStrong)).value == 3);
  CHECK(ar_exact(cfg_of(3, {catalog("broom:2")}, CopyMode::kStrong)).value == 4);
  const ExtremalResult bow = ar_exact(cfg_of(4, {catalog("butterfly")}, CopyMode::kStrong, 4));
  CHECK(bow.value >= 11);
  CHECK_THROWS_AS(ar_exact(cfg_of(3, {catalog("chain:1")}, CopyMode::kWeak)), BadParams);
}

TEST_CASE("ar branch and bound agrees with every set partition at n <= 3") {
  for (const CatalogId& id : catalog_ids_up_to(4)) {
    const Poset p = catalog(id);
    if (p.size() < 2) continue;
    for (CopyMode mode : {CopyMode::kWeak, CopyMode::kStrong}) {
      for (int n = 2; n <= 3; ++n) {
        const ExtremalResult brute = ar_by_partitions(n, p, mode);
        SearchConfig cfg = cfg_of(n, {p}, mode);
        const ExtremalResult reduced = ar_exact(cfg);
        cfg.symmetry_reduction = false;
        const ExtremalResult plain = ar_exact(cfg);
        CHECK(reduced.value == brute.value);
        CHECK(plain.value == brute.value);
        CHECK(reduced.coloring().color_count() == reduced.value);
        CHECK_FALSE(oracle_find_rainbow_copy(p, reduced.coloring(), mode));
      }
    }
  }
  CHECK(ar_by_partitions(3, catalog("broom:2"), CopyMode::kStrong).nodes == 4140);
}

TEST_CASE("ar under duality and with threads") {
  struct Case {
    Poset p;
    int n;
    CopyMode mode;
  };
  std::vector<Case> cases;
  for (const CatalogId& id : catalog_ids_up_to(4)) {
    if (catalog(id).size() < 2) continue;
    for (CopyMode mode : {CopyMode::kWeak, CopyMode::kStrong}) cases.push_back({catalog(id), 3, mode});
  }
  // n = 4 only where both the poset and its dual search in well under a second.
  for (const char* id : {"chain:3", "antichain:3", "fork:2", "broom:2"}) {
    for (CopyMode mode : {CopyMode::kWeak, CopyMode::kStrong}) cases.push_back({catalog(id), 4, mode});
  }
  for (const char* id : {"antichain:4", "butterfly"}) cases.push_back({catalog(id), 4, CopyMode::kStrong});
  for (const auto& [p, n, mode] : cases) {
    {
      const ExtremalResult a = ar_exact_serial(cfg_of(n, {p}, mode));
      const ExtremalResult b = ar_exact(cfg_of(n, {p}, mode, 4));
      const ExtremalResult d = ar_exact(cfg_of(n, {dual(p)}, mode));
      CHECK(a.value == b.value);
      CHECK(a.coloring() == b.coloring());
      CHECK(a.value == d.value);
      // Complementing a witness turns it into one for the dual poset.
      CHECK_FALSE(find_rainbow_copy(dual(p), a.coloring().complemented(), mode));
    }
  }
}

TEST_CASE("sandwich inequalities") {
  const SandwichReport d = check_sandwich(3, catalog("diamond"), CopyMode::kWeak);
  CHECK(d.ar == 5);
  CHECK(d.holds());
  CHECK(d.exact);
  CHECK(check_sandwich(3, catalog("chain:2"), CopyMode::kWeak).holds());
  const SandwichReport s = check_sandwich(3, catalog("broom:2"), CopyMode::kStrong);
  CHECK(s.holds());
  REQUIRE(s.extreme_bound);
  CHECK(s.ar <= *s.extreme_bound);
}

TEST_CASE("time limits mark results inexact") {
  SearchConfig cfg = cfg_of(5, {catalog("crown:3")}, CopyMode::kStrong);
  cfg.time_limit = 0.05;
  const auto start = std::chrono::steady_clock::now();
  const ExtremalResult r = ar_exact(cfg);
  const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK_FALSE(r.exact);
  CHECK(r.value >= 1);
  CHECK(r.coloring().color_count() == r.value);
  CHECK(took < 1.0);
  cfg.time_limit = 1e-9;
  const ExtremalResult none = ar_exact_serial(cfg);
  CHECK_FALSE(none.exact);
  CHECK(none.value >= 1);
}

TEST_CASE("permuting masks") {
  CHECK(permute_mask(oracle::set({1, 3}), {2, 3, 1}) == oracle::set({2, 1}));
}
