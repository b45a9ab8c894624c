#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rainbow/catalog.hpp"
#include "rainbow/embedding.hpp"
#include "rainbow/errors.hpp"

using namespace rainbow;
using oracle::set;

namespace {

// Three-legged spider of length 1 around {1,2,3} in the 4-sets, with leaves
// picking up 4, 5 and 6.
SpiderEmbedding small_spider() {
  SpiderEmbedding sp;
  sp.center = set({1, 2, 3});
  sp.j = 1;
  for (int x : {4, 5, 6}) {
    sp.legs.push_back({set({1, 2, 3, x})});
    sp.edge_colors.push_back({set({x})});
    sp.used_colors |= set({x});
  }
  return sp;
}

}  // namespace

TEST_CASE("inclusion bigraph") {
  const SetFamily f = family_union(layer(4, 1), layer(4, 2));
  const InclusionBigraph g = build_bigraph(f, layer(4, 2), 1);
  CHECK(g.edge_count() == 12);
  // The lower side is the whole family; the 2-sets there have no neighbors.
  CHECK(g.lower == f);
  CHECK(g.min_degree() == 0);
  CHECK(g.average_degree() == doctest::Approx(2 * 12.0 / 16));
  const InclusionBigraph loops = build_bigraph(f, layer(4, 2), 0);
  CHECK(loops.edge_count() == 6);
  CHECK_THROWS_AS(build_bigraph(layer(4, 1), layer(4, 2), 1), BadParams);
}

TEST_CASE("bigraph edges match a double loop") {
  for (int n = 4; n <= 7; ++n) {
    const SetFamily f = middle_layers(n, 2);
    for (int j = 1; j <= 2; ++j) {
      std::vector<Mask> upper;
      for (Mask m : f) {
        if (popcount(m) >= n / 2) upper.push_back(m);
      }
      const InclusionBigraph g = build_bigraph(f, SetFamily(n, upper), j);
      std::size_t want = 0;
      for (Mask lo : f) {
        for (Mask hi : upper) {
          if (oracle::sub(lo, hi) && oracle::bits(hi) - oracle::bits(lo) == j) ++want;
        }
      }
      CHECK(g.edge_count() == want);
      for (std::size_t u = 0; u < g.upper.size(); ++u) {
        for (int l : g.upper_adj[u]) CHECK((g.upper[u] & ~g.lower[l]) != 0);
      }
    }
  }
}

TEST_CASE("min-degree cores") {
  // Star: one centre of degree 5 and five leaves of degree 1.
  std::vector<Mask> leaves;
  for (int i = 2; i <= 6; ++i) leaves.push_back(set({1, i}));
  std::vector<Mask> star = leaves;
  star.push_back(set({1}));
  const InclusionBigraph s = build_bigraph(SetFamily(6, star), SetFamily(6, leaves), 1);
  CHECK(min_degree_subgraph(s, 2).vertex_count() == 0);
  CHECK(min_degree_subgraph(s, 1).vertex_count() == 6);
  // Complete bipartite 3 x 3 survives degree 3.
  const InclusionBigraph two = build_bigraph(family_union(layer(4, 1), layer(4, 2)), layer(4, 2), 1);
  CHECK(min_degree_subgraph(two, 2).vertex_count() == 10);
  CHECK(min_degree_subgraph(two, 3).vertex_count() == 0);
  std::mt19937_64 rng(7);
  for (int round = 0; round < 20; ++round) {
    const SetFamily f = oracle::random_family(6, 0.5, rng);
    std::vector<Mask> up;
    for (Mask m : f) {
      if (popcount(m) >= 3) up.push_back(m);
    }
    const InclusionBigraph g = build_bigraph(f, SetFamily(6, up), 1);
    for (int d = 1; d <= 3; ++d) {
      InclusionBigraph core;
      try {
        core = min_degree_subgraph(g, d);
      } catch (const Error&) {
        CHECK(g.average_degree() >= 2 * d);
        continue;
      }
      if (core.vertex_count()) CHECK(core.min_degree() >= d);
    }
  }
}

TEST_CASE("greedy spiders") {
  const SetFamily f = middle_layers(8, 2);
  const InclusionBigraph g = build_bigraph(f, layer(8, 5), 1);
  const SpiderResult r = greedy_spider(g, 3, 1, Discipline::kDisjoint);
  REQUIRE(r.status == SpiderStatus::kOk);
  CHECK(r.legs_done == 3);
  CHECK(r.spider.center_upper == false);
  Mask seen = 0;
  for (const auto& cs : r.spider.edge_colors) {
    for (Mask c : cs) {
      CHECK((seen & c) == 0);
      seen |= c;
    }
  }
  CHECK(seen == r.spider.used_colors);
  CHECK(is_valid_embedding(catalog("spider:1x3"), r.spider.images(), CopyMode::kStrong));

  const SpiderResult even = greedy_spider(build_bigraph(middle_layers(8, 3), layer(8, 4), 1), 2, 2,
                                          Discipline::kDisjoint);
  REQUIRE(even.status == SpiderStatus::kOk);
  CHECK(even.spider.center_upper);
  CHECK(popcount(even.spider.leaf(0)) == 4);

  const SpiderResult frac = greedy_spider(build_bigraph(family_union(layer(10, 4), layer(10, 6)), layer(10, 6), 2), 3, 1,
                                          Discipline::kFraction, 2);
  REQUIRE(frac.status == SpiderStatus::kOk);
  Mask used = 0;
  for (const auto& cs : frac.spider.edge_colors) {
    for (Mask c : cs) {
      CHECK(popcount(c & used) * 2 < 2);
      used |= c;
    }
  }
}

TEST_CASE("a single edge cannot carry two legs") {
  const InclusionBigraph g = build_bigraph(SetFamily(3, {set({1}), set({1, 2})}), SetFamily(3, {set({1, 2})}), 1);
  const SpiderResult r = greedy_spider(g, 2, 1, Discipline::kDisjoint);
  CHECK(r.status == SpiderStatus::kStuck);
  CHECK(r.legs_done == 1);
}

TEST_CASE("completing a spider to a path") {
  const SpiderEmbedding sp = small_spider();
  const SetFamily f(8, {set({1, 3, 4}), set({1, 2, 5}), set({2, 3, 6}), set({1, 3, 6})});
  const PathCompletion p = complete_p2km1(sp, f, 3);
  REQUIRE(p.found);
  CHECK(p.leaf_a == 0);
  CHECK(p.leaf_b == 2);
  CHECK(p.y == 2);
  CHECK(p.triples_tried == 1);
  REQUIRE(p.copy);
  CHECK(is_valid_embedding(catalog("path:3"), p.copy->images, CopyMode::kStrong));
  const PathCompletion q = complete_p2km1_serial(sp, f, 3);
  CHECK(q.leaf_a == p.leaf_a);
  CHECK(q.leaf_b == p.leaf_b);
  CHECK(q.y == p.y);
  CHECK(q.triples_tried == p.triples_tried);
  CHECK_FALSE(complete_p2km1(sp, SetFamily(8, {set({1, 2, 4})}), 3).found);
  CHECK_THROWS_AS(complete_p2km1(sp, f, 4), BadParams);
  CHECK_THROWS_AS(complete_p2km1(sp, f, 2), BadParams);
}

TEST_CASE("parallel path completion matches serial on a real pipeline") {
  const SetFamily m = middle_layers(10, 2);
  const InclusionBigraph g = build_bigraph(m, layer(10, 6), 1);
  const SpiderResult s = greedy_spider(g, 3, 1, Discipline::kDisjoint);
  REQUIRE(s.status == SpiderStatus::kOk);
  const PathCompletion a = complete_p2km1(s.spider, m, 3);
  const PathCompletion b = complete_p2km1_serial(s.spider, m, 3);
  CHECK(a.found == b.found);
  CHECK(a.leaf_a == b.leaf_a);
  CHECK(a.leaf_b == b.leaf_b);
  CHECK(a.y == b.y);
  CHECK(a.lower_a == b.lower_a);
  CHECK(a.lower_b == b.lower_b);
  CHECK(a.triples_tried == b.triples_tried);
}

TEST_CASE("completing a path to a crown") {
  const SetFamily m = middle_layers(12, 2);
  const InclusionBigraph g = build_bigraph(m, layer(12, 7), 1);
  const SpiderResult s = greedy_spider(g, 3, 1, Discipline::kDisjoint);
  REQUIRE(s.status == SpiderStatus::kOk);
  const PathCompletion p = complete_p2km1(s.spider, m, 3);
  REQUIRE(p.found);
  const CrownCompletion c = complete_crown(*p.copy, 12);
  CHECK(is_valid_embedding(catalog("crown:3"), c.copy.images, CopyMode::kStrong));
  // One element removed per middle a_i.
  CHECK(popcount(c.top) == 12 - 1);
  CHECK(c.top_in_band == (2 * popcount(c.top) >= 12 + 2 * BandSpec::standard(12).half_width()));

  // a_2 inside a_1 u a_3 is rejected.
  CopyEmbedding bad;
  bad.poset = catalog("path:3");
  bad.mode = CopyMode::kStrong;
  bad.images = {set({1, 2, 3, 4, 5, 6}), set({2, 3, 4, 5, 6, 7}), set({3, 4, 5, 6, 7, 8}),
                set({1, 2, 3, 4, 5, 6, 7}), set({2, 3, 4, 5, 6, 7, 8})};
  CHECK_THROWS_AS(complete_crown(bad, 12), PreconditionViolated);
}

TEST_CASE("pivot transformation") {
  const PivotTransform c4 = t0_transform(catalog("chain:4"), 3);
  CHECK(c4.poset.size() == 5);
  CHECK(height(c4.poset) == 3);
  CHECK(c4.added.size() == 1);
  CHECK_FALSE(c4.degenerate);
  CHECK(c4.poset.below(c4.pivot) != 0);
  CHECK_THROWS_AS(t0_transform(catalog("chain:4"), 1), BadPivot);
  const Poset x = catalog("x");
  CHECK_THROWS_AS(t0_transform(x, *x.find_label("b1")), BadPivot);
  CHECK_THROWS_AS(t0_transform(catalog("fork:2"), 0), BadPivot);
  CHECK(t0_transform(catalog("broom:2"), 2).degenerate);
  const PivotTransform deg = t0_transform(catalog("chain:2"), 1);
  CHECK(deg.degenerate);
  CHECK(deg.added.empty());
  CHECK(deg.poset.size() == 2);
}

TEST_CASE("special tree plan") {
  const SpecialTreePlan plan = special_tree_plan(catalog("chain:4"), 3);
  CHECK(plan.pivot.poset.size() == 5);
  CHECK_FALSE(plan.peel.empty());
}

TEST_CASE("marked chains") {
  const auto chains = marked_chains(full_family(3), 2);
  CHECK(chains.size() == 36);  // 3! chains, C(4, 2) marker pairs each
  for (const auto& mc : chains) {
    CHECK(mc.markers.size() == 2);
    CHECK(popcount(mc.markers[0]) < popcount(mc.markers[1]));
    for (Mask m : mc.markers) CHECK(mc.on_chain(m));
    CHECK(mc.chain_sets().size() == 4);
  }
  CHECK(marked_chains(layer(4, 2), 1).size() == 24);
  CHECK(marked_chains(layer(4, 2), 2).empty());
  CHECK_THROWS_AS(marked_chains(full_family(9), 1), TooLarge);
  // d counts from the top marker.
  const auto top = l_of(chains, set({1, 2, 3}), 1);
  CHECK(top.size() == 6 * 3);
  CHECK(l_of(chains, set({1, 2, 3}), 2).empty());
  CHECK(l_of(chains, set({1}), 3).empty());
}

TEST_CASE("forbidden neighborhoods") {
  const BandSpec wide = BandSpec::with_half_width(4, 2);
  const Mask g = set({1, 2, 3});
  const SetFamily w(4, {set({1, 4})});
  const SetFamily down = forbidden_down(g, w, wide);
  // Proper subsets of {1,2,3} comparable to {1,4}: {} and {1}.
  CHECK(down == SetFamily(4, {0, set({1})}));
  CHECK_THROWS_AS(forbidden_down(g, SetFamily(4, {full_mask(4)}), wide), PreconditionViolated);
  // Duality: complementing everything swaps the two sides.
  std::mt19937_64 rng(3);
  for (int round = 0; round < 50; ++round) {
    const int n = 5;
    const Mask all = full_mask(n);
    const Mask h = rng() & all;
    std::vector<Mask> ws;
    for (int i = 0; i < 2; ++i) {
      const Mask s = rng() & all;
      if (!oracle::sub(h, s)) ws.push_back(s);
    }
    const BandSpec b = BandSpec::with_half_width(n, 1.5);
    const SetFamily lo = forbidden_down(h, SetFamily(n, ws), b);
    std::vector<Mask> cws;
    for (Mask s : ws) cws.push_back(all & ~s);
    const SetFamily up = forbidden_up(all & ~h, SetFamily(n, cws), b);
    CHECK(up == complement_family(lo));
  }
}

TEST_CASE("badness against a brute-force witness search") {
  const int n = 5;
  const SetFamily f = middle_layers(n, 2);
  std::vector<MarkedChain> chains;
  for (MarkedChain& mc : marked_chains(f, 2)) {
    if (mc.chain.front() == 1) chains.push_back(std::move(mc));
  }
  std::vector<Mask> pool;
  for (Mask m : layer(n, 2)) pool.push_back(m);
  const BadnessContext ctx{n, 2, pool};
  const BandSpec band = BandSpec::standard(n);
  const BandSpec wide = BandSpec::for_poset(n, 2);
  for (Mask g : f) {
    for (int d = 1; d <= 2; ++d) {
      for (Side side : {Side::kLower, Side::kUpper}) {
        const auto members = l_of(chains, g, d);
        // Every admissible witness family of one or two pool sets.
        std::vector<Mask> ok;
        for (Mask s : pool) {
          const bool fits = side == Side::kLower ? !oracle::sub(g, s) : !oracle::sub(s, g);
          if (fits && wide.contains(s)) ok.push_back(s);
        }
        auto hits = [&](const std::vector<Mask>& ws) {
          for (const auto& mc : members) {
            bool hit = false;
            for (Mask h : mc.markers) {
              const bool beside = side == Side::kLower ? (oracle::sub(h, g) && h != g) : (oracle::sub(g, h) && h != g);
              bool related = false;
              for (Mask s : ws) related |= oracle::sub(h, s) || oracle::sub(s, h);
              hit |= beside && related && band.contains(h);
            }
            if (!hit) return false;
          }
          return true;
        };
        bool want = false;
        for (std::size_t a = 0; a < ok.size() && !members.empty(); ++a) {
          want |= hits({ok[a]});
          for (std::size_t b = a + 1; b < ok.size(); ++b) want |= hits({ok[a], ok[b]});
        }
        const auto got = is_bad(g, d, chains, ctx, side);
        CHECK(got.has_value() == want);
        if (got) {
          CHECK(got->size() <= 2);
          CHECK(hits(std::vector<Mask>(got->begin(), got->end())));
        }
      }
    }
  }
}

TEST_CASE("good chains extend") {
  const int n = 5;
  std::vector<Mask> pool;
  for (Mask m : layer(n, 2)) pool.push_back(m);
  for (Mask m : layer(n, 3)) pool.push_back(m);
  std::vector<MarkedChain> chains;
  for (MarkedChain& mc : marked_chains(middle_layers(n, 3), 1)) {
    if (mc.chain.front() <= 2) chains.push_back(std::move(mc));
  }
  const ExtensionAudit a = audit_good_extensions(chains, BadnessContext{n, 3, pool});
  CHECK(a.good_chains > 0);
  CHECK(a.checks > 0);
  CHECK(a.marker_violations == 0);
  for (const auto& mc : chains) {
    if (is_good(mc, chains, BadnessContext{n, 3, pool})) {
      for (std::size_t i = 0; i < mc.markers.size(); ++i) {
        const int d = static_cast<int>(mc.markers.size() - i);
        CHECK_FALSE(is_bad(mc.markers[i], d, chains, BadnessContext{n, 3, pool}, Side::kLower));
      }
    }
  }
}
