#include "rainbow/embedding.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "rainbow/catalog.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

// ------------------------------------------------------------ bigraphs

std::size_t InclusionBigraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& adj : upper_adj) e += adj.size();
  return e;
}

double InclusionBigraph::average_degree() const {
  const std::size_t v = vertex_count();
  return v == 0 ? 0.0 : 2.0 * static_cast<double>(edge_count()) / static_cast<double>(v);
}

int InclusionBigraph::min_degree() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& adj : lower_adj) best = std::min(best, adj.size());
  for (const auto& adj : upper_adj) best = std::min(best, adj.size());
  return vertex_count() == 0 ? 0 : static_cast<int>(best);
}

InclusionBigraph build_bigraph(const SetFamily& family, const SetFamily& upper, int j) {
  if (j < 0) throw BadParams("build_bigraph: j must be non-negative");
  if (family.ground_size() != upper.ground_size()) throw BadParams("build_bigraph: ground sizes differ");
  for (Mask m : upper) {
    if (!family.contains(m)) throw BadParams("build_bigraph: upper part is not inside the family");
  }
  InclusionBigraph g;
  g.lower = family;
  g.upper = upper;
  g.j = j;
  g.lower_adj.assign(family.size(), {});
  g.upper_adj.assign(upper.size(), {});
  std::vector<std::vector<int>> by_size(family.ground_size() + 1);
  for (std::size_t i = 0; i < family.size(); ++i) by_size[popcount(family[i])].push_back(static_cast<int>(i));
  for (std::size_t u = 0; u < upper.size(); ++u) {
    const int size = popcount(upper[u]) - j;
    if (size < 0) continue;
    for (int l : by_size[size]) {
      if (is_subset(family[l], upper[u])) {
        g.upper_adj[u].push_back(l);
        g.lower_adj[l].push_back(static_cast<int>(u));
      }
    }
  }
  return g;
}

InclusionBigraph min_degree_subgraph(const InclusionBigraph& graph, int d) {
  if (d < 1) throw BadParams("min_degree_subgraph: d must be positive");
  const std::size_t nl = graph.lower.size(), nu = graph.upper.size();
  std::vector<int> deg_l(nl), deg_u(nu);
  std::vector<char> alive_l(nl, 1), alive_u(nu, 1);
  std::vector<std::pair<bool, int>> queue;  // (is_upper, index)
  for (std::size_t i = 0; i < nl; ++i) {
    deg_l[i] = static_cast<int>(graph.lower_adj[i].size());
    if (deg_l[i] < d) queue.push_back({false, static_cast<int>(i)});
  }
  for (std::size_t i = 0; i < nu; ++i) {
    deg_u[i] = static_cast<int>(graph.upper_adj[i].size());
    if (deg_u[i] < d) queue.push_back({true, static_cast<int>(i)});
  }
  while (!queue.empty()) {
    auto [up, v] = queue.back();
    queue.pop_back();
    if (up ? !alive_u[v] : !alive_l[v]) continue;
    if (up) {
      alive_u[v] = 0;
      for (int w : graph.upper_adj[v]) {
        if (alive_l[w] && --deg_l[w] < d) queue.push_back({false, w});
      }
    } else {
      alive_l[v] = 0;
      for (int w : graph.lower_adj[v]) {
        if (alive_u[w] && --deg_u[w] < d) queue.push_back({true, w});
      }
    }
  }
  std::vector<int> new_l(nl, -1), new_u(nu, -1);
  std::vector<Mask> lower, upper;
  for (std::size_t i = 0; i < nl; ++i) {
    if (alive_l[i]) {
      new_l[i] = static_cast<int>(lower.size());
      lower.push_back(graph.lower[i]);
    }
  }
  for (std::size_t i = 0; i < nu; ++i) {
    if (alive_u[i]) {
      new_u[i] = static_cast<int>(upper.size());
      upper.push_back(graph.upper[i]);
    }
  }
  InclusionBigraph out;
  const int n = graph.lower.ground_size();
  out.lower = SetFamily(n, lower);
  out.upper = SetFamily(n, upper);
  out.j = graph.j;
  out.lower_adj.assign(lower.size(), {});
  out.upper_adj.assign(upper.size(), {});
  for (std::size_t u = 0; u < nu; ++u) {
    if (!alive_u[u]) continue;
    for (int l : graph.upper_adj[u]) {
      if (!alive_l[l]) continue;
      out.upper_adj[new_u[u]].push_back(new_l[l]);
      out.lower_adj[new_l[l]].push_back(new_u[u]);
    }
  }
  for (auto& adj : out.lower_adj) std::sort(adj.begin(), adj.end());
  if (graph.vertex_count() > 0 && graph.average_degree() >= 2.0 * d && out.vertex_count() == 0) {
    throw Error("min_degree_subgraph: average degree at least 2d but the core is empty");
  }
  return out;
}

// ------------------------------------------------------------ spiders

Mask SpiderEmbedding::intersection() const {
  Mask g = center;
  for (const auto& leg : legs) {
    for (Mask m : leg) g &= m;
  }
  return g;
}

std::vector<Mask> SpiderEmbedding::images() const {
  std::vector<Mask> out{center};
  for (const auto& leg : legs) out.insert(out.end(), leg.begin(), leg.end());
  return out;
}

namespace {

SpiderResult grow_spider(const InclusionBigraph& graph, int center_index, bool center_upper,
                         int legs, int leg_length, Discipline discipline, int k) {
  SpiderResult r;
  SpiderEmbedding& s = r.spider;
  s.center_upper = center_upper;
  s.center = center_upper ? graph.upper[center_index] : graph.lower[center_index];
  s.j = graph.j;
  s.k = k;
  s.discipline = discipline;
  std::set<Mask> used{s.center};
  auto admissible = [&](Mask colors) {
    if (discipline == Discipline::kDisjoint) return (colors & s.used_colors) == 0;
    return static_cast<std::int64_t>(popcount(colors & s.used_colors)) * k < graph.j;
  };
  for (int leg = 0; leg < legs; ++leg) {
    std::vector<Mask> path, colors;
    bool upper_side = center_upper;
    int cur = center_index;
    for (int t = 0; t < leg_length; ++t) {
      const auto& adj = upper_side ? graph.upper_adj[cur] : graph.lower_adj[cur];
      int next = -1;
      Mask next_colors = 0;
      for (int w : adj) {
        const Mask cand = upper_side ? graph.lower[w] : graph.upper[w];
        const Mask here = upper_side ? graph.upper[cur] : graph.lower[cur];
        const Mask cs = upper_side ? here & ~cand : cand & ~here;
        if (used.count(cand) || !admissible(cs)) continue;
        next = w;
        next_colors = cs;
        break;
      }
      if (next < 0) {
        r.status = SpiderStatus::kStuck;
        r.legs_done = leg;
        r.detail = "leg " + std::to_string(leg + 1) + " stuck at step " + std::to_string(t + 1);
        return r;
      }
      upper_side = !upper_side;
      cur = next;
      const Mask m = upper_side ? graph.upper[cur] : graph.lower[cur];
      used.insert(m);
      path.push_back(m);
      colors.push_back(next_colors);
      s.used_colors |= next_colors;
    }
    s.legs.push_back(path);
    s.edge_colors.push_back(colors);
  }
  r.legs_done = legs;
  const Poset shape = catalog(CatalogId{CatalogKind::kSpider, {leg_length, legs}});
  if (!is_valid_embedding(shape, s.images(), CopyMode::kStrong)) {
    r.status = SpiderStatus::kNotStrong;
    r.detail = "assembled spider is not a strong copy";
    return r;
  }
  r.status = SpiderStatus::kOk;
  return r;
}

}  // namespace

SpiderResult greedy_spider(const InclusionBigraph& graph, int legs, int leg_length,
                           Discipline discipline, int k) {
  if (legs < 1 || leg_length < 1) throw BadParams("greedy_spider: legs and leg length must be positive");
  if (discipline == Discipline::kFraction && k < 1) throw BadParams("greedy_spider: k must be positive");
  const bool center_upper = leg_length % 2 == 0;
  const auto& side_adj = center_upper ? graph.upper_adj : graph.lower_adj;
  SpiderResult best;
  best.detail = "no vertex with a neighbor on the center side";
  best.legs_done = -1;
  for (std::size_t c = 0; c < side_adj.size(); ++c) {
    if (side_adj[c].empty()) continue;
    SpiderResult r = grow_spider(graph, static_cast<int>(c), center_upper, legs, leg_length,
                                 discipline, k);
    if (r.status == SpiderStatus::kOk) return r;
    if (r.legs_done > best.legs_done) best = std::move(r);
  }
  best.legs_done = std::max(best.legs_done, 0);
  return best;
}

// ------------------------------------------------------------ completion

namespace {

struct PairJob {
  int a, b;
};

struct CompletionInputs {
  const SpiderEmbedding& spider;
  int k;
  Mask common;
  std::vector<std::vector<Mask>> lowers;  // per leaf: candidate G_a
  Poset shape;
};

CompletionInputs completion_inputs(const SpiderEmbedding& spider, const SetFamily& family, int k) {
  if (k < 3) throw BadParams("complete_p2km1: k must be at least 3");
  if (spider.leg_length() != k - 2) throw BadParams("complete_p2km1: legs must have length k - 2");
  if (spider.center_upper != (spider.leg_length() % 2 == 0)) {
    throw BadParams("complete_p2km1: leaves must be maximal");
  }
  CompletionInputs in{spider, k, spider.intersection(), {}, catalog(CatalogId{CatalogKind::kPathPoset, {k}})};
  for (std::size_t a = 0; a < spider.legs.size(); ++a) {
    const Mask leaf = spider.leaf(a);
    const Mask mark = bit_of(lowest_element(spider.leaf_colors(a)));
    std::vector<Mask> cands;
    for (Mask m : family) {
      if (popcount(m) == popcount(leaf) - spider.j && is_subset(m, leaf) && (m & mark)) {
        cands.push_back(m);
      }
    }
    in.lowers.push_back(std::move(cands));
  }
  return in;
}

std::vector<Mask> assemble_path(const SpiderEmbedding& s, int a, int b, Mask ga, Mask gb, int k) {
  std::vector<Mask> seq{ga};
  for (auto it = s.legs[a].rbegin(); it != s.legs[a].rend(); ++it) seq.push_back(*it);
  seq.push_back(s.center);
  for (Mask m : s.legs[b]) seq.push_back(m);
  seq.push_back(gb);
  std::vector<Mask> images(2 * k - 1);
  for (std::size_t p = 0; p < seq.size(); ++p) {
    if (p % 2 == 0) {
      images[p / 2] = seq[p];
    } else {
      images[k + (p - 1) / 2] = seq[p];
    }
  }
  return images;
}

bool middle_escapes(const std::vector<Mask>& images, int k) {
  const Mask ends = images[0] | images[k - 1];
  for (int i = 1; i < k - 1; ++i) {
    if (is_subset(images[i], ends)) return false;
  }
  return true;
}

PathCompletion try_pair(const CompletionInputs& in, int a, int b) {
  PathCompletion r;
  for (int y : elements_of(in.common)) {
    const Mask yb = bit_of(y);
    for (Mask ga : in.lowers[a]) {
      if (ga & yb) continue;
      for (Mask gb : in.lowers[b]) {
        if (gb & yb) continue;
        ++r.triples_tried;
        std::vector<Mask> images = assemble_path(in.spider, a, b, ga, gb, in.k);
        if (!middle_escapes(images, in.k)) continue;
        if (!is_valid_embedding(in.shape, images, CopyMode::kStrong)) continue;
        r.found = true;
        r.leaf_a = a;
        r.leaf_b = b;
        r.y = y;
        r.lower_a = ga;
        r.lower_b = gb;
        r.copy = CopyEmbedding{in.shape, std::move(images), CopyMode::kStrong};
        return r;
      }
    }
  }
  return r;
}

std::vector<PairJob> pair_jobs(int legs) {
  std::vector<PairJob> jobs;
  for (int a = 0; a < legs; ++a) {
    for (int b = a + 1; b < legs; ++b) jobs.push_back({a, b});
  }
  return jobs;
}

}  // namespace

PathCompletion complete_p2km1_serial(const SpiderEmbedding& spider, const SetFamily& family, int k) {
  const CompletionInputs in = completion_inputs(spider, family, k);
  PathCompletion total;
  for (const PairJob& job : pair_jobs(static_cast<int>(spider.legs.size()))) {
    PathCompletion r = try_pair(in, job.a, job.b);
    total.triples_tried += r.triples_tried;
    if (r.found) {
      r.triples_tried = total.triples_tried;
      return r;
    }
  }
  return total;
}

PathCompletion complete_p2km1(const SpiderEmbedding& spider, const SetFamily& family, int k) {
  const CompletionInputs in = completion_inputs(spider, family, k);
  const std::vector<PairJob> jobs = pair_jobs(static_cast<int>(spider.legs.size()));
  const auto count = static_cast<std::int64_t>(jobs.size());
  std::vector<PathCompletion> results(jobs.size());
  std::vector<char> done(jobs.size(), 0);
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i > best.load()) continue;
    results[i] = try_pair(in, jobs[i].a, jobs[i].b);
    done[i] = 1;
    if (results[i].found) {
      std::int64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  const std::int64_t winner = best.load();
  const std::int64_t last = winner == std::numeric_limits<std::int64_t>::max() ? count - 1 : winner;
  PathCompletion out = winner == std::numeric_limits<std::int64_t>::max() ? PathCompletion{} : results[winner];
  out.triples_tried = 0;
  for (std::int64_t i = 0; i <= last; ++i) out.triples_tried += results[i].triples_tried;
  return out;
}

CrownCompletion complete_crown(const CopyEmbedding& path, int n) {
  const int size = path.poset.size();
  if (size < 3 || size % 2 == 0) throw BadParams("complete_crown: expected a copy of P_{2k-1}");
  const int k = (size + 1) / 2;
  if (!path.poset.same_order(catalog(CatalogId{CatalogKind::kPathPoset, {k}}))) {
    throw BadParams("complete_crown: poset is not P_{2k-1} in catalog order");
  }
  const BandSpec band = BandSpec::standard(n);
  for (Mask m : path.images) {
    if (!band.contains(m)) throw PreconditionViolated("complete_crown: image " + to_set_string(m) + " outside the band");
  }
  const Mask ends = path.images[0] | path.images[k - 1];
  Mask top = full_mask(n);
  for (int i = 1; i < k - 1; ++i) {
    const Mask escape = path.images[i] & ~ends;
    if (escape == 0) {
      throw PreconditionViolated("complete_crown: A_" + std::to_string(i + 1) +
                                 " lies inside A_1 u A_k");
    }
    top &= ~bit_of(lowest_element(escape));
  }
  const Poset crown = catalog(CatalogId{CatalogKind::kCrown, {k}});
  std::vector<Mask> images(path.images.begin(), path.images.end());
  images.push_back(top);
  if (!is_valid_embedding(crown, images, CopyMode::kStrong)) {
    throw Infeasible("complete_crown: completed family is not a strong crown");
  }
  CrownCompletion out{CopyEmbedding{crown, std::move(images), CopyMode::kStrong}, top, false};
  out.top_in_band = 2.0 * popcount(top) >= n + 2.0 * band.half_width();
  return out;
}

// ------------------------------------------------------------ trees

PivotTransform t0_transform(const Poset& tree, int m) {
  const int size = tree.size();
  if (m < 0 || m >= size) throw BadPivot("t0_transform: no such element");
  if (tree.above(m) != 0) throw BadPivot("t0_transform: pivot is not maximal");
  const int h = height(tree);
  for (const auto& chain : maximal_chains(tree)) {
    if (static_cast<int>(chain.size()) == h && std::find(chain.begin(), chain.end(), m) == chain.end()) {
      throw BadPivot("t0_transform: a longest chain avoids the pivot");
    }
  }
  const int k = h - 1;
  const int extra = std::max(0, k - 2);
  std::vector<Relation> arcs;
  for (auto [p, q] : hasse(tree).arcs) {
    if (q == m) {
      arcs.push_back({m, p});
    } else {
      arcs.push_back({p, q});
    }
  }
  std::vector<std::string> labels = tree.labels();
  PivotTransform out;
  for (int i = 0; i < extra; ++i) {
    const int v = size + i;
    out.added.push_back(v);
    std::string label = "v" + std::to_string(i + 1);
    while (std::find(labels.begin(), labels.end(), label) != labels.end()) label += "'";
    labels.push_back(label);
    arcs.push_back({v, i + 1 < extra ? v + 1 : m});
  }
  out.poset = Poset::from_relations(size + extra, arcs, labels);
  out.pivot = m;
  out.degenerate = k < 2;
  if (!out.degenerate) {
    if (height(out.poset) != k) throw Error("t0_transform: height is not k");
    const ElementSet rest = tree.all_elements() & ~(ElementSet{1} << m);
    if (!tree.induced(rest).same_order(out.poset.induced(rest))) {
      throw Error("t0_transform: the rest of the tree changed");
    }
  }
  return out;
}

SpecialTreePlan special_tree_plan(const Poset& tree, int m) {
  SpecialTreePlan plan;
  plan.pivot = t0_transform(tree, m);
  plan.saturated = saturate(plan.pivot.poset);
  plan.peel = chain_interval_peel(plan.saturated);
  // Labels of the lower neighbors of m in the original tree.
  std::set<std::string> neighbor_labels;
  for (auto [p, q] : hasse(tree).arcs) {
    if (q == m) neighbor_labels.insert(tree.label(p));
  }
  const Poset& sat = plan.saturated;
  std::set<std::string> closure;
  for (int p = 0; p < sat.size(); ++p) {
    if (!neighbor_labels.count(sat.label(p))) continue;
    closure.insert(sat.label(p));
    for (ElementSet b = sat.below(p); b != 0; b &= b - 1) closure.insert(sat.label(std::countr_zero(b)));
  }
  for (std::size_t i = 0; i < plan.peel.size(); ++i) {
    const auto& labels = plan.peel[i].labels();
    if (std::set<std::string>(labels.begin(), labels.end()) == closure) {
      plan.down_closure_step = static_cast<int>(i);
      break;
    }
  }
  return plan;
}

// ------------------------------------------------------------ marked chains

std::vector<Mask> MarkedChain::chain_sets() const {
  std::vector<Mask> sets{0};
  Mask cur = 0;
  for (int e : chain) {
    cur |= bit_of(e);
    sets.push_back(cur);
  }
  return sets;
}

bool MarkedChain::on_chain(Mask m) const {
  const int size = popcount(m);
  Mask prefix = 0;
  for (int i = 0; i < size; ++i) prefix |= bit_of(chain[i]);
  return prefix == m;
}

std::vector<MarkedChain> marked_chains(const SetFamily& family, int k) {
  const int n = family.ground_size();
  if (n > 8) throw TooLarge("marked_chains: n must be at most 8");
  if (k < 1) throw BadParams("marked_chains: k must be positive");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<MarkedChain> out;
  do {
    MarkedChain base{perm, {}};
    std::vector<Mask> hits;
    for (Mask m : base.chain_sets()) {
      if (family.contains(m)) hits.push_back(m);
    }
    if (static_cast<int>(hits.size()) < k) continue;
    for (Mask pick : subsets_of_size(static_cast<int>(hits.size()), k)) {
      MarkedChain mc{perm, {}};
      for (Mask p = pick; p != 0; p &= p - 1) mc.markers.push_back(hits[std::countr_zero(p)]);
      out.push_back(std::move(mc));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<MarkedChain> l_of(const std::vector<MarkedChain>& chains, Mask g, int d) {
  std::vector<MarkedChain> out;
  for (const MarkedChain& mc : chains) {
    const int k = static_cast<int>(mc.markers.size());
    if (d >= 1 && d <= k && mc.markers[k - d] == g) out.push_back(mc);
  }
  return out;
}

namespace {

bool related_to_any(Mask h, std::span<const Mask> witnesses) {
  return std::any_of(witnesses.begin(), witnesses.end(), [&](Mask s) { return comparable(h, s); });
}

// h lies in the forbidden neighborhood of g for the given side.
bool forbidden(Mask h, Mask g, std::span<const Mask> witnesses, const BandSpec& band, Side side) {
  const bool beside = side == Side::kLower ? is_proper_subset(h, g) : is_proper_subset(g, h);
  return beside && band.contains(h) && related_to_any(h, witnesses);
}

bool side_ok(Mask g, Mask s, Side side) {
  return side == Side::kLower ? !is_subset(g, s) : !is_subset(s, g);
}

SetFamily forbidden_family(Mask g, const SetFamily& witnesses, const BandSpec& band, Side side) {
  const int n = witnesses.ground_size();
  if (n > 18) throw TooLarge("forbidden neighborhood: n must be at most 18");
  for (Mask s : witnesses) {
    if (!side_ok(g, s, side)) {
      throw PreconditionViolated("forbidden neighborhood: witness " + to_set_string(s) +
                                 (side == Side::kLower ? " contains " : " lies inside ") +
                                 to_set_string(g));
    }
  }
  std::vector<Mask> out;
  const Mask free = side == Side::kLower ? g : full_mask(n) & ~g;
  // Walk the subsets of `free`: below g they are g's subsets, above g they
  // are the added elements.
  for (Mask sub = free;; sub = (sub - 1) & free) {
    const Mask h = side == Side::kLower ? sub : g | sub;
    if (forbidden(h, g, witnesses.members(), band, side)) out.push_back(h);
    if (sub == 0) break;
  }
  return SetFamily(n, std::move(out));
}

std::vector<Mask> admissible_pool(Mask g, const BadnessContext& ctx, Side side) {
  const BandSpec wide = BandSpec::for_poset(ctx.n, ctx.t);
  std::vector<Mask> out;
  for (Mask s : ctx.pool) {
    if (wide.contains(s) && side_ok(g, s, side)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Index subsets of a pool of size `size`, by increasing cardinality up to
// `limit`, then lexicographically.
std::vector<Mask> witness_choices(int size, int limit) {
  std::vector<Mask> out;
  for (int c = 1; c <= std::min(size, limit); ++c) {
    for (Mask m : subsets_of_size(size, c)) out.push_back(m);
  }
  return out;
}

std::vector<Mask> pick(const std::vector<Mask>& pool, Mask choice) {
  std::vector<Mask> s;
  for (Mask c = choice; c != 0; c &= c - 1) s.push_back(pool[std::countr_zero(c)]);
  return s;
}

bool markers_hit(const MarkedChain& mc, Mask g, std::span<const Mask> s, const BandSpec& band, Side side) {
  return std::any_of(mc.markers.begin(), mc.markers.end(),
                     [&](Mask h) { return forbidden(h, g, s, band, side); });
}

bool chain_hits(const MarkedChain& mc, Mask g, std::span<const Mask> s, const BandSpec& band, Side side) {
  for (Mask h : mc.chain_sets()) {
    if (forbidden(h, g, s, band, side)) return true;
  }
  return false;
}

}  // namespace

SetFamily forbidden_down(Mask g, const SetFamily& witnesses, const BandSpec& band) {
  return forbidden_family(g, witnesses, band, Side::kLower);
}

SetFamily forbidden_up(Mask g, const SetFamily& witnesses, const BandSpec& band) {
  return forbidden_family(g, witnesses, band, Side::kUpper);
}

std::optional<SetFamily> is_bad(Mask g, int d, const std::vector<MarkedChain>& chains,
                                const BadnessContext& ctx, Side side) {
  if (ctx.t < 1) throw BadParams("is_bad: |T| must be positive");
  if (ctx.n > 18) throw TooLarge("is_bad: n must be at most 18");
  const BandSpec band = BandSpec::standard(ctx.n);
  if (!band.contains(g)) return std::nullopt;
  const std::vector<MarkedChain> members = l_of(chains, g, d);
  if (members.empty()) return std::nullopt;
  const std::vector<Mask> pool = admissible_pool(g, ctx, side);
  if (pool.size() > 63) throw TooLarge("is_bad: witness pool too large");
  const std::vector<Mask> choices = witness_choices(static_cast<int>(pool.size()), ctx.t);
  const auto count = static_cast<std::int64_t>(choices.size());
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i > best.load()) continue;
    const std::vector<Mask> s = pick(pool, choices[i]);
    const bool all_hit = std::all_of(members.begin(), members.end(), [&](const MarkedChain& mc) {
      return markers_hit(mc, g, s, band, side);
    });
    if (all_hit) {
      std::int64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  const std::int64_t b = best.load();
  if (b == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return SetFamily(ctx.n, pick(pool, choices[b]));
}

bool is_good(const MarkedChain& mc, const std::vector<MarkedChain>& chains, const BadnessContext& ctx) {
  const int k = static_cast<int>(mc.markers.size());
  for (int i = 0; i < k; ++i) {
    const Mask g = mc.markers[i];
    const int d = k - i;
    const std::vector<MarkedChain> members = l_of(chains, g, d);
    const bool on_same_chain = std::any_of(members.begin(), members.end(),
                                           [&](const MarkedChain& o) { return o.chain == mc.chain; });
    if (!on_same_chain) continue;
    if (is_bad(g, d, chains, ctx, Side::kLower) || is_bad(g, d, chains, ctx, Side::kUpper)) return false;
  }
  return true;
}

ExtensionAudit audit_good_extensions(const std::vector<MarkedChain>& chains, const BadnessContext& ctx) {
  const BandSpec band = BandSpec::standard(ctx.n);
  struct Tally {
    std::uint64_t checks = 0, marker = 0, chain = 0;
  };
  std::map<std::tuple<Mask, int, int>, Tally> cache;
  auto tally = [&](Mask g, int d, Side side) -> const Tally& {
    const auto key = std::make_tuple(g, d, static_cast<int>(side));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Tally t;
    const std::vector<MarkedChain> members = l_of(chains, g, d);
    const std::vector<Mask> pool = admissible_pool(g, ctx, side);
    for (Mask choice : witness_choices(static_cast<int>(pool.size()), ctx.t)) {
      const std::vector<Mask> s = pick(pool, choice);
      ++t.checks;
      const bool marker_ok = std::any_of(members.begin(), members.end(), [&](const MarkedChain& mc) {
        return !markers_hit(mc, g, s, band, side);
      });
      const bool chain_ok = std::any_of(members.begin(), members.end(), [&](const MarkedChain& mc) {
        return !chain_hits(mc, g, s, band, side);
      });
      t.marker += !marker_ok;
      t.chain += !chain_ok;
    }
    return cache.emplace(key, t).first->second;
  };
  ExtensionAudit audit;
  for (const MarkedChain& mc : chains) {
    if (!is_good(mc, chains, ctx)) continue;
    ++audit.good_chains;
    const int k = static_cast<int>(mc.markers.size());
    for (int i = 0; i < k; ++i) {
      for (Side side : {Side::kLower, Side::kUpper}) {
        const Tally& t = tally(mc.markers[i], k - i, side);
        audit.checks += t.checks;
        audit.marker_violations += t.marker;
        audit.chain_violations += t.chain;
      }
    }
  }
  return audit;
}

}  // namespace rainbow
