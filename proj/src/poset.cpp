#include "rainbow/poset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

constexpr ElementSet element_bit(int p) { return ElementSet{1} << p; }

int count(ElementSet s) { return std::popcount(s); }

template <typename Fn>
void for_each_element(ElementSet s, Fn&& fn) {
  while (s != 0) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

// Undirected Hasse adjacency.
std::vector<std::vector<int>> hasse_adjacency(const Poset& poset) {
  std::vector<std::vector<int>> adj(poset.size());
  for (auto [p, q] : hasse(poset).arcs) {
    adj[p].push_back(q);
    adj[q].push_back(p);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> bfs_distances(const Poset& poset, int source) {
  std::vector<int> dist(poset.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (int q = 0; q < poset.size(); ++q) {
      if (dist[q] < 0 && poset.comparable(p, q)) {
        dist[q] = dist[p] + 1;
        queue.push_back(q);
      }
    }
  }
  return dist;
}

}  // namespace

Poset Poset::from_relations(int size, std::span<const Relation> relations,
                            std::vector<std::string> labels) {
  if (size < 0 || size > kMaxSize) {
    throw BadParams("poset size must be in [0, 64], got " + std::to_string(size));
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != size) {
    throw BadParams("poset label count does not match size");
  }
  Poset poset;
  poset.size_ = size;
  poset.below_.assign(size, 0);
  poset.above_.assign(size, 0);
  for (auto [p, q] : relations) {
    if (p < 0 || q < 0 || p >= size || q >= size) {
      throw BadParams("relation (" + std::to_string(p) + "," + std::to_string(q) +
                      ") out of range");
    }
    if (p == q) throw CycleDetected("relation " + std::to_string(p) + " < itself");
    poset.below_[q] |= element_bit(p);
  }
  // Warshall over bit rows.
  for (int k = 0; k < size; ++k) {
    for (int q = 0; q < size; ++q) {
      if (poset.below_[q] & element_bit(k)) poset.below_[q] |= poset.below_[k];
    }
  }
  for (int q = 0; q < size; ++q) {
    if (poset.below_[q] & element_bit(q)) {
      throw CycleDetected("relations contain a cycle through element " +
                          std::to_string(q));
    }
    for_each_element(poset.below_[q], [&](int p) { poset.above_[p] |= element_bit(q); });
  }
  if (labels.empty()) {
    labels.reserve(size);
    for (int p = 0; p < size; ++p) labels.push_back(std::to_string(p));
  }
  poset.labels_ = std::move(labels);
  return poset;
}

ElementSet Poset::all_elements() const {
  return size_ >= 64 ? ~ElementSet{0} : (ElementSet{1} << size_) - 1;
}

std::optional<int> Poset::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

Poset Poset::induced(ElementSet keep) const {
  keep &= all_elements();
  std::vector<int> index(size_, -1);
  std::vector<std::string> labels;
  int next = 0;
  for_each_element(keep, [&](int p) {
    index[p] = next++;
    labels.push_back(labels_[p]);
  });
  std::vector<Relation> rel;
  for_each_element(keep, [&](int q) {
    for_each_element(below_[q] & keep, [&](int p) { rel.emplace_back(index[p], index[q]); });
  });
  return from_relations(next, rel, std::move(labels));
}

Poset Poset::without(int element) const {
  return induced(all_elements() & ~element_bit(element));
}

bool Poset::same_order(const Poset& other) const {
  return size_ == other.size_ && below_ == other.below_;
}

std::vector<Relation> Poset::relations() const {
  std::vector<Relation> out;
  for (int p = 0; p < size_; ++p) {
    for_each_element(above_[p], [&](int q) { out.emplace_back(p, q); });
  }
  return out;
}

Poset transitive_closure(std::span<const Relation> relations, int size) {
  return Poset::from_relations(size, relations);
}

HasseDiagram hasse(const Poset& poset) {
  HasseDiagram diagram{poset.size(), {}};
  for (int p = 0; p < poset.size(); ++p) {
    for_each_element(poset.above(p), [&](int q) {
      // q covers p iff nothing sits strictly between them.
      if ((poset.above(p) & poset.below(q)) == 0) diagram.arcs.emplace_back(p, q);
    });
  }
  return diagram;
}

std::vector<int> levels(const Poset& poset) {
  // A strict down-set is strictly contained in that of any element above, so
  // sorting by its size is a linear extension.
  std::vector<int> order(poset.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return count(poset.below(a)) < count(poset.below(b));
  });
  std::vector<int> level(poset.size(), 1);
  for (int p : order) {
    for_each_element(poset.below(p), [&](int q) { level[p] = std::max(level[p], level[q] + 1); });
  }
  return level;
}

int height(const Poset& poset) {
  auto level = levels(poset);
  return level.empty() ? 0 : *std::max_element(level.begin(), level.end());
}

ExtremalElements extremal_elements(const Poset& poset) {
  ExtremalElements out;
  for (int p = 0; p < poset.size(); ++p) {
    if (poset.below(p) == 0) out.minimals.push_back(p);
    if (poset.above(p) == 0) out.maximals.push_back(p);
  }
  return out;
}

Poset dual(const Poset& poset) {
  std::vector<Relation> rel;
  for (auto [p, q] : poset.relations()) rel.emplace_back(q, p);
  return Poset::from_relations(poset.size(), rel, poset.labels());
}

std::vector<int> linear_extension(const Poset& poset) {
  auto level = levels(poset);
  std::vector<int> order(poset.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return level[a] < level[b]; });
  return order;
}

std::optional<std::vector<int>> find_isomorphism(const Poset& a, const Poset& b) {
  const int n = a.size();
  if (n != b.size()) return std::nullopt;
  if (a.relations().size() != b.relations().size()) return std::nullopt;
  auto level_a = levels(a);
  auto level_b = levels(b);
  auto signature = [](const Poset& poset, const std::vector<int>& level, int p) {
    return std::array<int, 3>{count(poset.below(p)), count(poset.above(p)), level[p]};
  };
  std::vector<std::array<int, 3>> sig_a(n), sig_b(n);
  for (int p = 0; p < n; ++p) {
    sig_a[p] = signature(a, level_a, p);
    sig_b[p] = signature(b, level_b, p);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const std::vector<int> order = linear_extension(a);
  std::vector<int> image(n, -1);
  ElementSet used = 0;
  std::function<bool(int)> extend = [&](int depth) {
    if (depth == n) return true;
    const int p = order[depth];
    for (int c = 0; c < n; ++c) {
      if ((used & element_bit(c)) || sig_a[p] != sig_b[c]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int x = order[d];
        const int fx = image[x];
        ok = a.less(x, p) == b.less(fx, c) && a.less(p, x) == b.less(c, fx);
      }
      if (!ok) continue;
      image[p] = c;
      used |= element_bit(c);
      if (extend(depth + 1)) return true;
      used &= ~element_bit(c);
      image[p] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

bool is_isomorphic(const Poset& a, const Poset& b) {
  return find_isomorphism(a, b).has_value();
}

std::vector<Poset> p_minus(const Poset& poset) {
  if (poset.size() <= 1) throw EmptyPoset("p_minus needs at least two elements");
  std::vector<Poset> out;
  for (int m = 0; m < poset.size(); ++m) {
    if (poset.below(m) != 0 && poset.above(m) != 0) continue;
    Poset reduced = poset.without(m);
    bool duplicate = std::any_of(out.begin(), out.end(),
                                 [&](const Poset& q) { return is_isomorphic(q, reduced); });
    if (!duplicate) out.push_back(std::move(reduced));
  }
  return out;
}

std::vector<std::vector<int>> canonical_decomposition(const Poset& poset) {
  auto level = levels(poset);
  std::vector<std::vector<int>> out(height(poset));
  for (int p = 0; p < poset.size(); ++p) out[level[p] - 1].push_back(p);
  return out;
}

std::vector<std::vector<int>> maximal_chains(const Poset& poset) {
  // Maximal chains are exactly the Hasse paths from a minimal element to a
  // maximal one.
  std::vector<std::vector<int>> up(poset.size());
  for (auto [p, q] : hasse(poset).arcs) up[p].push_back(q);
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::function<void(int)> walk = [&](int p) {
    path.push_back(p);
    if (up[p].empty()) {
      out.push_back(path);
    } else {
      for (int q : up[p]) walk(q);
    }
    path.pop_back();
  };
  for (int p : extremal_elements(poset).minimals) walk(p);
  return out;
}

bool is_chain(const Poset& poset) {
  for (int p = 0; p < poset.size(); ++p) {
    for (int q = p + 1; q < poset.size(); ++q) {
      if (!poset.comparable(p, q)) return false;
    }
  }
  return true;
}

bool is_antichain(const Poset& poset) { return poset.relations().empty(); }

bool is_connected(const Poset& poset) {
  if (poset.size() == 0) return true;
  auto dist = bfs_distances(poset, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree_poset(const Poset& poset) {
  if (poset.size() == 0) return false;
  return static_cast<int>(hasse(poset).arcs.size()) == poset.size() - 1 &&
         is_connected(poset);
}

bool is_saturated(const Poset& poset, int k) {
  if (height(poset) != k) return false;
  // Every maximal chain has k elements iff each Hasse arc raises the level by
  // exactly one and every maximal element sits on level k.
  auto level = levels(poset);
  for (auto [p, q] : hasse(poset).arcs) {
    if (level[q] != level[p] + 1) return false;
  }
  for (int p : extremal_elements(poset).maximals) {
    if (level[p] != k) return false;
  }
  return true;
}

namespace {

// Undirected Hasse diagram has no cycle (a tree or a forest of trees).
bool hasse_is_forest(const Poset& poset) {
  std::vector<int> parent(poset.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [p, q] : hasse(poset).arcs) {
    const int a = find(p), b = find(q);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

Poset saturate(const Poset& tree) {
  if (tree.size() == 0 || !hasse_is_forest(tree)) {
    throw NotTreePoset("saturate requires a tree poset");
  }
  const int h = height(tree);
  auto level = levels(tree);
  std::vector<std::string> labels = tree.labels();
  std::vector<Relation> covers;
  auto add_element = [&](std::string label) {
    labels.push_back(std::move(label));
    return static_cast<int>(labels.size()) - 1;
  };
  for (auto [p, q] : hasse(tree).arcs) {
    int prev = p;
    for (int r = 1; r <= level[q] - level[p] - 1; ++r) {
      int fresh = add_element(tree.label(p) + "~" + tree.label(q) + "." + std::to_string(r));
      covers.emplace_back(prev, fresh);
      prev = fresh;
    }
    covers.emplace_back(prev, q);
  }
  for (int q : extremal_elements(tree).maximals) {
    int prev = q;
    for (int r = 1; r <= h - level[q]; ++r) {
      int fresh = add_element(tree.label(q) + "+" + std::to_string(r));
      covers.emplace_back(prev, fresh);
      prev = fresh;
    }
  }
  if (labels.size() > Poset::kMaxSize) throw TooLarge("saturated poset exceeds 64 elements");
  const int size = static_cast<int>(labels.size());
  return Poset::from_relations(size, covers, std::move(labels));
}

int poset_distance(const Poset& poset, int p, int q) {
  if (p < 0 || q < 0 || p >= poset.size() || q >= poset.size()) {
    throw BadParams("poset_distance: element out of range");
  }
  int d = bfs_distances(poset, p)[q];
  if (d < 0) throw Disconnected("no comparability walk between the elements");
  return d;
}

std::vector<Poset> chain_interval_peel(const Poset& tree) {
  if (!is_tree_poset(tree)) throw NotTreePoset("chain_interval_peel requires a tree poset");
  const int k = height(tree);
  if (!is_saturated(tree, k)) throw NotSaturated("chain_interval_peel requires a saturated tree");

  std::vector<Poset> sequence{tree};
  while (!is_chain(sequence.back())) {
    const Poset& cur = sequence.back();
    const int n = cur.size();
    auto adj = hasse_adjacency(cur);
    std::vector<std::vector<int>> dist(n);
    int diameter = 0;
    for (int p = 0; p < n; ++p) {
      dist[p] = bfs_distances(cur, p);
      diameter = std::max(diameter, *std::max_element(dist[p].begin(), dist[p].end()));
    }
    std::optional<Poset> next;
    for (int v = 0; v < n && !next; ++v) {
      if (adj[v].size() != 1) continue;
      if (*std::max_element(dist[v].begin(), dist[v].end()) != diameter) continue;
      // Walk from the leaf along the monotone path; each prefix is a
      // candidate I' with u the next vertex.
      const bool upward = cur.less(v, adj[v][0]);
      ElementSet removed = element_bit(v);
      int prev = v;
      int u = adj[v][0];
      while (true) {
        Poset candidate = cur.induced(cur.all_elements() & ~removed);
        if (is_tree_poset(candidate) && is_saturated(candidate, k)) {
          next = std::move(candidate);
          break;
        }
        if (adj[u].size() != 2) break;
        int after = adj[u][0] == prev ? adj[u][1] : adj[u][0];
        if (cur.less(u, after) != upward) break;
        removed |= element_bit(u);
        prev = u;
        u = after;
      }
    }
    if (!next) {
      throw NotSaturated("no diameter leaf admits a saturation-preserving chain interval");
    }
    sequence.push_back(std::move(*next));
  }
  return sequence;
}

}  // namespace rainbow
