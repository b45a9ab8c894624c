#include "rainbow/copy_detect.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

struct ElementBounds {
  std::vector<int> depth;  // longest chain strictly below
  std::vector<int> rise;   // longest chain strictly above
};

ElementBounds element_bounds(const Poset& poset) {
  ElementBounds b;
  b.depth = levels(poset);
  for (int& d : b.depth) d -= 1;
  b.rise = levels(dual(poset));
  for (int& r : b.rise) r -= 1;
  return b;
}

struct Root {
  std::vector<int> order;
  Mask first;
};

class Searcher {
 public:
  Searcher(const CopyQuery& q, const ElementBounds& bounds, const std::vector<int>& order)
      : q_(q), bounds_(bounds), order_(order), images_(q.poset->size(), 0) {}

  bool run(Mask first) {
    if (!admissible(0, first)) return false;
    images_[order_[0]] = first;
    return dfs(1);
  }

  const std::vector<Mask>& images() const { return images_; }

 private:
  bool admissible(int t, Mask m) const {
    const Poset& P = *q_.poset;
    const int p = order_[t];
    const int size = popcount(m);
    if (size < bounds_.depth[p] || size > q_.ground_size - bounds_.rise[p]) return false;
    const bool use_colors = !q_.colors.empty();
    for (int s = 0; s < t; ++s) {
      const int r = order_[s];
      const Mask img = images_[r];
      if (img == m) return false;
      if (use_colors && q_.colors[img] == q_.colors[m]) return false;
      if (P.less(r, p)) {
        if (!is_subset(img, m)) return false;
      } else if (P.less(p, r)) {
        if (!is_subset(m, img)) return false;
      } else if (q_.mode == CopyMode::kStrong && comparable(m, img)) {
        return false;
      }
    }
    return true;
  }

  bool dfs(int t) {
    if (t == static_cast<int>(order_.size())) return true;
    const int p = order_[t];
    for (Mask m : q_.candidates) {
      if (q_.required && m == *q_.required) continue;  // already used by the root
      if (!admissible(t, m)) continue;
      images_[p] = m;
      if (dfs(t + 1)) return true;
    }
    return false;
  }

  const CopyQuery& q_;
  const ElementBounds& bounds_;
  const std::vector<int>& order_;
  std::vector<Mask> images_;
};

std::vector<Root> roots_of(const CopyQuery& q, const ElementBounds& bounds) {
  const Poset& P = *q.poset;
  std::vector<Root> roots;
  const std::vector<int> ext = linear_extension(P);
  if (q.required) {
    for (int r = 0; r < P.size(); ++r) {
      std::vector<int> order{r};
      for (int p : ext) {
        if (p != r) order.push_back(p);
      }
      roots.push_back({std::move(order), *q.required});
    }
  } else {
    const int p = ext.front();
    for (Mask m : q.candidates) {
      const int size = popcount(m);
      if (size < bounds.depth[p] || size > q.ground_size - bounds.rise[p]) continue;
      roots.push_back({ext, m});
    }
  }
  return roots;
}

void validate(const CopyQuery& q) {
  if (q.poset == nullptr) throw BadParams("copy search: no poset");
  if (q.poset->size() == 0) throw EmptyPoset("copy search: empty poset");
  if (q.required && !std::binary_search(q.candidates.begin(), q.candidates.end(), *q.required)) {
    throw BadParams("copy search: required mask is not a candidate");
  }
}

std::optional<CopyEmbedding> wrap(const Poset& poset, std::optional<std::vector<Mask>> images,
                                  CopyMode mode) {
  if (!images) return std::nullopt;
  return CopyEmbedding{poset, std::move(*images), mode};
}

}  // namespace

std::string to_string(CopyMode mode) { return mode == CopyMode::kWeak ? "weak" : "strong"; }

CopyMode parse_copy_mode(const std::string& text) {
  if (text == "weak") return CopyMode::kWeak;
  if (text == "strong") return CopyMode::kStrong;
  throw ParseError("unknown mode '" + text + "', expected weak or strong");
}

bool is_valid_embedding(const Poset& poset, std::span<const Mask> images, CopyMode mode,
                        const Coloring* coloring) {
  const int size = poset.size();
  if (static_cast<int>(images.size()) != size) return false;
  for (int p = 0; p < size; ++p) {
    for (int q = 0; q < size; ++q) {
      if (p == q) continue;
      if (images[p] == images[q]) return false;
      const bool inclusion = is_subset(images[p], images[q]);
      if (poset.less(p, q) && !inclusion) return false;
      if (mode == CopyMode::kStrong && inclusion && !poset.less(p, q)) return false;
      if (coloring != nullptr && (*coloring)(images[p]) == (*coloring)(images[q])) return false;
    }
  }
  return true;
}

bool is_valid_embedding(const CopyEmbedding& embedding, const Coloring* coloring) {
  return is_valid_embedding(embedding.poset, embedding.images, embedding.mode, coloring);
}

std::optional<std::vector<Mask>> search_copy(const CopyQuery& query) {
  validate(query);
  const ElementBounds bounds = element_bounds(*query.poset);
  for (const Root& root : roots_of(query, bounds)) {
    Searcher s(query, bounds, root.order);
    if (s.run(root.first)) return s.images();
  }
  return std::nullopt;
}

std::optional<std::vector<Mask>> search_copy_parallel(const CopyQuery& query) {
  validate(query);
  const ElementBounds bounds = element_bounds(*query.poset);
  const std::vector<Root> roots = roots_of(query, bounds);
  const auto count = static_cast<std::int64_t>(roots.size());
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
  std::vector<std::optional<std::vector<Mask>>> found(roots.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    Searcher s(query, bounds, roots[i].order);
    if (s.run(roots[i].first)) {
      found[i] = s.images();
      std::int64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  const std::int64_t b = best.load();
  if (b == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return found[b];
}

std::optional<CopyEmbedding> find_copy(const Poset& poset, const SetFamily& family, CopyMode mode) {
  CopyQuery q{&poset, family.members(), family.ground_size(), mode, {}, std::nullopt};
  return wrap(poset, search_copy(q), mode);
}

std::optional<CopyEmbedding> find_copy_parallel(const Poset& poset, const SetFamily& family,
                                                CopyMode mode) {
  CopyQuery q{&poset, family.members(), family.ground_size(), mode, {}, std::nullopt};
  return wrap(poset, search_copy_parallel(q), mode);
}

bool is_free(const Poset& poset, const SetFamily& family, CopyMode mode) {
  return !find_copy(poset, family, mode).has_value();
}

bool is_free(std::span<const Poset> posets, const SetFamily& family, CopyMode mode) {
  return std::all_of(posets.begin(), posets.end(),
                     [&](const Poset& p) { return is_free(p, family, mode); });
}

std::optional<CopyEmbedding> find_rainbow_copy(const Poset& poset, const Coloring& coloring,
                                               CopyMode mode) {
  const int n = coloring.ground_size();
  std::vector<Mask> all(std::size_t{1} << n);
  std::iota(all.begin(), all.end(), Mask{0});
  CopyQuery q{&poset, all, n, mode, coloring.colors(), std::nullopt};
  return wrap(poset, search_copy(q), mode);
}

namespace {

bool enumerate_injections(const Poset& poset, std::span<const Mask> pool, CopyMode mode,
                          const Coloring* coloring, std::vector<Mask>& images,
                          std::vector<bool>& used, int p) {
  if (p == poset.size()) return is_valid_embedding(poset, images, mode, coloring);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    images[p] = pool[i];
    if (enumerate_injections(poset, pool, mode, coloring, images, used, p + 1)) return true;
    used[i] = false;
  }
  return false;
}

std::optional<CopyEmbedding> oracle(const Poset& poset, std::span<const Mask> pool, CopyMode mode,
                                    const Coloring* coloring) {
  std::vector<Mask> images(poset.size());
  std::vector<bool> used(pool.size(), false);
  if (enumerate_injections(poset, pool, mode, coloring, images, used, 0)) {
    return CopyEmbedding{poset, images, mode};
  }
  return std::nullopt;
}

}  // namespace

std::optional<CopyEmbedding> oracle_find_copy(const Poset& poset, const SetFamily& family,
                                              CopyMode mode) {
  if (poset.size() > 6 || family.size() > 40) {
    throw TooLarge("oracle_find_copy: needs |P| <= 6 and |F| <= 40");
  }
  return oracle(poset, family.members(), mode, nullptr);
}

std::optional<CopyEmbedding> oracle_find_rainbow_copy(const Poset& poset, const Coloring& coloring,
                                                      CopyMode mode) {
  if (poset.size() > 6 || coloring.ground_size() > 4) {
    throw TooLarge("oracle_find_rainbow_copy: needs |P| <= 6 and n <= 4");
  }
  std::vector<Mask> all(std::size_t{1} << coloring.ground_size());
  std::iota(all.begin(), all.end(), Mask{0});
  return oracle(poset, all, mode, &coloring);
}

}  // namespace rainbow
