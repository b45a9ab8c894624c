#include "rainbow/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "rainbow/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rainbow {
namespace {

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

class Deadline {
 public:
  explicit Deadline(double seconds)
      : limited_(seconds > 0),
        end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}
  bool expired() const { return limited_ && std::chrono::steady_clock::now() >= end_; }

 private:
  bool limited_;
  std::chrono::steady_clock::time_point end_;
};

// State shared by the subtrees of one parallel search.
struct SharedBound {
  std::atomic<std::int64_t> best{-1};
  // Smallest subtree index that reached the a-priori upper bound.
  std::atomic<std::int64_t> finished_index{kNone};
  std::atomic<bool> timed_out{false};
  Deadline deadline;

  explicit SharedBound(double seconds) : deadline(seconds) {}

  void offer(std::int64_t value) {
    std::int64_t cur = best.load();
    while (value > cur && !best.compare_exchange_weak(cur, value)) {
    }
  }
  void finish(std::int64_t index) {
    std::int64_t cur = finished_index.load();
    while (index < cur && !finished_index.compare_exchange_weak(cur, index)) {
    }
  }
};

template <class Witness>
struct Outcome {
  std::int64_t value = -1;
  Witness witness{};
  std::uint64_t nodes = 0;
};

// Runs `search.solve` over the frontier in parallel. Each subtree prunes with
// <= against its own best and < against the shared best, so the subtree that
// attains the optimum finds the same first witness as the serial search; the
// smallest such subtree index wins.
template <class Search>
ExtremalResult run_frontier(Search& search, const SearchConfig& cfg) {
  using State = typename Search::State;
  std::vector<State> frontier;
  std::uint64_t nodes = search.frontier(frontier);
  SharedBound shared(cfg.time_limit);
  const auto count = static_cast<std::int64_t>(frontier.size());
  std::vector<Outcome<typename Search::Witness>> outcomes(frontier.size());
  const int threads = std::max(1, cfg.threads);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i > shared.finished_index.load()) continue;
    outcomes[i] = search.solve(frontier[i], &shared, i);
  }
  ExtremalResult out;
  std::int64_t best_index = -1;
  for (std::int64_t i = 0; i < count; ++i) {
    nodes += outcomes[i].nodes;
    if (outcomes[i].value > (best_index < 0 ? -1 : outcomes[best_index].value)) best_index = i;
  }
  out.nodes = nodes;
  out.exact = !shared.timed_out.load();
  if (best_index < 0) {
    search.fill_empty(out);
  } else {
    out.value = outcomes[best_index].value;
    search.fill(out, outcomes[best_index].witness);
  }
  return out;
}

template <class Search>
ExtremalResult run_serial(Search& search, const SearchConfig& cfg) {
  SharedBound shared(cfg.time_limit);
  auto outcome = search.solve(search.root(), nullptr, 0, &shared.deadline, &shared.timed_out);
  ExtremalResult out;
  out.nodes = outcome.nodes;
  out.exact = !shared.timed_out.load();
  if (outcome.value < 0) {
    search.fill_empty(out);
  } else {
    out.value = outcome.value;
    search.fill(out, outcome.witness);
  }
  return out;
}

// Largest family avoiding a weak copy of a k-element poset contains no chain
// of k sets, so it is at most the sum of the k - 1 largest layers.
std::int64_t chain_free_bound(int n, int chain_length) {
  std::vector<std::int64_t> sizes;
  for (int k = 0; k <= n; ++k) sizes.push_back(static_cast<std::int64_t>(binomial(n, k)));
  std::sort(sizes.rbegin(), sizes.rend());
  std::int64_t total = 0;
  for (int i = 0; i < chain_length - 1 && i < static_cast<int>(sizes.size()); ++i) total += sizes[i];
  return total;
}

std::int64_t la_upper_bound(const SearchConfig& cfg) {
  std::int64_t ub = std::int64_t{1} << cfg.n;
  for (const Poset& p : cfg.posets) {
    if (cfg.mode == CopyMode::kWeak || is_chain(p)) ub = std::min(ub, chain_free_bound(cfg.n, p.size()));
  }
  return ub;
}

void validate_la(const SearchConfig& cfg, int max_n) {
  if (cfg.posets.empty()) throw BadParams("La search: no posets given");
  if (cfg.n < 0 || cfg.n > max_n) {
    throw TooLarge("La search: n must be between 0 and " + std::to_string(max_n));
  }
  for (const Poset& p : cfg.posets) {
    if (p.size() == 0) throw EmptyPoset("La search: empty poset");
  }
}

// ---------------------------------------------------------------- La search

class LaSearch {
 public:
  struct State {
    int position = 0;
    std::vector<Mask> included;
  };
  using Witness = std::vector<Mask>;

  explicit LaSearch(const SearchConfig& cfg)
      : cfg_(cfg), order_(layer_major_order(cfg.n)), upper_(la_upper_bound(cfg)) {}

  State root() const { return {}; }

  // Expands the first levels without bound pruning, in search order.
  std::uint64_t frontier(std::vector<State>& out) const {
    const int depth = std::min<int>(order_.size(), 8);
    std::uint64_t nodes = 0;
    Walker w(*this);
    std::function<void(int)> expand = [&](int i) {
      ++nodes;
      if (i == depth) {
        out.push_back({i, w.included});
        return;
      }
      if (w.try_include(i)) {
        expand(i + 1);
        w.remove(order_[i]);
      }
      expand(i + 1);
    };
    expand(0);
    return nodes;
  }

  Outcome<Witness> solve(const State& state, SharedBound* shared, std::int64_t index,
                         const Deadline* deadline = nullptr,
                         std::atomic<bool>* timed_out = nullptr) const {
    Walker w(*this);
    w.included = state.included;
    w.shared = shared;
    w.index = index;
    w.deadline = shared ? &shared->deadline : deadline;
    w.timed_out = shared ? &shared->timed_out : timed_out;
    w.dfs(state.position);
    return {w.best, w.best_family, w.nodes};
  }

  void fill(ExtremalResult& out, const Witness& w) const { out.witness = SetFamily(cfg_.n, w); }
  void fill_empty(ExtremalResult& out) const { out.witness = SetFamily(cfg_.n); }

 private:
  struct Walker {
    const LaSearch& s;
    std::vector<Mask> included;
    std::int64_t best = -1;
    std::vector<Mask> best_family;
    std::uint64_t nodes = 0;
    SharedBound* shared = nullptr;
    std::int64_t index = 0;
    const Deadline* deadline = nullptr;
    std::atomic<bool>* timed_out = nullptr;
    bool stop = false;

    explicit Walker(const LaSearch& search) : s(search) {}

    bool member(Mask m) const { return std::binary_search(included.begin(), included.end(), m); }

    void remove(Mask m) { included.erase(std::lower_bound(included.begin(), included.end(), m)); }

    // Convexity breaks when m sits above an excluded set that itself sits
    // above an included set. Everything below m is already decided.
    bool keeps_convex(int position) const {
      const Mask m = s.order_[position];
      for (int i = 0; i < position; ++i) {
        const Mask g = s.order_[i];
        if (!is_proper_subset(g, m) || member(g)) continue;
        for (Mask f : included) {
          if (is_proper_subset(f, g)) return false;
        }
      }
      return true;
    }

    bool try_include(int position) {
      const Mask m = s.order_[position];
      if (s.cfg_.convex_only && !keeps_convex(position)) return false;
      included.insert(std::upper_bound(included.begin(), included.end(), m), m);
      for (const Poset& p : s.cfg_.posets) {
        CopyQuery q{&p, included, s.cfg_.n, s.cfg_.mode, {}, m};
        if (search_copy(q)) {
          remove(m);
          return false;
        }
      }
      return true;
    }

    void dfs(int position) {
      if (stop) return;
      ++nodes;
      if (timed_out && timed_out->load(std::memory_order_relaxed)) {
        stop = true;
        return;
      }
      if ((nodes & 15) == 0 && deadline && deadline->expired()) {
        if (timed_out) *timed_out = true;
        stop = true;
        return;
      }
      if (shared && index > shared->finished_index.load(std::memory_order_relaxed)) {
        stop = true;
        return;
      }
      const std::int64_t count = static_cast<std::int64_t>(included.size());
      const std::int64_t bound = std::min<std::int64_t>(
          count + static_cast<std::int64_t>(s.order_.size()) - position, s.upper_);
      if (bound <= best) return;
      if (shared && bound < shared->best.load(std::memory_order_relaxed)) return;
      if (position == static_cast<int>(s.order_.size())) {
        best = count;
        best_family = included;
        if (shared) shared->offer(best);
        if (best == s.upper_) {
          stop = true;
          if (shared) shared->finish(index);
        }
        return;
      }
      if (try_include(position)) {
        dfs(position + 1);
        remove(s.order_[position]);
      }
      dfs(position + 1);
    }
  };

  const SearchConfig& cfg_;
  std::vector<Mask> order_;
  std::int64_t upper_;
};

void verify_la(const SearchConfig& cfg, const ExtremalResult& r) {
  const SetFamily& f = r.family();
  if (static_cast<std::int64_t>(f.size()) != r.value) throw Error("La witness has the wrong size");
  if (!is_free(cfg.posets, f, cfg.mode)) throw Error("La witness contains a forbidden copy");
  if (cfg.convex_only && !is_convex(f)) throw Error("La witness is not convex");
}

// ---------------------------------------------------------------- ar search

struct Symmetries {
  // pos[g][i]: position in the mask order of the image of order[i] under g.
  std::vector<std::vector<int>> pos;
  // by_prefix[t]: group elements mapping the first t positions onto themselves.
  std::vector<std::vector<int>> by_prefix;
};

Symmetries cube_symmetries(int n, const std::vector<Mask>& order, bool with_complement) {
  Symmetries sym;
  const std::size_t total = order.size();
  std::vector<int> where(total);
  for (std::size_t i = 0; i < total; ++i) where[order[i]] = static_cast<int>(i);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  const Mask full = full_mask(n);
  do {
    for (int flip = 0; flip <= (with_complement ? 1 : 0); ++flip) {
      std::vector<int> p(total);
      bool identity = true;
      for (std::size_t i = 0; i < total; ++i) {
        Mask image = permute_mask(order[i], perm);
        if (flip) image = full & ~image;
        p[i] = where[image];
        identity &= p[i] == static_cast<int>(i);
      }
      if (!identity) sym.pos.push_back(std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  sym.by_prefix.assign(total + 1, {});
  for (std::size_t g = 0; g < sym.pos.size(); ++g) {
    int reach = -1;
    for (std::size_t t = 1; t <= total; ++t) {
      reach = std::max(reach, sym.pos[g][t - 1]);
      if (reach == static_cast<int>(t) - 1) sym.by_prefix[t].push_back(static_cast<int>(g));
    }
  }
  return sym;
}

class ArSearch {
 public:
  struct State {
    std::vector<ColorId> prefix;  // colors of order[0..t)
    int classes = 0;
  };
  using Witness = std::vector<ColorId>;  // by position

  explicit ArSearch(const SearchConfig& cfg)
      : cfg_(cfg), poset_(cfg.posets.front()), order_(layer_major_order(cfg.n)) {
    if (cfg.symmetry_reduction) {
      sym_ = cube_symmetries(cfg.n, order_, is_isomorphic(poset_, dual(poset_)));
    }
    upper_ = la_upper_bound(cfg);
  }

  State root() const { return {}; }

  std::uint64_t frontier(std::vector<State>& out) const {
    const int depth = std::min<int>(order_.size(), 6);
    Walker w(*this);
    std::uint64_t nodes = 0;
    std::function<void(int, int)> expand = [&](int t, int classes) {
      ++nodes;
      if (t == depth) {
        out.push_back({std::vector<ColorId>(w.prefix.begin(), w.prefix.begin() + t), classes});
        return;
      }
      for (ColorId c : w.choices(classes)) {
        if (w.assign(t, c)) expand(t + 1, std::max(classes, c + 1));
        w.unassign(t);
      }
    };
    expand(0, 0);
    return nodes;
  }

  Outcome<Witness> solve(const State& state, SharedBound* shared, std::int64_t index,
                         const Deadline* deadline = nullptr,
                         std::atomic<bool>* timed_out = nullptr) const {
    Walker w(*this);
    for (std::size_t t = 0; t < state.prefix.size(); ++t) w.place(t, state.prefix[t]);
    w.shared = shared;
    w.index = index;
    w.deadline = shared ? &shared->deadline : deadline;
    w.timed_out = shared ? &shared->timed_out : timed_out;
    w.dfs(static_cast<int>(state.prefix.size()), state.classes);
    return {w.best, w.best_prefix, w.nodes};
  }

  void fill(ExtremalResult& out, const Witness& by_position) const {
    std::vector<ColorId> by_mask(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) by_mask[order_[i]] = by_position[i];
    out.witness = Coloring(cfg_.n, std::move(by_mask));
  }
  // One color never makes a rainbow copy of a poset with two elements.
  void fill_empty(ExtremalResult& out) const {
    out.witness = Coloring::monochromatic(cfg_.n);
    out.value = 1;
  }

 private:
  struct Walker {
    const ArSearch& s;
    std::vector<ColorId> prefix;    // by position
    std::vector<ColorId> by_mask;   // -1 when unassigned
    std::vector<Mask> assigned;     // sorted
    std::int64_t best = -1;
    std::vector<ColorId> best_prefix;
    std::uint64_t nodes = 0;
    SharedBound* shared = nullptr;
    std::int64_t index = 0;
    const Deadline* deadline = nullptr;
    std::atomic<bool>* timed_out = nullptr;
    bool stop = false;
    std::vector<ColorId> relabel;

    explicit Walker(const ArSearch& search)
        : s(search),
          prefix(search.order_.size(), -1),
          by_mask(search.order_.size(), -1),
          relabel(search.order_.size(), -1) {}

    // A fresh color first, then the existing ones.
    std::vector<ColorId> choices(int classes) const {
      std::vector<ColorId> c{static_cast<ColorId>(classes)};
      for (ColorId i = 0; i < classes; ++i) c.push_back(i);
      return c;
    }

    void place(std::size_t t, ColorId c) {
      const Mask m = s.order_[t];
      prefix[t] = c;
      by_mask[m] = c;
      assigned.insert(std::upper_bound(assigned.begin(), assigned.end(), m), m);
    }

    void unassign(std::size_t t) {
      const Mask m = s.order_[t];
      if (by_mask[m] < 0) return;
      prefix[t] = -1;
      by_mask[m] = -1;
      assigned.erase(std::lower_bound(assigned.begin(), assigned.end(), m));
    }

    // Places the color and reports whether the partial coloring stays
    // rainbow-free and lex-leading. The caller always unassigns.
    bool assign(std::size_t t, ColorId c) {
      place(t, c);
      CopyQuery q{&s.poset_, assigned, s.cfg_.n, s.cfg_.mode, by_mask, s.order_[t]};
      if (search_copy(q)) return false;
      return !s.cfg_.symmetry_reduction || lex_leader(t + 1);
    }

    // False when some symmetry fixing the prefix maps it to a smaller
    // restricted growth string.
    bool lex_leader(std::size_t t) {
      for (int g : s.sym_.by_prefix[t]) {
        const std::vector<int>& pos = s.sym_.pos[g];
        ColorId next = 0;
        int verdict = 0;
        std::vector<ColorId> touched;
        for (std::size_t i = 0; i < t && verdict == 0; ++i) {
          const ColorId raw = prefix[pos[i]];
          if (relabel[raw] < 0) {
            relabel[raw] = next++;
            touched.push_back(raw);
          }
          if (relabel[raw] != prefix[i]) verdict = relabel[raw] < prefix[i] ? -1 : 1;
        }
        for (ColorId r : touched) relabel[r] = -1;
        if (verdict < 0) return false;
      }
      return true;
    }

    void dfs(int t, int classes) {
      if (stop) return;
      ++nodes;
      if (timed_out && timed_out->load(std::memory_order_relaxed)) {
        stop = true;
        return;
      }
      if ((nodes & 15) == 0 && deadline && deadline->expired()) {
        if (timed_out) *timed_out = true;
        stop = true;
        return;
      }
      if (shared && index > shared->finished_index.load(std::memory_order_relaxed)) {
        stop = true;
        return;
      }
      const std::int64_t bound = std::min<std::int64_t>(
          classes + static_cast<std::int64_t>(s.order_.size()) - t, s.upper_);
      if (bound <= best) return;
      if (shared && bound < shared->best.load(std::memory_order_relaxed)) return;
      if (t == static_cast<int>(s.order_.size())) {
        best = classes;
        best_prefix = prefix;
        if (shared) shared->offer(best);
        if (best == s.upper_) {
          stop = true;
          if (shared) shared->finish(index);
        }
        return;
      }
      for (ColorId c : choices(classes)) {
        if (assign(t, c)) dfs(t + 1, std::max(classes, c + 1));
        unassign(t);
        if (stop) return;
      }
    }
  };

  const SearchConfig& cfg_;
  const Poset& poset_;
  std::vector<Mask> order_;
  Symmetries sym_;
  std::int64_t upper_ = 0;
};

void validate_ar(const SearchConfig& cfg) {
  if (cfg.posets.size() != 1) throw BadParams("ar search: exactly one poset expected");
  if (cfg.posets.front().size() < 2) {
    throw BadParams("ar search: the poset needs at least two elements");
  }
  if (cfg.n < 1 || cfg.n > 6) throw TooLarge("ar search: n must be between 1 and 6");
}

void verify_ar(const SearchConfig& cfg, const ExtremalResult& r) {
  const Coloring& c = r.coloring();
  if (c.color_count() != r.value) throw Error("ar witness uses the wrong number of colors");
  if (find_rainbow_copy(cfg.posets.front(), c, cfg.mode)) {
    throw Error("ar witness admits a rainbow copy");
  }
}

ExtremalResult finish_la(const SearchConfig& cfg, ExtremalResult r) {
  verify_la(cfg, r);
  return r;
}

ExtremalResult finish_ar(const SearchConfig& cfg, ExtremalResult r) {
  verify_ar(cfg, r);
  return r;
}

// Families of 2^[n] as bit codes: bit i of the code selects mask i.
SetFamily family_of_code(int n, std::uint64_t code) {
  std::vector<Mask> members;
  for (std::uint64_t c = code; c != 0; c &= c - 1) members.push_back(std::countr_zero(c));
  return SetFamily(n, std::move(members));
}

bool admissible_family(const SearchConfig& cfg, const SetFamily& f) {
  if (cfg.convex_only && !is_convex(f)) return false;
  return is_free(cfg.posets, f, cfg.mode);
}

}  // namespace

Mask permute_mask(Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  for (Mask r = m; r != 0; r &= r - 1) out |= bit_of(perm[std::countr_zero(r)]);
  return out;
}

ExtremalResult la_exact(const SearchConfig& cfg) {
  validate_la(cfg, 6);
  LaSearch search(cfg);
  return finish_la(cfg, run_frontier(search, cfg));
}

ExtremalResult la_exact_serial(const SearchConfig& cfg) {
  validate_la(cfg, 6);
  LaSearch search(cfg);
  return finish_la(cfg, run_serial(search, cfg));
}

ExtremalResult la_exhaustive(const SearchConfig& cfg) {
  validate_la(cfg, 4);
  const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << cfg.n);
  const int threads = std::max(1, cfg.threads);
  std::vector<std::pair<std::int64_t, std::uint64_t>> per_thread(threads, {-1, 0});
  std::uint64_t checked = 0;
#pragma omp parallel num_threads(threads) reduction(+ : checked)
  {
#ifdef _OPENMP
    const int me = omp_get_thread_num();
#else
    const int me = 0;
#endif
    auto& [best, code] = per_thread[me];
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(total); ++c) {
      const int size = std::popcount(static_cast<std::uint64_t>(c));
      if (size <= best) continue;
      ++checked;
      if (admissible_family(cfg, family_of_code(cfg.n, c))) {
        best = size;
        code = c;
      }
    }
  }
  std::pair<std::int64_t, std::uint64_t> winner{-1, 0};
  for (auto [value, code] : per_thread) {
    if (value > winner.first || (value == winner.first && code < winner.second)) winner = {value, code};
  }
  ExtremalResult r;
  r.value = winner.first;
  r.witness = family_of_code(cfg.n, winner.second);
  r.nodes = checked;
  return finish_la(cfg, r);
}

ExtremalResult la_exhaustive_serial(const SearchConfig& cfg) {
  validate_la(cfg, 4);
  const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << cfg.n);
  std::int64_t best = -1;
  std::uint64_t best_code = 0, checked = 0;
  for (std::uint64_t c = 0; c < total; ++c) {
    const int size = std::popcount(c);
    if (size <= best) continue;
    ++checked;
    if (admissible_family(cfg, family_of_code(cfg.n, c))) {
      best = size;
      best_code = c;
    }
  }
  ExtremalResult r;
  r.value = best;
  r.witness = family_of_code(cfg.n, best_code);
  r.nodes = checked;
  return finish_la(cfg, r);
}

ExtremalResult la_convex(const SearchConfig& cfg) {
  validate_la(cfg, 4);
  const int n = cfg.n;
  const std::size_t masks = std::size_t{1} << n;
  const std::uint64_t total = std::uint64_t{1} << masks;
  // Down-sets as codes; up-sets are their complements.
  std::vector<std::uint64_t> down_sets;
  for (std::uint64_t code = 0; code < total; ++code) {
    bool closed = true;
    for (std::size_t m = 0; m < masks && closed; ++m) {
      if (!(code >> m & 1)) continue;
      for (int b = 0; b < n && closed; ++b) {
        if (m >> b & 1) closed = code >> (m & ~(std::size_t{1} << b)) & 1;
      }
    }
    if (closed) down_sets.push_back(code);
  }
  const std::uint64_t all = total - 1;
  std::unordered_set<std::uint64_t> convex;
  for (std::uint64_t d : down_sets) {
    for (std::uint64_t u : down_sets) convex.insert(d & (all & ~u));
  }
  std::vector<std::uint64_t> codes(convex.begin(), convex.end());
  std::sort(codes.begin(), codes.end());
  std::int64_t best = -1;
  std::uint64_t best_code = 0;
  SearchConfig plain = cfg;
  plain.convex_only = false;
  for (std::uint64_t c : codes) {
    const int size = std::popcount(c);
    if (size <= best) continue;
    if (admissible_family(plain, family_of_code(n, c))) {
      best = size;
      best_code = c;
    }
  }
  ExtremalResult r;
  r.value = best;
  r.witness = family_of_code(n, best_code);
  r.nodes = codes.size();
  SearchConfig check = cfg;
  check.convex_only = true;
  return finish_la(check, r);
}

ExtremalResult ar_exact(const SearchConfig& cfg) {
  validate_ar(cfg);
  ArSearch search(cfg);
  return finish_ar(cfg, run_frontier(search, cfg));
}

ExtremalResult ar_exact_serial(const SearchConfig& cfg) {
  validate_ar(cfg);
  ArSearch search(cfg);
  return finish_ar(cfg, run_serial(search, cfg));
}

ExtremalResult ar_by_partitions(int n, const Poset& poset, CopyMode mode) {
  if (n < 1 || n > 3) throw TooLarge("ar_by_partitions: n must be between 1 and 3");
  if (poset.size() < 2) throw BadParams("ar_by_partitions: the poset needs two elements");
  const std::size_t masks = std::size_t{1} << n;
  std::vector<ColorId> rgs(masks, 0);
  std::vector<ColorId> top(masks, 0);  // top[i] = max of rgs[0..i)
  std::int64_t best = -1;
  std::vector<ColorId> best_rgs;
  std::uint64_t visited = 0;
  // Iterates restricted growth strings in lexicographic order.
  while (true) {
    ++visited;
    const Coloring c(n, rgs);
    const bool rainbow = poset.size() <= 6 ? oracle_find_rainbow_copy(poset, c, mode).has_value()
                                           : find_rainbow_copy(poset, c, mode).has_value();
    if (!rainbow && c.color_count() > best) {
      best = c.color_count();
      best_rgs = rgs;
    }
    std::size_t i = masks - 1;
    while (i > 0 && rgs[i] > top[i]) --i;
    if (i == 0) break;
    ++rgs[i];
    for (std::size_t k = i + 1; k < masks; ++k) {
      rgs[k] = 0;
      top[k] = std::max(top[k - 1], rgs[k - 1]);
    }
  }
  ExtremalResult r;
  r.value = best;
  r.witness = Coloring(n, best_rgs);
  r.nodes = visited;
  return r;
}

SandwichReport check_sandwich(int n, const Poset& poset, CopyMode mode, double time_limit,
                              int threads) {
  if (poset.size() < 2) throw BadParams("sandwich: the poset needs at least two elements");
  SandwichReport rep;
  rep.n = n;
  rep.mode = mode;
  auto la = [&](std::vector<Poset> posets, bool convex) {
    SearchConfig cfg{n, std::move(posets), mode, convex, time_limit, threads, true};
    ExtremalResult r = la_exact(cfg);
    rep.exact &= r.exact;
    return r.value;
  };
  const std::vector<Poset> minus = p_minus(poset);
  rep.la = la({poset}, false);
  rep.la_minus = la(minus, false);
  rep.la_con_minus = la(minus, true);
  {
    SearchConfig cfg{n, {poset}, mode, false, time_limit, threads, true};
    ExtremalResult r = ar_exact(cfg);
    rep.exact &= r.exact;
    rep.ar = r.value;
  }
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) rep.violations.push_back(what);
  };
  require(1 + rep.la_con_minus <= rep.ar, "1 + La_con(P-) <= ar");
  require(rep.ar <= rep.la, "ar <= La(P)");
  if (mode == CopyMode::kWeak) {
    require(rep.ar <= 2 + rep.la_minus, "ar <= 2 + La(P-)");
  } else {
    const ElementSet all = poset.all_elements();
    for (int m = 0; m < poset.size(); ++m) {
      const ElementSet others = all & ~(ElementSet{1} << m);
      const bool largest = poset.below(m) == others;
      const bool smallest = poset.above(m) == others;
      if (!largest && !smallest) continue;
      const std::int64_t bound = 1 + la({poset.without(m)}, false);
      rep.extreme_bound = rep.extreme_bound ? std::min(*rep.extreme_bound, bound) : bound;
    }
    if (rep.extreme_bound) require(rep.ar <= *rep.extreme_bound, "ar* <= 1 + La*(P \\ m)");
  }
  return rep;
}

}  // namespace rainbow
