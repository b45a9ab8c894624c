#include "rainbow/constructions.hpp"

#include <algorithm>
#include <string>

#include "rainbow/catalog.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

// Raw colors: `special` masks get fresh ids in the given order, everything
// else gets `rest` (an index into special, or -1 for a new shared color).
Coloring color_specials(int n, const std::vector<Mask>& special, int rest) {
  const std::size_t total = std::size_t{1} << n;
  const ColorId shared = rest >= 0 ? rest : static_cast<ColorId>(special.size());
  std::vector<ColorId> raw(total, shared);
  for (std::size_t i = 0; i < special.size(); ++i) raw[special[i]] = static_cast<ColorId>(i);
  return Coloring::normalized(n, raw);
}

void require_disjoint(const std::vector<std::vector<Mask>>& chains, const char* what) {
  std::vector<Mask> all;
  for (const auto& c : chains) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw Error(std::string(what) + ": chains overlap");
  }
}

}  // namespace

Mask WrapInterval::mask(int n) const {
  if (a < 1 || a > n || b < 1 || b > n) throw BadRange("interval endpoint outside [n]");
  Mask m = 0;
  if (a <= b) {
    for (int i = a; i <= b; ++i) m |= bit_of(i);
  } else {
    for (int i = a; i <= n; ++i) m |= bit_of(i);
    for (int i = 1; i <= b; ++i) m |= bit_of(i);
  }
  return m;
}

Coloring lowertriv_coloring(const SetFamily& family) {
  if (!is_convex(family)) throw NotConvex("lowertriv_coloring: family is not convex");
  const std::vector<Mask> members(family.begin(), family.end());
  const int n = family.ground_size();
  if (members.size() == (std::size_t{1} << n)) return Coloring::all_distinct(n);
  return color_specials(n, members, -1);
}

Coloring butterfly_coloring(int n) {
  if (n < 2) throw BadParams("butterfly_coloring: n must be at least 2");
  std::vector<Mask> special = subsets_of_size(n, n / 2);
  for (Mask m : subsets_of_size(n, n / 2 + 1)) special.push_back(m);
  return color_specials(n, special, -1);
}

std::vector<std::vector<Mask>> broom_chains(int n, int s) {
  if (s < 2) throw BadParams("broom_chains: s must be at least 2");
  if (n < s + 2) throw BadParams("broom_chains: needs n >= s + 2");
  std::vector<std::vector<Mask>> chains;
  std::vector<Mask> first;
  for (int i = 1; i <= s - 2; ++i) first.push_back(WrapInterval{1, i}.mask(n));
  const Mask base = s >= 3 ? WrapInterval{1, s - 2}.mask(n) : 0;
  for (int top = s; top <= n; ++top) first.push_back(base | WrapInterval{s, top}.mask(n));
  chains.push_back(first);
  for (int j = 2; j <= s - 1; ++j) {
    std::vector<Mask> chain;
    for (int len = 1; len <= n - 1; ++len) {
      chain.push_back(WrapInterval{j, (j + len - 2) % n + 1}.mask(n));
    }
    chains.push_back(chain);
  }
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (static_cast<int>(chains[i].size()) != n - 1) {
      throw Error("broom_chains: chain " + std::to_string(i + 1) + " has " +
                  std::to_string(chains[i].size()) + " sets, expected n - 1");
    }
  }
  require_disjoint(chains, "broom_chains");
  return chains;
}

Coloring broom_chain_coloring(int n, int s) {
  const Mask full = full_mask(n);
  std::vector<Mask> special{0, full};
  for (const auto& chain : broom_chains(n, s)) {
    for (Mask m : chain) {
      if (m == 0 || m == full) throw Error("broom_chains: chain reaches 0 or [n]");
      special.push_back(m);
    }
  }
  return color_specials(n, special, 1);
}

std::vector<std::vector<Mask>> disjoint_chain_interiors(int n, int k) {
  if (k < 2) throw BadParams("antichain_chain_coloring: k must be at least 2");
  if (n < 2 * k) throw BadParams("antichain_chain_coloring: needs n >= 2k");
  std::vector<std::vector<Mask>> chains;
  for (int t = 1; t <= k - 2; ++t) {
    std::vector<Mask> chain;
    for (int len = 1; len <= n - 1; ++len) {
      chain.push_back(WrapInterval{t, (t + len - 2) % n + 1}.mask(n));
    }
    chains.push_back(chain);
  }
  require_disjoint(chains, "antichain_chain_coloring");
  return chains;
}

Coloring antichain_chain_coloring(int n, int k) {
  std::vector<Mask> special{0, full_mask(n)};
  for (const auto& chain : disjoint_chain_interiors(n, k)) {
    special.insert(special.end(), chain.begin(), chain.end());
  }
  return color_specials(n, special, -1);
}

namespace {

std::optional<UnionExtraction> complete_extraction(const SetFamily& family,
                                                   const std::vector<Mask>& spread, int k) {
  Mask u = 0;
  for (Mask m : spread) u |= m;
  if (u == full_mask(family.ground_size())) return std::nullopt;
  std::vector<Mask> outside;
  for (Mask m : family) {
    if (!is_subset(m, u)) outside.push_back(m);
    if (static_cast<int>(outside.size()) == k + 1) break;
  }
  if (static_cast<int>(outside.size()) < k + 1) return std::nullopt;
  return UnionExtraction{SetFamily(family.ground_size(), spread),
                         SetFamily(family.ground_size(), outside)};
}

// Shrinks the ground M while more than s|M|/2 members fit inside it, each time
// dropping an element missed by the most members inside M.
std::optional<UnionExtraction> greedy_extraction(const SetFamily& family, int j, int s, int k) {
  const int n = family.ground_size();
  Mask ground = full_mask(n);
  std::vector<Mask> inside(family.begin(), family.end());
  std::vector<Mask> best_spread;
  while (true) {
    const int m = popcount(ground);
    const bool dense = 2 * static_cast<std::int64_t>(inside.size()) > static_cast<std::int64_t>(s) * m;
    if (!dense || m - j < 2) break;
    int drop = 0;
    std::size_t most = 0;
    for (int x : elements_of(ground)) {
      const auto missing = static_cast<std::size_t>(
          std::count_if(inside.begin(), inside.end(), [&](Mask f) { return !(f & bit_of(x)); }));
      if (missing > most) {
        most = missing;
        drop = x;
      }
    }
    if (static_cast<int>(most) < s + 1) break;
    ground &= ~bit_of(drop);
    std::erase_if(inside, [&](Mask f) { return !is_subset(f, ground); });
    best_spread.assign(inside.begin(), inside.begin() + (s + 1));
    if (auto e = complete_extraction(family, best_spread, k)) return e;
  }
  return std::nullopt;
}

bool exhaustive_extraction(const SetFamily& family, int s, int k, std::vector<Mask>& pick,
                           std::size_t from, std::optional<UnionExtraction>& out) {
  if (static_cast<int>(pick.size()) == s + 1) {
    out = complete_extraction(family, pick, k);
    return out.has_value();
  }
  for (std::size_t i = from; i < family.size(); ++i) {
    pick.push_back(family[i]);
    if (exhaustive_extraction(family, s, k, pick, i + 1, out)) return true;
    pick.pop_back();
  }
  return false;
}

}  // namespace

std::optional<UnionExtraction> union_extraction(const SetFamily& family, int s, int k) {
  if (s < 1 || k < 0) throw BadParams("union_extraction: needs s >= 1 and k >= 0");
  const int n = family.ground_size();
  if (family.empty()) return std::nullopt;
  const int j = popcount(family[0]);
  for (Mask m : family) {
    if (popcount(m) != j) throw BadParams("union_extraction: family is not on one layer");
  }
  if (j > n - 2) throw BadParams("union_extraction: layer must be at most n - 2");
  if (2 * static_cast<std::int64_t>(family.size()) <= static_cast<std::int64_t>(s) * n + 2 * (k + 1)) {
    return std::nullopt;
  }
  if (auto e = greedy_extraction(family, j, s, k)) return e;
  std::vector<Mask> pick;
  std::optional<UnionExtraction> out;
  exhaustive_extraction(family, s, k, pick, 0, out);
  return out;
}

bool is_valid_extraction(const SetFamily& family, const UnionExtraction& e, int s, int k) {
  if (static_cast<int>(e.spread.size()) != s + 1) return false;
  if (static_cast<int>(e.outside.size()) != k + 1) return false;
  Mask u = 0;
  for (Mask m : e.spread) {
    if (!family.contains(m)) return false;
    u |= m;
  }
  if (popcount(u) >= family.ground_size()) return false;
  for (Mask m : e.outside) {
    if (!family.contains(m) || is_subset(m, u)) return false;
  }
  return true;
}

CertifyReport certify(const Coloring& coloring, const Poset& poset, CopyMode mode) {
  return {coloring.color_count(), find_rainbow_copy(poset, coloring, mode)};
}

int max_rainbow_antichain(const Coloring& coloring) {
  int best = 0;
  for (int k = 1; k <= coloring.color_count(); ++k) {
    if (!find_rainbow_copy(catalog(CatalogId{CatalogKind::kAntichain, {k}}), coloring,
                           CopyMode::kStrong)) {
      break;
    }
    best = k;
  }
  return best;
}

}  // namespace rainbow
