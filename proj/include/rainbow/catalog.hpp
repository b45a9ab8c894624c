#pragma once

// Named posets: chains, antichains, forks, brooms, the diamond, crowns, paths,
// spiders, Boolean posets and the X poset.

#include <string>
#include <vector>

#include "rainbow/poset.hpp"

namespace rainbow {

enum class CatalogKind {
  kChain,      // C_k
  kAntichain,  // A_k
  kFork,       // a < b_1, ..., b_s
  kBroom,      // c_1, ..., c_s < d
  kDiamond,    // a < b, c < d
  kButterfly,  // O_4
  kCrown,      // O_2k: a_i, a_{i+1} < b_i cyclically
  kPathPoset,  // P_{2k-1}: a_1..a_k, b_1..b_{k-1}, a_i, a_{i+1} < b_i
  kSpider,     // S^{k,l}: height 2, l legs of length k, leaves maximal
  kBoolean,    // B_d
  kXPoset,     // a_1, a_2 < c < b_1, b_2
};

struct CatalogId {
  CatalogKind kind;
  std::vector<int> params;

  std::string to_string() const;
};

// Parses "crown:3", "broom:2", "spider:2x5", "diamond", "x". Throws ParseError.
CatalogId parse_catalog_id(const std::string& text);

bool looks_like_catalog_id(const std::string& text);

// Throws BadParams for out-of-range parameters.
Poset catalog(const CatalogId& id);
Poset catalog(const std::string& text);

// Every catalog poset with at most `max_size` elements, one entry per id
// (isomorphic duplicates such as butterfly / crown:2 included).
std::vector<CatalogId> catalog_ids_up_to(int max_size);

}  // namespace rainbow
