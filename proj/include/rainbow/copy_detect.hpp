#pragma once

// Weak and strong copies of a poset inside a set family, and rainbow copies
// under a coloring.
//
// A weak copy of P is an injection f with p <= q  =>  f(p) subset f(q). A
// strong copy additionally has f(p) subset f(q)  =>  p <= q.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/family.hpp"
#include "rainbow/poset.hpp"

namespace rainbow {

enum class CopyMode { kWeak, kStrong };

std::string to_string(CopyMode mode);
// "weak" or "strong". Throws ParseError.
CopyMode parse_copy_mode(const std::string& text);

struct CopyEmbedding {
  Poset poset;
  std::vector<Mask> images;  // images[p] for element p
  CopyMode mode = CopyMode::kWeak;
};

// Direct definitional check, no search. With a coloring, images must also
// carry pairwise distinct colors.
bool is_valid_embedding(const Poset& poset, std::span<const Mask> images, CopyMode mode,
                        const Coloring* coloring = nullptr);
bool is_valid_embedding(const CopyEmbedding& embedding, const Coloring* coloring = nullptr);

// Low-level query used by the searches. `colors`, when given, is indexed by
// mask; a negative entry means "uncolored" and such masks must not occur in
// `candidates`.
struct CopyQuery {
  const Poset* poset = nullptr;
  std::span<const Mask> candidates;  // increasing
  int ground_size = 0;
  CopyMode mode = CopyMode::kWeak;
  std::span<const ColorId> colors;  // empty: no color constraint
  // When set, some element must map to this mask.
  std::optional<Mask> required;
};

// First witness in the fixed search order: the poset is embedded along a
// linear extension (any required element first), candidates tried in
// increasing mask order. Complete: never misses a copy.
std::optional<std::vector<Mask>> search_copy(const CopyQuery& query);

// Same witness as search_copy; the first level of the tree is split across
// OpenMP threads with a minimum-index reduction.
std::optional<std::vector<Mask>> search_copy_parallel(const CopyQuery& query);

std::optional<CopyEmbedding> find_copy(const Poset& poset, const SetFamily& family, CopyMode mode);
std::optional<CopyEmbedding> find_copy_parallel(const Poset& poset, const SetFamily& family,
                                                CopyMode mode);

bool is_free(const Poset& poset, const SetFamily& family, CopyMode mode);
bool is_free(std::span<const Poset> posets, const SetFamily& family, CopyMode mode);

// Copy of the poset in 2^[n] whose images have pairwise distinct colors.
std::optional<CopyEmbedding> find_rainbow_copy(const Poset& poset, const Coloring& coloring,
                                               CopyMode mode);

// Exhaustive reference: tries every injection. |P| <= 6 and |F| <= 40,
// otherwise TooLarge.
std::optional<CopyEmbedding> oracle_find_copy(const Poset& poset, const SetFamily& family,
                                              CopyMode mode);
// Exhaustive reference over all of 2^[n]; n <= 4 and |P| <= 6.
std::optional<CopyEmbedding> oracle_find_rainbow_copy(const Poset& poset, const Coloring& coloring,
                                                      CopyMode mode);

}  // namespace rainbow
