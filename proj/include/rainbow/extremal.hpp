#pragma once

// Exact extremal numbers for small n:
//   La(n, P)  / La*(n, P)   largest weak / strong P-free family
//   La_con                  the same over convex families
//   ar(n, P)  / ar*(n, P)   most colors of 2^[n] with no rainbow weak / strong P

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/copy_detect.hpp"
#include "rainbow/family.hpp"
#include "rainbow/poset.hpp"

namespace rainbow {

struct SearchConfig {
  int n = 0;
  std::vector<Poset> posets;
  CopyMode mode = CopyMode::kWeak;
  bool convex_only = false;
  double time_limit = 0;  // seconds; 0 means unlimited
  int threads = 1;
  bool symmetry_reduction = true;  // ar search only
};

struct ExtremalResult {
  std::int64_t value = 0;
  std::variant<SetFamily, Coloring> witness;
  std::uint64_t nodes = 0;
  bool exact = true;

  const SetFamily& family() const { return std::get<SetFamily>(witness); }
  const Coloring& coloring() const { return std::get<Coloring>(witness); }
};

// Branch and bound over masks in layer-major order. La-type searches need
// n <= 6; convex_only restricts to convex families.
ExtremalResult la_exact(const SearchConfig& cfg);
ExtremalResult la_exact_serial(const SearchConfig& cfg);

// Every one of the 2^(2^n) families, n <= 4. convex_only is honoured.
ExtremalResult la_exhaustive(const SearchConfig& cfg);
ExtremalResult la_exhaustive_serial(const SearchConfig& cfg);

// Convex families enumerated as intersections of a down-set and an up-set,
// n <= 4.
ExtremalResult la_convex(const SearchConfig& cfg);

// Branch and bound over colorings written as restricted growth strings, with
// lex-leader pruning under the symmetries of the cube. Single poset, n <= 6,
// the poset must have at least two elements.
ExtremalResult ar_exact(const SearchConfig& cfg);
ExtremalResult ar_exact_serial(const SearchConfig& cfg);

// Every set partition of 2^[n], n <= 3. Independent of ar_exact.
ExtremalResult ar_by_partitions(int n, const Poset& poset, CopyMode mode);

struct SandwichReport {
  int n = 0;
  CopyMode mode = CopyMode::kWeak;
  std::int64_t ar = 0;             // ar or ar*
  std::int64_t la = 0;             // La(n, P) in the same mode
  std::int64_t la_minus = 0;       // La(n, P^-) in the same mode
  std::int64_t la_con_minus = 0;   // La_con(n, P^-) in the same mode
  // 1 + La*(n, P \ m) for a largest or smallest element m, strong mode only.
  std::optional<std::int64_t> extreme_bound;
  bool exact = true;
  std::vector<std::string> violations;
  bool holds() const { return violations.empty(); }
};

// Weak:   1 + La_con(P^-) <= ar <= min(La(P), 2 + La(P^-))
// Strong: 1 + La*_con(P^-) <= ar* <= La*(P), and ar* <= 1 + La*(P \ m)
//         whenever P has a largest or smallest element m.
SandwichReport check_sandwich(int n, const Poset& poset, CopyMode mode, double time_limit = 0,
                              int threads = 1);

// Masks of the cube moved by a permutation of [n] (perm[i] is the image of
// element i + 1, 1-based).
Mask permute_mask(Mask m, const std::vector<int>& perm);

}  // namespace rainbow
