#pragma once

// Finite posets on elements 0..size-1, stored as dense strict-order bit rows.
// Sizes up to 64 elements; the posets handled here are small.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

// A set of poset elements, bit p standing for element p.
using ElementSet = std::uint64_t;

using Relation = std::pair<int, int>;

class Poset {
 public:
  static constexpr int kMaxSize = 64;

  Poset() = default;

  // Transitive closure of `relations` (pairs p < q). Throws CycleDetected if
  // the closure is not a strict order, BadParams on out-of-range pairs.
  static Poset from_relations(int size, std::span<const Relation> relations,
                              std::vector<std::string> labels = {});

  int size() const { return size_; }

  bool less(int p, int q) const { return (below_[q] >> p) & 1; }
  bool leq(int p, int q) const { return p == q || less(p, q); }
  bool comparable(int p, int q) const { return leq(p, q) || less(q, p); }

  // Elements strictly below q / strictly above p.
  ElementSet below(int q) const { return below_[q]; }
  ElementSet above(int p) const { return above_[p]; }

  ElementSet all_elements() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int p) const { return labels_[p]; }
  // Element with the given label, if any.
  std::optional<int> find_label(const std::string& label) const;

  // Induced subposet on `keep`, elements renumbered in increasing order.
  // Labels travel with their elements.
  Poset induced(ElementSet keep) const;

  Poset without(int element) const;

  // Same size and same order relation; labels are not compared.
  bool same_order(const Poset& other) const;

  // All strict relations p < q, sorted.
  std::vector<Relation> relations() const;

 private:
  int size_ = 0;
  std::vector<ElementSet> below_;
  std::vector<ElementSet> above_;
  std::vector<std::string> labels_;
};

struct HasseDiagram {
  int size = 0;
  // (p, q) with q covering p, sorted.
  std::vector<Relation> arcs;
};

struct ExtremalElements {
  std::vector<int> minimals;
  std::vector<int> maximals;
};

Poset transitive_closure(std::span<const Relation> relations, int size);

HasseDiagram hasse(const Poset& poset);

// Number of elements in a longest chain; 0 for the empty poset.
int height(const Poset& poset);

// levels[p] = number of elements of a longest chain with top p.
std::vector<int> levels(const Poset& poset);

ExtremalElements extremal_elements(const Poset& poset);

Poset dual(const Poset& poset);

bool is_isomorphic(const Poset& a, const Poset& b);

// Posets obtained by deleting one maximal or minimal element, deduplicated
// up to isomorphism. Throws EmptyPoset when size <= 1.
std::vector<Poset> p_minus(const Poset& poset);

// A_1 = minimal elements, A_j = minimal elements of what remains.
std::vector<std::vector<int>> canonical_decomposition(const Poset& poset);

// Elements sorted so that p < q puts p first (level, then index).
std::vector<int> linear_extension(const Poset& poset);

// Every maximal chain, bottom to top. Exponential; meant for small posets.
std::vector<std::vector<int>> maximal_chains(const Poset& poset);

bool is_chain(const Poset& poset);
bool is_antichain(const Poset& poset);
bool is_connected(const Poset& poset);

// Undirected Hasse diagram is a tree.
bool is_tree_poset(const Poset& poset);

// Height k and every maximal chain has exactly k elements.
bool is_saturated(const Poset& poset, int k);

// The h-saturated tree poset containing `tree` as a strong subposet, built by
// extending maximal elements upward and subdividing level-skipping Hasse arcs.
// Forests are accepted too; each component is treated the same way. Throws
// NotTreePoset when the Hasse diagram has a cycle.
Poset saturate(const Poset& tree);

// Length of a shortest walk through comparable pairs. Throws Disconnected.
int poset_distance(const Poset& poset, int p, int q);

// Peels chain intervals off a k-saturated tree poset down to a chain C_k.
// The first entry is the input. At each step the leaf is the lowest-index
// leaf attaining the poset-distance diameter for which a valid interval
// exists. Throws NotTreePoset or NotSaturated.
std::vector<Poset> chain_interval_peel(const Poset& tree);

// An isomorphism a -> b if one exists.
std::optional<std::vector<int>> find_isomorphism(const Poset& a, const Poset& b);

}  // namespace rainbow
