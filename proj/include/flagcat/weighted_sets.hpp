#pragma once

#include <compare>
#include <vector>

#include "flagcat/partition.hpp"

namespace flagcat {

inline constexpr int kDefaultMorphismBound = 8;   // total size, exhaustive morphism search
inline constexpr int kDefaultPosetMaterializeBound = 12;

/**
 * Isomorphism class of an [n]-weighted finite set: entry i counts the
 * elements of weight i+1. Also a node of the dominance poset on its total.
 */
class WeightTuple {
 public:
  WeightTuple() = default;
  explicit WeightTuple(std::vector<int> entries);

  int n() const { return static_cast<int>(entries_.size()); }
  int total() const { return total_; }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  // prefix(i) = e_0 + … + e_{i-1}; prefix(0) = 0, prefix(n) = total.
  int prefix(int i) const;
  // Weight (1-based) of the k-th element (0-based) in the weight-major flattening.
  int weight_of_position(int k) const;

  auto operator<=>(const WeightTuple&) const = default;

 private:
  std::vector<int> entries_;
  int total_ = 0;
};

WeightTuple operator+(const WeightTuple& a, const WeightTuple& b);

/**
 * Weight-non-decreasing bijection between weighted sets of equal total.
 * Elements are flattened weight-major, index-minor; `map[k]` is the target
 * position of source position k. Validated on construction.
 */
class UMorphism {
 public:
  UMorphism(WeightTuple source, WeightTuple target, std::vector<int> map);
  static UMorphism identity(const WeightTuple& a);

  const WeightTuple& source() const { return source_; }
  const WeightTuple& target() const { return target_; }
  const std::vector<int>& map() const { return map_; }

  bool operator==(const UMorphism&) const = default;

 private:
  WeightTuple source_, target_;
  std::vector<int> map_;
};

// g ∘ f; requires f.target() == g.source().
UMorphism compose(const UMorphism& g, const UMorphism& f);

// Dominance order: equal totals and every prefix sum of a is >= that of b.
// Throws std::invalid_argument when the tuples live in different widths.
bool dominance_geq(const WeightTuple& a, const WeightTuple& b);
bool dominance_gt(const WeightTuple& a, const WeightTuple& b);

// Tuples covered by a in the dominance poset on its total, lex decreasing.
// Totals <= materialize_bound go through the brute-force poset route; larger
// totals use the one-unit-move characterization directly.
std::vector<WeightTuple> cover_relations_below(const WeightTuple& a,
                                               int materialize_bound = kDefaultPosetMaterializeBound);
// The two routes individually, for cross-checking.
std::vector<WeightTuple> cover_relations_below_direct(const WeightTuple& a);
std::vector<WeightTuple> cover_relations_below_bruteforce(const WeightTuple& a);

// Reverse the entries (weight i ↦ n-i+1); involution.
WeightTuple tau(const WeightTuple& a);

// |Hom(a,b)| by the closed product formula
//   b_1!…b_n! · ∏_{i=1}^{n-1} C((a_1+…+a_i) − (b_1+…+b_{i-1}), b_i),
// which vanishes unless |a| = |b| and a >= b in dominance.
Int count_u_morphisms(const WeightTuple& a, const WeightTuple& b);

// Exhaustive list in lexicographic order on the map vector; the oracle for
// count_u_morphisms. Throws bound_error when |a| > bound.
std::vector<UMorphism> enumerate_u_morphisms(const WeightTuple& a, const WeightTuple& b,
                                             int bound = kDefaultMorphismBound);

// All width-n tuples of the given total, lex decreasing.
std::vector<WeightTuple> weight_tuples_with_total(int n, int total);

}  // namespace flagcat
