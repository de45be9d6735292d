#pragma once

#include <map>
#include <utility>
#include <vector>

#include "flagcat/weighted_sets.hpp"

namespace flagcat {

inline constexpr int kDefaultBimoduleBound = 8;     // totals, bimodule decomposition
inline constexpr int kDefaultCharOracleBound = 5;   // degree, brute-force character oracle

// Conjugacy class of a product of symmetric groups 𝔖_{a_1}×…×𝔖_{a_n}:
// one cycle type per factor.
struct ClassLabel {
  std::vector<Partition> cycles;

  auto operator<=>(const ClassLabel&) const = default;
};

// Order of 𝔖_a = ∏ a_i!.
Int sym_group_order(const WeightTuple& a);

// Size of the conjugacy class with the given cycle type (degree!/centralizer).
Int class_size(const Partition& cycle_type);
Int class_size(const ClassLabel& c);

// All conjugacy classes of 𝔖_a, ordered by the lexicographic product of the
// per-factor lex-decreasing cycle-type lists.
std::vector<ClassLabel> conjugacy_classes(const WeightTuple& a);

// Irreducible character χ^p at the class with the given cycle type, by the
// Murnaghan–Nakayama recursion (memoized). Requires |p| = |cycle_type|.
Int mn_character(const Partition& p, const Partition& cycle_type);

// Independent character oracle for small degree: trace of the permutation
// module on tabloids (counted by literal enumeration), then the unitriangular
// Kostka system solved downwards from the one-row shape.
Int character_oracle(const Partition& p, const Partition& cycle_type,
                     int bound = kDefaultCharOracleBound);

// Character of the outer tensor product ⊠ M_{λ^i} at a product class.
Int product_character(const PartitionTuple& lam, const ClassLabel& c);

// Littlewood–Richardson coefficient c^nu_{lam,mu}: count of column-strict
// skew tableaux of shape nu/lam and content mu whose reverse reading word is
// a lattice word (memoized).
Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

/**
 * Character of the two-sided 𝔖_a × 𝔖_b action on ℂ[Hom(a,b)]:
 * values[i][j] counts the morphisms fixed by (source_classes[i], target_classes[j])
 * acting by pre/post-composition.
 */
struct BiCharacter {
  WeightTuple source, target;
  std::vector<ClassLabel> source_classes, target_classes;
  std::vector<Int> source_class_sizes, target_class_sizes;
  std::vector<std::vector<Int>> values;
};

BiCharacter hom_bimodule_character(const WeightTuple& a, const WeightTuple& b,
                                   int bound = kDefaultBimoduleBound);

// Multiplicity of M_λ ⊠ M_μ in ℂ[Hom(a,b)] under 𝔖_a × 𝔖_b, by the character
// inner product over class pairs. Zero entries are omitted. Throws
// consistency_error if any inner product fails to be a non-negative integer.
std::map<std::pair<PartitionTuple, PartitionTuple>, Int> decompose_bimodule(
    const WeightTuple& a, const WeightTuple& b, int bound = kDefaultBimoduleBound);

}  // namespace flagcat
