#pragma once

#include "flagcat/module_category.hpp"

namespace flagcat {

enum class RepGKind { T, U, K, S, Tlam, Ulam, Flam };

/**
 * Label in the representation/functor models: T_a, U_a, K_a are indexed by a
 * WeightTuple; S_λ, T_λ, U_λ and the flag-functor simples F_λ by a
 * PartitionTuple. Only labels and multiplicity data are represented; the
 * infinite-rank carriers themselves are not.
 */
struct RepGLabel {
  RepGKind kind = RepGKind::T;
  std::variant<WeightTuple, PartitionTuple> index;

  bool weight_indexed() const {
    return kind == RepGKind::T || kind == RepGKind::U || kind == RepGKind::K;
  }
  const WeightTuple& weight_index() const { return std::get<WeightTuple>(index); }
  const PartitionTuple& tuple_index() const { return std::get<PartitionTuple>(index); }

  bool operator==(const RepGLabel&) const = default;
};

/// Graded dimensions d_i = dim V_i/V_{i-1} of a finite flag.
struct FlagShape {
  std::vector<int> graded_dims;
};

// Dictionary into the weighted-set model (indices reversed):
//   T_a ↦ I_{τ(a)},  U_a ↦ P_{τ(a)},  T_λ ↦ I_{τ(λ)},  U_λ ↦ P_{τ(λ)},
//   S_λ, F_λ ↦ M_{τ(λ)}.
// K labels are rejected: K_a is semisimple, not indecomposable (see socle_T).
ObjectLabel to_umod(const RepGLabel& lab);
// Inverse on U-side labels; simples come back with the S kind.
RepGLabel from_umod(const ObjectLabel& obj);

// dim Hom_G(T_a, T_b) = |Hom(a, b)| in the weighted-set category.
Int hom_g_dim(const WeightTuple& a, const WeightTuple& b);

// [K_a] = Σ_{deg λ = a} ∏ specht_dim(λ^i) · S_λ, the socle of T_a.
GrothClass socle_T(const WeightTuple& a);

// Full composition-factor class of T_a, in S-labels.
GrothClass jh_T(const WeightTuple& a, int bound = kDefaultJhBound);

// dim F_λ at the flag with the given graded dimensions: ∏ schur_dim(λ^i, d_i).
Int eval_flag(const PartitionTuple& lam, const FlagShape& shape);
// Injective envelope of F_λ at the flag: suffix sums d_i + … + d_n.
Int eval_flag_injective(const PartitionTuple& lam, const FlagShape& shape);
// Projective cover of F_λ at the flag: prefix sums d_1 + … + d_i.
Int eval_flag_projective(const PartitionTuple& lam, const FlagShape& shape);

}  // namespace flagcat
