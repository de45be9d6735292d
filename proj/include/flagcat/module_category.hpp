#pragma once

#include <optional>
#include <string>
#include <variant>

#include "flagcat/characters.hpp"

namespace flagcat {

inline constexpr int kDefaultJhBound = 8;      // totals, JH computations
inline constexpr int kDefaultQuiverBound = 10; // max total degree, quiver assembly

enum class Side { U, D };
enum class ObjectKind { Simple, PrincipalProjective, PrincipalInjective,
                        IndecProjective, IndecInjective };

/**
 * Label of an object: the five kinds above, on either the upwards (U) or
 * downwards (D) side. Principal kinds are indexed by a WeightTuple, the rest
 * by a PartitionTuple. D-side objects are never computed on directly: they
 * are held as the weight-reversed U-side object plus the side flag.
 */
struct ObjectLabel {
  Side side = Side::U;
  ObjectKind kind = ObjectKind::Simple;
  std::variant<WeightTuple, PartitionTuple> index;

  bool principal() const {
    return kind == ObjectKind::PrincipalProjective || kind == ObjectKind::PrincipalInjective;
  }
  const WeightTuple& weight_index() const { return std::get<WeightTuple>(index); }
  const PartitionTuple& tuple_index() const { return std::get<PartitionTuple>(index); }
  int n() const;
  // Degree tuple of the object's support anchor.
  WeightTuple anchor() const;

  bool operator==(const ObjectLabel&) const = default;
};

ObjectLabel simple_label(PartitionTuple lam, Side side = Side::U);
ObjectLabel principal_projective(WeightTuple a, Side side = Side::U);
ObjectLabel principal_injective(WeightTuple a, Side side = Side::U);
ObjectLabel indec_projective(PartitionTuple lam, Side side = Side::U);
ObjectLabel indec_injective(PartitionTuple lam, Side side = Side::U);

/// Finitely supported multiplicity map on simple labels; zeros are pruned and
/// negative multiplicities rejected.
class GrothClass {
 public:
  GrothClass() = default;

  void add(const PartitionTuple& lam, const Int& mult);
  Int mult(const PartitionTuple& lam) const;
  const std::map<PartitionTuple, Int>& entries() const { return mult_; }
  Int total_length() const;
  bool empty() const { return mult_.empty(); }
  // True when every multiplicity of `other` is <= the one stored here.
  bool contains(const GrothClass& other) const;
  GrothClass reversed_labels() const;

  GrothClass& operator+=(const GrothClass& other);
  bool operator==(const GrothClass&) const = default;

 private:
  std::map<PartitionTuple, Int> mult_;
};

// dim M_λ(b): ∏ specht_dim(λ^i) when b is the degree tuple of λ, else 0.
Int simple_value_dim(const PartitionTuple& lam, const WeightTuple& b);

// P_a = ⊕_λ P_λ^{dim M_λ} (resp. I_a): multiplicity map λ ↦ ∏ specht_dim(λ^i)
// over the tuples of degree a. Identical for both kinds.
std::map<PartitionTuple, Int> decompose_principal(ObjectKind kind, const WeightTuple& a);

// Jordan–Hölder composition multiplicities of the labelled object, by
// two-sided character inner products on the Hom spaces at each supporting
// weight tuple.
GrothClass jh_multiplicities(const ObjectLabel& obj, int bound = kDefaultJhBound);

// Socle of I_λ: returns λ and checks that every other constituent sits
// strictly above the degree tuple of λ in dominance; throws consistency_error
// if the support window fails.
PartitionTuple socle_of_injective(const PartitionTuple& lam, int bound = kDefaultJhBound);

// [M_λ ⊗ M_μ] = Σ_ν ∏_i c^{ν^i}_{λ^i μ^i} · M_ν (componentwise LR products).
GrothClass day_tensor_simples(const PartitionTuple& lam, const PartitionTuple& mu);
// Bilinear extension to classes.
GrothClass day_tensor(const GrothClass& x, const GrothClass& y);

// P_a ⊗ P_b ≅ P_{a+b}.
ObjectLabel tensor_principal_projectives(const WeightTuple& a, const WeightTuple& b);

// Vector-space duality: swaps the projective and injective kinds, keeps the
// index, flips the side. Simples are fixed up to the side flip.
ObjectLabel dual_vee(const ObjectLabel& obj);

// Weight-reversal equivalence: flips the side and reverses the index tuple
// (componentwise for tuple indices); involution.
ObjectLabel tau_push(const ObjectLabel& obj);

// dim Ext¹(S_λ, S_μ) ∈ {0,1}. With a = degrees of μ and b = degrees of λ,
// nonzero iff a > b is a one-unit-move cover at slot i with a_i - 1 = b_i,
// the components away from {i, i+1} agree, and both slot changes are single
// boxes (λ^i ⊂ μ^i and μ^{i+1} ⊂ λ^{i+1}).
int ext1_dim(const PartitionTuple& lam, const PartitionTuple& mu);

// Which parts of the Ext¹ criterion held, for reporting.
struct Ext1Explain {
  int dim = 0;
  bool cover = false;                 // condition on the degree tuples
  std::optional<int> slot;            // 1-based cover slot i when cover holds
  bool outer_components_match = false;
  bool first_slot_single_box = false;
  bool second_slot_single_box = false;
};
Ext1Explain ext1_explain(const PartitionTuple& lam, const PartitionTuple& mu);

// Independent route via the branching rule of the minimal projective
// presentation: c^{μ^i}_{λ^i,(1)} · c^{λ^{i+1}}_{μ^{i+1},(1)} · ∏ δ_{λ^j μ^j},
// evaluated with lr_coefficient; zero when the cover condition fails.
int ext1_branching_oracle(const PartitionTuple& lam, const PartitionTuple& mu);

struct ExtQuiver {
  int n = 1;
  int max_degree = 0;
  std::vector<PartitionTuple> nodes;            // grouped by total degree
  std::vector<std::pair<int, int>> edges;       // indices into nodes, λ -> μ
};

// Nodes: every partition tuple of total degree <= max_degree, ordered by
// total, then weight tuple (lex decreasing), then componentwise lex; edge
// λ → μ iff ext1_dim(λ, μ) = 1.
ExtQuiver ext_quiver(int n, int max_degree, int bound = kDefaultQuiverBound);

// All width-n partition tuples of the given total, in quiver node order.
std::vector<PartitionTuple> partition_tuples_of_total(int n, int total);

}  // namespace flagcat
