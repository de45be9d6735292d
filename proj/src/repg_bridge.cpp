#include "flagcat/repg_bridge.hpp"

namespace flagcat {

ObjectLabel to_umod(const RepGLabel& lab) {
  switch (lab.kind) {
    case RepGKind::T: return principal_injective(tau(lab.weight_index()));
    case RepGKind::U: return principal_projective(tau(lab.weight_index()));
    case RepGKind::Tlam: return indec_injective(lab.tuple_index().reversed());
    case RepGKind::Ulam: return indec_projective(lab.tuple_index().reversed());
    case RepGKind::S:
    case RepGKind::Flam: return simple_label(lab.tuple_index().reversed());
    case RepGKind::K:
      throw std::invalid_argument("to_umod: K labels are semisimple, use socle_T");
  }
  throw std::logic_error("to_umod: unreachable");
}

RepGLabel from_umod(const ObjectLabel& obj) {
  if (obj.side != Side::U)
    throw std::invalid_argument("from_umod: expected an upwards-side label");
  switch (obj.kind) {
    case ObjectKind::PrincipalInjective: return RepGLabel{RepGKind::T, tau(obj.weight_index())};
    case ObjectKind::PrincipalProjective: return RepGLabel{RepGKind::U, tau(obj.weight_index())};
    case ObjectKind::IndecInjective: return RepGLabel{RepGKind::Tlam, obj.tuple_index().reversed()};
    case ObjectKind::IndecProjective: return RepGLabel{RepGKind::Ulam, obj.tuple_index().reversed()};
    case ObjectKind::Simple: return RepGLabel{RepGKind::S, obj.tuple_index().reversed()};
  }
  throw std::logic_error("from_umod: unreachable");
}

Int hom_g_dim(const WeightTuple& a, const WeightTuple& b) {
  return count_u_morphisms(a, b);
}

GrothClass socle_T(const WeightTuple& a) {
  GrothClass out;
  for (const auto& lam : partition_tuples_with_degrees(a.entries())) {
    Int m = 1;
    for (int i = 0; i < lam.n(); ++i) m *= specht_dim(lam[i]);
    out.add(lam, m);
  }
  return out;
}

GrothClass jh_T(const WeightTuple& a, int bound) {
  // T_a corresponds to I_{τ(a)}; constituents M_μ pull back to S_{τ(μ)}.
  return jh_multiplicities(principal_injective(tau(a)), bound).reversed_labels();
}

namespace {

Int eval_product(const PartitionTuple& lam, const std::vector<int>& dims) {
  if (static_cast<size_t>(lam.n()) != dims.size())
    throw std::invalid_argument("flag evaluation: widths differ");
  Int r = 1;
  for (int i = 0; i < lam.n(); ++i) {
    r *= schur_dim_finite(lam[i], dims[static_cast<size_t>(i)]);
    if (r == 0) return 0;
  }
  return r;
}

}  // namespace

Int eval_flag(const PartitionTuple& lam, const FlagShape& shape) {
  return eval_product(lam, shape.graded_dims);
}

Int eval_flag_injective(const PartitionTuple& lam, const FlagShape& shape) {
  std::vector<int> suffix(shape.graded_dims.size(), 0);
  int s = 0;
  for (int i = static_cast<int>(shape.graded_dims.size()) - 1; i >= 0; --i) {
    s += shape.graded_dims[static_cast<size_t>(i)];
    suffix[static_cast<size_t>(i)] = s;
  }
  return eval_product(lam, suffix);
}

Int eval_flag_projective(const PartitionTuple& lam, const FlagShape& shape) {
  std::vector<int> prefix(shape.graded_dims.size(), 0);
  int s = 0;
  for (size_t i = 0; i < shape.graded_dims.size(); ++i) {
    s += shape.graded_dims[i];
    prefix[i] = s;
  }
  return eval_product(lam, prefix);
}

}  // namespace flagcat
