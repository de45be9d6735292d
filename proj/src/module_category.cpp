#include "flagcat/module_category.hpp"

#include <algorithm>
#include <functional>

namespace flagcat {

int ObjectLabel::n() const {
  if (principal()) return weight_index().n();
  return tuple_index().n();
}

WeightTuple ObjectLabel::anchor() const {
  if (principal()) return weight_index();
  return WeightTuple(tuple_index().degrees());
}

ObjectLabel simple_label(PartitionTuple lam, Side side) {
  return ObjectLabel{side, ObjectKind::Simple, std::move(lam)};
}
ObjectLabel principal_projective(WeightTuple a, Side side) {
  return ObjectLabel{side, ObjectKind::PrincipalProjective, std::move(a)};
}
ObjectLabel principal_injective(WeightTuple a, Side side) {
  return ObjectLabel{side, ObjectKind::PrincipalInjective, std::move(a)};
}
ObjectLabel indec_projective(PartitionTuple lam, Side side) {
  return ObjectLabel{side, ObjectKind::IndecProjective, std::move(lam)};
}
ObjectLabel indec_injective(PartitionTuple lam, Side side) {
  return ObjectLabel{side, ObjectKind::IndecInjective, std::move(lam)};
}

void GrothClass::add(const PartitionTuple& lam, const Int& mult) {
  if (mult == 0) return;
  const auto it = mult_.find(lam);
  const Int next = (it == mult_.end() ? Int(0) : it->second) + mult;
  if (next < 0) throw consistency_error("negative multiplicity in Grothendieck class");
  if (next == 0)
    mult_.erase(it);
  else if (it != mult_.end())
    it->second = next;
  else
    mult_.emplace(lam, next);
}

Int GrothClass::mult(const PartitionTuple& lam) const {
  auto it = mult_.find(lam);
  return it == mult_.end() ? Int(0) : it->second;
}

Int GrothClass::total_length() const {
  Int t = 0;
  for (const auto& [lam, m] : mult_) t += m;
  return t;
}

bool GrothClass::contains(const GrothClass& other) const {
  for (const auto& [lam, m] : other.mult_)
    if (mult(lam) < m) return false;
  return true;
}

GrothClass GrothClass::reversed_labels() const {
  GrothClass out;
  for (const auto& [lam, m] : mult_) out.add(lam.reversed(), m);
  return out;
}

GrothClass& GrothClass::operator+=(const GrothClass& other) {
  for (const auto& [lam, m] : other.mult_) add(lam, m);
  return *this;
}

Int simple_value_dim(const PartitionTuple& lam, const WeightTuple& b) {
  if (lam.n() != b.n()) throw std::invalid_argument("simple_value_dim: widths differ");
  if (WeightTuple(lam.degrees()) != b) return 0;
  Int r = 1;
  for (int i = 0; i < lam.n(); ++i) r *= specht_dim(lam[i]);
  return r;
}

std::map<PartitionTuple, Int> decompose_principal(ObjectKind kind, const WeightTuple& a) {
  if (kind != ObjectKind::PrincipalProjective && kind != ObjectKind::PrincipalInjective)
    throw std::invalid_argument("decompose_principal: kind must be a principal kind");
  std::map<PartitionTuple, Int> out;
  for (const auto& lam : partition_tuples_with_degrees(a.entries())) {
    Int m = 1;
    for (int i = 0; i < lam.n(); ++i) m *= specht_dim(lam[i]);
    out.emplace(lam, m);
  }
  return out;
}

namespace {

// JH class of a U-side object, reported in U-side simple labels.
GrothClass jh_u_side(const ObjectLabel& obj, int bound) {
  GrothClass out;
  switch (obj.kind) {
    case ObjectKind::Simple:
      out.add(obj.tuple_index(), 1);
      return out;
    case ObjectKind::IndecProjective: {
      const PartitionTuple& lam = obj.tuple_index();
      const WeightTuple a(lam.degrees());
      if (a.total() > bound) throw bound_error("jh: total exceeds bound");
      for (const auto& b : weight_tuples_with_total(a.n(), a.total())) {
        if (!dominance_geq(a, b)) continue;
        const auto dec = decompose_bimodule(a, b, bound);
        for (const auto& [pair, m] : dec)
          if (pair.first == lam) out.add(pair.second, m);
      }
      return out;
    }
    case ObjectKind::IndecInjective: {
      const PartitionTuple& lam = obj.tuple_index();
      const WeightTuple a(lam.degrees());
      if (a.total() > bound) throw bound_error("jh: total exceeds bound");
      for (const auto& b : weight_tuples_with_total(a.n(), a.total())) {
        if (!dominance_geq(b, a)) continue;
        // Dualizing ℂ[Hom(b,a)] does not change multiplicities over ℂ.
        const auto dec = decompose_bimodule(b, a, bound);
        for (const auto& [pair, m] : dec)
          if (pair.second == lam) out.add(pair.first, m);
      }
      return out;
    }
    case ObjectKind::PrincipalProjective: {
      const WeightTuple& a = obj.weight_index();
      if (a.total() > bound) throw bound_error("jh: total exceeds bound");
      for (const auto& [lam, dim] : decompose_principal(ObjectKind::PrincipalProjective, a)) {
        GrothClass part = jh_u_side(indec_projective(lam), bound);
        for (const auto& [mu, m] : part.entries()) out.add(mu, m * dim);
      }
      return out;
    }
    case ObjectKind::PrincipalInjective: {
      const WeightTuple& a = obj.weight_index();
      if (a.total() > bound) throw bound_error("jh: total exceeds bound");
      for (const auto& [lam, dim] : decompose_principal(ObjectKind::PrincipalInjective, a)) {
        GrothClass part = jh_u_side(indec_injective(lam), bound);
        for (const auto& [mu, m] : part.entries()) out.add(mu, m * dim);
      }
      return out;
    }
  }
  throw std::logic_error("jh: unreachable");
}

}  // namespace

GrothClass jh_multiplicities(const ObjectLabel& obj, int bound) {
  if (obj.side == Side::U) return jh_u_side(obj, bound);
  // D-side objects are the weight-reversed U-side ones; compute there and
  // reverse the constituent labels back.
  return jh_u_side(tau_push(obj), bound).reversed_labels();
}

PartitionTuple socle_of_injective(const PartitionTuple& lam, int bound) {
  const GrothClass cls = jh_multiplicities(indec_injective(lam), bound);
  const WeightTuple a(lam.degrees());
  if (cls.mult(lam) != 1)
    throw consistency_error("socle_of_injective: socle multiplicity differs from 1");
  for (const auto& [mu, m] : cls.entries()) {
    if (mu == lam) continue;
    if (!dominance_gt(WeightTuple(mu.degrees()), a))
      throw consistency_error("socle_of_injective: constituent not strictly above the socle");
  }
  return lam;
}

GrothClass day_tensor_simples(const PartitionTuple& lam, const PartitionTuple& mu) {
  if (lam.n() != mu.n()) throw std::invalid_argument("day_tensor_simples: widths differ");
  // Slot-wise LR supports, then all products.
  std::vector<std::vector<std::pair<Partition, Int>>> slots;
  for (int i = 0; i < lam.n(); ++i) {
    std::vector<std::pair<Partition, Int>> slot;
    for (const auto& nu : partitions_of(lam[i].size() + mu[i].size())) {
      Int c = lr_coefficient(lam[i], mu[i], nu);
      if (c != 0) slot.emplace_back(nu, c);
    }
    slots.push_back(std::move(slot));
  }
  GrothClass out;
  std::vector<Partition> acc(static_cast<size_t>(lam.n()));
  std::function<void(int, Int)> rec = [&](int i, Int coeff) {
    if (i == lam.n()) {
      out.add(PartitionTuple(acc), coeff);
      return;
    }
    for (const auto& [nu, c] : slots[static_cast<size_t>(i)]) {
      acc[static_cast<size_t>(i)] = nu;
      rec(i + 1, coeff * c);
    }
  };
  rec(0, 1);
  return out;
}

GrothClass day_tensor(const GrothClass& x, const GrothClass& y) {
  GrothClass out;
  for (const auto& [lam, ml] : x.entries())
    for (const auto& [mu, mm] : y.entries()) {
      GrothClass prod = day_tensor_simples(lam, mu);
      for (const auto& [nu, c] : prod.entries()) out.add(nu, c * ml * mm);
    }
  return out;
}

ObjectLabel tensor_principal_projectives(const WeightTuple& a, const WeightTuple& b) {
  return principal_projective(a + b);
}

namespace {

ObjectKind swap_proj_inj(ObjectKind k) {
  switch (k) {
    case ObjectKind::PrincipalProjective: return ObjectKind::PrincipalInjective;
    case ObjectKind::PrincipalInjective: return ObjectKind::PrincipalProjective;
    case ObjectKind::IndecProjective: return ObjectKind::IndecInjective;
    case ObjectKind::IndecInjective: return ObjectKind::IndecProjective;
    case ObjectKind::Simple: return ObjectKind::Simple;
  }
  throw std::logic_error("swap_proj_inj: unreachable");
}

}  // namespace

ObjectLabel dual_vee(const ObjectLabel& obj) {
  ObjectLabel out = obj;
  out.side = obj.side == Side::U ? Side::D : Side::U;
  out.kind = swap_proj_inj(obj.kind);
  return out;
}

ObjectLabel tau_push(const ObjectLabel& obj) {
  ObjectLabel out = obj;
  out.side = obj.side == Side::U ? Side::D : Side::U;
  if (obj.principal())
    out.index = tau(obj.weight_index());
  else
    out.index = obj.tuple_index().reversed();
  return out;
}

namespace {

// The degree-tuple cover condition of the Ext¹ criterion: a = deg(mu) covers
// b = deg(lam) by moving one unit from slot i+1 down to slot i. Returns the
// 0-based slot, or -1.
int ext1_cover_slot(const PartitionTuple& lam, const PartitionTuple& mu) {
  if (lam.n() != mu.n()) throw std::invalid_argument("ext1: widths differ");
  const std::vector<int> a = mu.degrees();
  const std::vector<int> b = lam.degrees();
  std::vector<int> diff;
  for (int j = 0; j < static_cast<int>(a.size()); ++j)
    if (a[static_cast<size_t>(j)] != b[static_cast<size_t>(j)]) diff.push_back(j);
  if (diff.size() != 2 || diff[1] != diff[0] + 1) return -1;
  const int i = diff[0];
  if (a[static_cast<size_t>(i)] != b[static_cast<size_t>(i)] + 1) return -1;
  if (a[static_cast<size_t>(i + 1)] != b[static_cast<size_t>(i + 1)] - 1) return -1;
  return i;
}

}  // namespace

Ext1Explain ext1_explain(const PartitionTuple& lam, const PartitionTuple& mu) {
  Ext1Explain e;
  const int i = ext1_cover_slot(lam, mu);
  if (i < 0) return e;
  e.cover = true;
  e.slot = i + 1;
  e.outer_components_match = true;
  for (int j = 0; j < lam.n(); ++j) {
    if (j == i || j == i + 1) continue;
    if (lam[j] != mu[j]) e.outer_components_match = false;
  }
  e.first_slot_single_box = is_hs1(lam[i], mu[i]);
  e.second_slot_single_box = is_hs1(mu[i + 1], lam[i + 1]);
  if (e.outer_components_match && e.first_slot_single_box && e.second_slot_single_box) e.dim = 1;
  return e;
}

int ext1_dim(const PartitionTuple& lam, const PartitionTuple& mu) {
  return ext1_explain(lam, mu).dim;
}

int ext1_branching_oracle(const PartitionTuple& lam, const PartitionTuple& mu) {
  const int i = ext1_cover_slot(lam, mu);
  if (i < 0) return 0;
  const Partition box({1});
  Int m = lr_coefficient(lam[i], box, mu[i]) * lr_coefficient(mu[i + 1], box, lam[i + 1]);
  for (int j = 0; j < lam.n() && m != 0; ++j) {
    if (j == i || j == i + 1) continue;
    if (lam[j] != mu[j]) m = 0;
  }
  if (m < 0 || m > 1) throw consistency_error("ext1 oracle multiplicity outside {0,1}");
  return static_cast<int>(m);
}

std::vector<PartitionTuple> partition_tuples_of_total(int n, int total) {
  std::vector<PartitionTuple> out;
  for (const auto& a : weight_tuples_with_total(n, total))
    for (const auto& lam : partition_tuples_with_degrees(a.entries())) out.push_back(lam);
  return out;
}

ExtQuiver ext_quiver(int n, int max_degree, int bound) {
  if (n < 1) throw std::invalid_argument("ext_quiver: n must be >= 1");
  if (max_degree < 0 || max_degree > bound)
    throw bound_error("ext_quiver: max degree exceeds bound " + std::to_string(bound));
  ExtQuiver q;
  q.n = n;
  q.max_degree = max_degree;
  for (int t = 0; t <= max_degree; ++t)
    for (auto& lam : partition_tuples_of_total(n, t)) q.nodes.push_back(std::move(lam));
  // Ext¹ preserves the total degree, so only same-total pairs can carry edges.
  size_t lo = 0;
  for (int t = 0; t <= max_degree; ++t) {
    size_t hi = lo;
    while (hi < q.nodes.size() && q.nodes[hi].total_degree() == t) ++hi;
    for (size_t i = lo; i < hi; ++i)
      for (size_t j = lo; j < hi; ++j)
        if (i != j && ext1_dim(q.nodes[i], q.nodes[j]) == 1)
          q.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    lo = hi;
  }
  return q;
}

}  // namespace flagcat
