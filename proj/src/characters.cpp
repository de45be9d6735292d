#include "flagcat/characters.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace flagcat {

Int sym_group_order(const WeightTuple& a) {
  Int r = 1;
  for (int i = 0; i < a.n(); ++i) r *= factorial(a[i]);
  return r;
}

Int class_size(const Partition& cycle_type) {
  // centralizer order = ∏_j j^{m_j} m_j! over part multiplicities m_j
  Int centralizer = 1;
  int run = 1;
  const auto& parts = cycle_type.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    centralizer *= parts[i];
    if (i + 1 < parts.size() && parts[i + 1] == parts[i])
      run += 1;
    else {
      centralizer *= factorial(run);
      run = 1;
    }
  }
  return exact_div(factorial(cycle_type.size()), centralizer, "class size");
}

Int class_size(const ClassLabel& c) {
  Int r = 1;
  for (const auto& p : c.cycles) r *= class_size(p);
  return r;
}

std::vector<ClassLabel> conjugacy_classes(const WeightTuple& a) {
  std::vector<std::vector<Partition>> per_slot;
  per_slot.reserve(static_cast<size_t>(a.n()));
  for (int i = 0; i < a.n(); ++i) per_slot.push_back(partitions_of(a[i]));
  std::vector<ClassLabel> out;
  std::vector<Partition> acc;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == per_slot.size()) {
      out.push_back(ClassLabel{acc});
      return;
    }
    for (const auto& p : per_slot[i]) {
      acc.push_back(p);
      rec(i + 1);
      acc.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

// First-column hook lengths (beta numbers) of a partition, strictly decreasing.
std::vector<int> beta_set(const Partition& p) {
  const int L = p.rows();
  std::vector<int> b(static_cast<size_t>(L));
  for (int i = 0; i < L; ++i) b[static_cast<size_t>(i)] = p.part(i) + (L - 1 - i);
  return b;
}

Partition partition_from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  const int L = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < L; ++i) {
    int part = b[static_cast<size_t>(i)] - (L - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Int mn_recurse(const Partition& p, const std::vector<int>& rho, size_t idx);

std::map<std::pair<Partition, std::vector<int>>, Int> g_mn_cache;
std::mutex g_mn_mutex;

Int mn_recurse(const Partition& p, const std::vector<int>& rho, size_t idx) {
  if (idx == rho.size()) return p.empty() ? 1 : 0;
  std::vector<int> rest(rho.begin() + static_cast<long>(idx), rho.end());
  {
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    auto it = g_mn_cache.find({p, rest});
    if (it != g_mn_cache.end()) return it->second;
  }
  const int r = rho[idx];
  const std::vector<int> beta = beta_set(p);
  Int total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    bool clash = false;
    int height = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
      if (beta[j] == target) clash = true;
      if (beta[j] > target && beta[j] < beta[i]) height += 1;
    }
    if (clash) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    Int term = mn_recurse(partition_from_beta(std::move(nb)), rho, idx + 1);
    total += (height % 2 == 0) ? term : -term;
  }
  {
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    g_mn_cache.emplace(std::make_pair(p, std::move(rest)), total);
  }
  return total;
}

}  // namespace

Int mn_character(const Partition& p, const Partition& cycle_type) {
  if (p.size() != cycle_type.size())
    throw std::invalid_argument("mn_character: shape and cycle type have different degrees");
  return mn_recurse(p, cycle_type.parts(), 0);
}

namespace {

// Canonical permutation with the given cycle type: consecutive cycles
// (0 1 … r1-1)(r1 …)…, as a map vector on 0..m-1.
std::vector<int> canonical_permutation(const Partition& cycle_type) {
  std::vector<int> perm(static_cast<size_t>(cycle_type.size()));
  int start = 0;
  for (int r : cycle_type.parts()) {
    for (int k = 0; k < r; ++k)
      perm[static_cast<size_t>(start + k)] = start + (k + 1) % r;
    start += r;
  }
  return perm;
}

// Block permutation of 𝔖_a acting on the flattened positions, with the given
// per-factor cycle types.
std::vector<int> block_permutation(const WeightTuple& a, const ClassLabel& c) {
  std::vector<int> perm(static_cast<size_t>(a.total()));
  int offset = 0;
  for (int i = 0; i < a.n(); ++i) {
    std::vector<int> local = canonical_permutation(c.cycles[static_cast<size_t>(i)]);
    for (int k = 0; k < a[i]; ++k)
      perm[static_cast<size_t>(offset + k)] = offset + local[static_cast<size_t>(k)];
    offset += a[i];
  }
  return perm;
}

// Tabloids of content mu: functions {0..m-1} -> blocks with |f^{-1}(i)| = mu_i,
// enumerated literally. Trace of a permutation = number of fixed tabloids.
Int permutation_module_trace(const Partition& mu, const std::vector<int>& perm) {
  const int m = mu.size();
  std::vector<int> assign(static_cast<size_t>(m), -1);
  std::vector<int> room(mu.parts().begin(), mu.parts().end());
  Int fixed = 0;
  std::function<void(int)> rec = [&](int k) {
    if (k == m) {
      for (int x = 0; x < m; ++x)
        if (assign[static_cast<size_t>(x)] != assign[static_cast<size_t>(perm[static_cast<size_t>(x)])]) return;
      ++fixed;
      return;
    }
    for (size_t blk = 0; blk < room.size(); ++blk) {
      if (room[blk] == 0) continue;
      room[blk] -= 1;
      assign[static_cast<size_t>(k)] = static_cast<int>(blk);
      rec(k + 1);
      room[blk] += 1;
    }
    assign[static_cast<size_t>(k)] = -1;
  };
  rec(0);
  return fixed;
}

}  // namespace

Int character_oracle(const Partition& p, const Partition& cycle_type, int bound) {
  if (p.size() != cycle_type.size())
    throw std::invalid_argument("character_oracle: degree mismatch");
  const int m = p.size();
  if (m > bound)
    throw bound_error("character_oracle: degree " + std::to_string(m) + " exceeds bound " +
                      std::to_string(bound));
  // psi^mu = sum_{lam >= mu} K_{lam,mu} chi^lam with K_{mu,mu} = 1; solve top-down.
  // Lex order on partitions of m refines dominance, so process lex-descending.
  std::vector<Partition> shapes = partitions_of(m);  // lex decreasing
  const std::vector<int> perm = canonical_permutation(cycle_type);
  std::map<Partition, Int> chi;
  for (const auto& mu : shapes) {
    Int psi = permutation_module_trace(mu, perm);
    for (const auto& lam : shapes) {
      if (lam == mu) break;  // only shapes lex-above mu contribute
      Int kostka = count_ssyt_content(lam, mu.parts(), m);
      if (kostka != 0) psi -= kostka * chi[lam];
    }
    chi[mu] = psi;
  }
  return chi[p];
}

Int product_character(const PartitionTuple& lam, const ClassLabel& c) {
  if (static_cast<size_t>(lam.n()) != c.cycles.size())
    throw std::invalid_argument("product_character: width mismatch");
  Int r = 1;
  for (int i = 0; i < lam.n(); ++i) {
    r *= mn_character(lam[i], c.cycles[static_cast<size_t>(i)]);
    if (r == 0) return 0;
  }
  return r;
}

namespace {

std::map<std::tuple<Partition, Partition, Partition>, Int> g_lr_cache;
std::mutex g_lr_mutex;

Int lr_count(const Partition& lam, const Partition& mu, const Partition& nu) {
  // Fill nu/lam in reverse reading order (each row right-to-left, top-down)
  // with values 1..len(mu); rows weakly increase, columns strictly increase,
  // prefix counts keep count[v] <= count[v-1] (lattice word) and respect mu.
  const int kmax = mu.rows();
  std::vector<std::vector<int>> tab(static_cast<size_t>(nu.rows()));
  for (int i = 0; i < nu.rows(); ++i)
    tab[static_cast<size_t>(i)].assign(static_cast<size_t>(nu.part(i)), 0);
  std::vector<int> used(static_cast<size_t>(kmax) + 1, 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < nu.rows(); ++r)
    for (int c = nu.part(r) - 1; c >= lam.part(r); --c) cells.emplace_back(r, c);
  Int count = 0;
  std::function<void(size_t)> rec = [&](size_t ci) {
    if (ci == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[ci];
    for (int v = 1; v <= kmax; ++v) {
      if (used[static_cast<size_t>(v)] == mu.part(v - 1)) continue;
      if (v > 1 && used[static_cast<size_t>(v)] >= used[static_cast<size_t>(v - 1)]) continue;
      if (c + 1 < nu.part(r) && v > tab[static_cast<size_t>(r)][static_cast<size_t>(c + 1)]) continue;
      if (r > 0 && c < nu.part(r - 1) && c >= lam.part(r - 1) &&
          v <= tab[static_cast<size_t>(r - 1)][static_cast<size_t>(c)])
        continue;
      used[static_cast<size_t>(v)] += 1;
      tab[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      rec(ci + 1);
      used[static_cast<size_t>(v)] -= 1;
    }
  };
  rec(0);
  return count;
}

}  // namespace

Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (nu.size() != lam.size() + mu.size()) return 0;
  if (!nu.contains(lam)) return 0;
  if (mu.empty()) return nu == lam ? 1 : 0;
  {
    std::lock_guard<std::mutex> lock(g_lr_mutex);
    auto it = g_lr_cache.find({lam, mu, nu});
    if (it != g_lr_cache.end()) return it->second;
  }
  Int c = lr_count(lam, mu, nu);
  {
    std::lock_guard<std::mutex> lock(g_lr_mutex);
    g_lr_cache.emplace(std::make_tuple(lam, mu, nu), c);
  }
  return c;
}

BiCharacter hom_bimodule_character(const WeightTuple& a, const WeightTuple& b, int bound) {
  if (a.n() != b.n()) throw std::invalid_argument("hom_bimodule_character: widths differ");
  if (a.total() > bound || b.total() > bound)
    throw bound_error("hom_bimodule_character: total exceeds bound " + std::to_string(bound));
  BiCharacter bc;
  bc.source = a;
  bc.target = b;
  bc.source_classes = conjugacy_classes(a);
  bc.target_classes = conjugacy_classes(b);
  for (const auto& c : bc.source_classes) bc.source_class_sizes.push_back(class_size(c));
  for (const auto& c : bc.target_classes) bc.target_class_sizes.push_back(class_size(c));

  std::vector<UMorphism> homs;
  if (a.total() == b.total()) homs = enumerate_u_morphisms(a, b, bound);

  bc.values.assign(bc.source_classes.size(),
                   std::vector<Int>(bc.target_classes.size(), Int(0)));
  for (size_t i = 0; i < bc.source_classes.size(); ++i) {
    const std::vector<int> sigma = block_permutation(a, bc.source_classes[i]);
    for (size_t j = 0; j < bc.target_classes.size(); ++j) {
      const std::vector<int> tau_p = block_permutation(b, bc.target_classes[j]);
      // fixed: tau ∘ phi ∘ sigma^{-1} = phi, i.e. tau[phi[k]] == phi[sigma[k]] for all k
      Int fixed = 0;
      for (const auto& phi : homs) {
        const auto& m = phi.map();
        bool ok = true;
        for (size_t k = 0; k < m.size(); ++k) {
          if (tau_p[static_cast<size_t>(m[k])] != m[static_cast<size_t>(sigma[k])]) {
            ok = false;
            break;
          }
        }
        if (ok) ++fixed;
      }
      bc.values[i][j] = fixed;
    }
  }
  return bc;
}

namespace {

std::map<std::pair<WeightTuple, WeightTuple>,
         std::map<std::pair<PartitionTuple, PartitionTuple>, Int>>
    g_bimodule_cache;
std::mutex g_bimodule_mutex;

}  // namespace

std::map<std::pair<PartitionTuple, PartitionTuple>, Int> decompose_bimodule(
    const WeightTuple& a, const WeightTuple& b, int bound) {
  {
    std::lock_guard<std::mutex> lock(g_bimodule_mutex);
    auto it = g_bimodule_cache.find({a, b});
    if (it != g_bimodule_cache.end()) return it->second;
  }
  const BiCharacter bc = hom_bimodule_character(a, b, bound);
  const Int group_order = sym_group_order(a) * sym_group_order(b);
  std::map<std::pair<PartitionTuple, PartitionTuple>, Int> out;

  const auto lams = partition_tuples_with_degrees(a.entries());
  const auto mus = partition_tuples_with_degrees(b.entries());
  // Per-class character tables, computed once per label.
  std::vector<std::vector<Int>> chi_a(lams.size()), chi_b(mus.size());
  for (size_t l = 0; l < lams.size(); ++l)
    for (const auto& c : bc.source_classes) chi_a[l].push_back(product_character(lams[l], c));
  for (size_t m = 0; m < mus.size(); ++m)
    for (const auto& c : bc.target_classes) chi_b[m].push_back(product_character(mus[m], c));

  for (size_t l = 0; l < lams.size(); ++l) {
    for (size_t m = 0; m < mus.size(); ++m) {
      Int sum = 0;
      for (size_t i = 0; i < bc.source_classes.size(); ++i) {
        if (chi_a[l][i] == 0) continue;
        for (size_t j = 0; j < bc.target_classes.size(); ++j) {
          if (bc.values[i][j] == 0 || chi_b[m][j] == 0) continue;
          sum += bc.source_class_sizes[i] * bc.target_class_sizes[j] * bc.values[i][j] *
                 chi_a[l][i] * chi_b[m][j];
        }
      }
      if (sum == 0) continue;
      const Int mult = exact_div(sum, group_order, "bimodule inner product");
      if (mult < 0) throw consistency_error("bimodule multiplicity is negative");
      out.emplace(std::make_pair(lams[l], mus[m]), mult);
    }
  }
  {
    std::lock_guard<std::mutex> lock(g_bimodule_mutex);
    g_bimodule_cache.emplace(std::make_pair(a, b), out);
  }
  return out;
}

}  // namespace flagcat
