#include "flagcat/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace flagcat {

namespace {

std::string fail(const std::string& counterexample) { return counterexample; }

std::string sweep_stat(long long cases) {
  return std::to_string(cases) + " cases";
}

// All (n, total) sweeps iterate n = 1..max_n.
template <typename F>
CheckResult sweep_pairs_same_total(const char* name, int max_n, int max_total, F&& body) {
  long long cases = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int t = 0; t <= max_total; ++t) {
      const auto tuples = weight_tuples_with_total(n, t);
      for (const auto& a : tuples)
        for (const auto& b : tuples) {
          ++cases;
          if (auto bad = body(a, b); !bad.empty())
            return {name, false, fail(bad)};
        }
    }
  }
  return {name, true, sweep_stat(cases)};
}

}  // namespace

CheckResult check_hom_formula(const VerifyOptions& opts) {
  return sweep_pairs_same_total(
      "hom-count-formula", opts.max_n, opts.hom_max_total,
      [&](const WeightTuple& a, const WeightTuple& b) -> std::string {
        const Int formula = count_u_morphisms(a, b);
        const auto listed = enumerate_u_morphisms(a, b, std::max(opts.hom_max_total, 8));
        const Int brute = static_cast<long long>(listed.size());
        if (formula != brute)
          return "formula " + formula.str() + " != brute force " + brute.str() + " at a=" +
                 weight_tuple_to_string(a) + " b=" + weight_tuple_to_string(b);
        const bool nonzero = brute != 0;
        if (nonzero != dominance_geq(a, b))
          return "nonvanishing disagrees with dominance at a=" + weight_tuple_to_string(a) +
                 " b=" + weight_tuple_to_string(b);
        return {};
      });
}

CheckResult check_hom_divisibility(const VerifyOptions& opts) {
  return sweep_pairs_same_total(
      "hom-automorphism-divisibility", opts.max_n, opts.hom_max_total,
      [&](const WeightTuple& a, const WeightTuple& b) -> std::string {
        const Int h = count_u_morphisms(a, b);
        if (h == 0) return {};
        if (h % sym_group_order(a) != 0 || h % sym_group_order(b) != 0)
          return "|Hom| = " + h.str() + " not divisible by both automorphism orders at a=" +
                 weight_tuple_to_string(a) + " b=" + weight_tuple_to_string(b);
        return {};
      });
}

// Every strictly-decreasing morphism factors through a cover of its source;
// this is what reduces the kernel intersection defining K_a to covers.
CheckResult check_hom_factorization(const VerifyOptions& opts) {
  const int max_total = std::min(opts.hom_max_total, 4);
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    for (int t = 0; t <= max_total; ++t) {
      const auto tuples = weight_tuples_with_total(n, t);
      for (const auto& a : tuples) {
        const auto covers = cover_relations_below_direct(a);
        for (const auto& c : tuples) {
          if (!dominance_gt(a, c)) continue;
          for (const auto& f : enumerate_u_morphisms(a, c)) {
            ++cases;
            bool found = false;
            for (const auto& b : covers) {
              if (!dominance_geq(b, c)) continue;
              for (const auto& g : enumerate_u_morphisms(a, b)) {
                for (const auto& h : enumerate_u_morphisms(b, c))
                  if (compose(h, g) == f) {
                    found = true;
                    break;
                  }
                if (found) break;
              }
              if (found) break;
            }
            if (!found)
              return {"hom-factorization", false,
                      fail("morphism " + weight_tuple_to_string(a) + " -> " +
                           weight_tuple_to_string(c) + " factors through no cover")};
          }
        }
      }
    }
  }
  return {"hom-factorization", true, sweep_stat(cases)};
}

CheckResult check_dominance_covers(const VerifyOptions& opts) {
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    for (int t = 0; t <= opts.hom_max_total; ++t) {
      for (const auto& a : weight_tuples_with_total(n, t)) {
        ++cases;
        if (cover_relations_below_direct(a) != cover_relations_below_bruteforce(a))
          return {"dominance-covers", false,
                  fail("cover routes disagree at " + weight_tuple_to_string(a))};
        for (const auto& b : weight_tuples_with_total(n, t)) {
          if (dominance_geq(a, b) != dominance_geq(tau(b), tau(a)))
            return {"dominance-covers", false,
                    fail("tau fails to reverse dominance at a=" + weight_tuple_to_string(a) +
                         " b=" + weight_tuple_to_string(b))};
        }
      }
    }
  }
  return {"dominance-covers", true, sweep_stat(cases)};
}

namespace {

// dim (P_a ⊗ P_b)(u) per the convolution formula: split the set u into
// complementary subsets and count morphisms into each part.
Int convolution_dim(const WeightTuple& a, const WeightTuple& b, const WeightTuple& u) {
  std::vector<int> s(static_cast<size_t>(u.n()), 0);
  Int total = 0;
  std::function<void(int, Int)> rec = [&](int i, Int ways) {
    if (i == u.n()) {
      WeightTuple sw{std::vector<int>(s)};
      std::vector<int> rest(static_cast<size_t>(u.n()));
      for (int j = 0; j < u.n(); ++j) rest[static_cast<size_t>(j)] = u[j] - s[static_cast<size_t>(j)];
      total += ways * count_u_morphisms(a, sw) * count_u_morphisms(b, WeightTuple(std::move(rest)));
      return;
    }
    for (int v = 0; v <= u[i]; ++v) {
      s[static_cast<size_t>(i)] = v;
      rec(i + 1, ways * binomial(u[i], v));
    }
  };
  rec(0, 1);
  return total;
}

}  // namespace

CheckResult check_tensor_principal(const VerifyOptions& opts) {
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    for (int ta = 0; ta <= opts.tensor_max_total; ++ta) {
      for (int tb = 0; ta + tb <= opts.tensor_max_total; ++tb) {
        for (const auto& a : weight_tuples_with_total(n, ta)) {
          for (const auto& b : weight_tuples_with_total(n, tb)) {
            const WeightTuple sum = a + b;
            for (const auto& u : weight_tuples_with_total(n, ta + tb)) {
              ++cases;
              if (convolution_dim(a, b, u) != count_u_morphisms(sum, u))
                return {"tensor-principal-dimension", false,
                        fail("convolution disagrees with Hom count at a=" +
                             weight_tuple_to_string(a) + " b=" + weight_tuple_to_string(b) +
                             " u=" + weight_tuple_to_string(u))};
            }
          }
        }
      }
    }
  }
  return {"tensor-principal-dimension", true, sweep_stat(cases)};
}

CheckResult check_day_tensor_laws(const VerifyOptions& opts) {
  const int n_max = std::min(opts.max_n, 2);
  long long cases = 0;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<PartitionTuple> tuples;
    for (int t = 0; t <= 3; ++t)
      for (const auto& lam : partition_tuples_of_total(n, t)) tuples.push_back(lam);
    const PartitionTuple unit =
        PartitionTuple(std::vector<Partition>(static_cast<size_t>(n), Partition{}));
    for (const auto& lam : tuples) {
      GrothClass with_unit = day_tensor_simples(lam, unit);
      GrothClass just_lam;
      just_lam.add(lam, 1);
      if (with_unit != just_lam)
        return {"day-tensor-laws", false,
                fail("unit law fails at " + partition_tuple_display(lam))};
      for (const auto& mu : tuples) {
        ++cases;
        const GrothClass lm = day_tensor_simples(lam, mu);
        if (lm != day_tensor_simples(mu, lam))
          return {"day-tensor-laws", false,
                  fail("commutativity fails at " + partition_tuple_display(lam) + " ⊗ " +
                       partition_tuple_display(mu))};
        // Support sits at the summed degree tuple; dimensions match the
        // induction product slot by slot.
        const WeightTuple support =
            WeightTuple(lam.degrees()) + WeightTuple(mu.degrees());
        Int lr_side = 0;
        for (const auto& [nu, c] : lm.entries()) {
          if (WeightTuple(nu.degrees()) != support)
            return {"day-tensor-laws", false,
                    fail("support escapes the degree sum at " + partition_tuple_display(lam) +
                         " ⊗ " + partition_tuple_display(mu))};
          lr_side += c * simple_value_dim(nu, support);
        }
        Int direct = 1;
        for (int i = 0; i < n; ++i)
          direct *= binomial(lam[i].size() + mu[i].size(), lam[i].size()) * specht_dim(lam[i]) *
                    specht_dim(mu[i]);
        if (lr_side != direct)
          return {"day-tensor-laws", false,
                  fail("dimension audit fails at " + partition_tuple_display(lam) + " ⊗ " +
                       partition_tuple_display(mu))};
      }
    }
    // Associativity on the smaller window.
    std::vector<PartitionTuple> small;
    for (int t = 0; t <= 2; ++t)
      for (const auto& lam : partition_tuples_of_total(n, t)) small.push_back(lam);
    for (const auto& x : small)
      for (const auto& y : small)
        for (const auto& z : small) {
          ++cases;
          GrothClass xy, yz;
          xy.add(x, 1);
          yz.add(z, 1);
          GrothClass left = day_tensor(day_tensor_simples(x, y), yz);
          GrothClass right = day_tensor(xy, day_tensor_simples(y, z));
          if (left != right)
            return {"day-tensor-laws", false,
                    fail("associativity fails at " + partition_tuple_display(x) + ", " +
                         partition_tuple_display(y) + ", " + partition_tuple_display(z))};
        }
  }
  return {"day-tensor-laws", true, sweep_stat(cases)};
}

namespace {

std::vector<PartitionTuple> tuples_up_to_total(int n, int max_total) {
  std::vector<PartitionTuple> out;
  for (int t = 0; t <= max_total; ++t)
    for (auto& lam : partition_tuples_of_total(n, t)) out.push_back(std::move(lam));
  return out;
}

}  // namespace

CheckResult check_ext1_agreement(const VerifyOptions& opts) {
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    const auto tuples = tuples_up_to_total(n, opts.ext_max_degree);
    for (const auto& lam : tuples)
      for (const auto& mu : tuples) {
        ++cases;
        const int closed = ext1_dim(lam, mu);
        const int oracle = ext1_branching_oracle(lam, mu);
        if (closed != oracle)
          return {"ext1-predicate-vs-branching", false,
                  fail("predicate " + std::to_string(closed) + " != oracle " +
                       std::to_string(oracle) + " at λ=" + partition_tuple_display(lam) +
                       " μ=" + partition_tuple_display(mu))};
        if (closed != 0 && closed != 1)
          return {"ext1-predicate-vs-branching", false,
                  fail("value outside {0,1} at λ=" + partition_tuple_display(lam))};
      }
  }
  return {"ext1-predicate-vs-branching", true, sweep_stat(cases)};
}

CheckResult check_ext1_cover_necessity(const VerifyOptions& opts) {
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    const auto tuples = tuples_up_to_total(n, opts.ext_max_degree);
    for (const auto& lam : tuples)
      for (const auto& mu : tuples) {
        if (ext1_dim(lam, mu) == 0) continue;
        ++cases;
        const WeightTuple a(mu.degrees()), b(lam.degrees());
        const auto covers = cover_relations_below_direct(a);
        if (std::find(covers.begin(), covers.end(), b) == covers.end())
          return {"ext1-cover-necessity", false,
                  fail("nonzero Ext¹ without a cover at λ=" + partition_tuple_display(lam) +
                       " μ=" + partition_tuple_display(mu))};
      }
  }
  return {"ext1-cover-necessity", true, sweep_stat(cases) + " nonzero pairs"};
}

CheckResult check_ext1_socle_layer(const VerifyOptions& opts) {
  const int max_total = std::min(opts.ext_max_degree, opts.duality_max_degree);
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    const auto tuples = tuples_up_to_total(n, max_total);
    for (const auto& lam : tuples)
      for (const auto& mu : tuples) {
        if (ext1_dim(lam, mu) != 1) continue;
        ++cases;
        if (jh_multiplicities(indec_injective(lam)).mult(mu) < 1)
          return {"ext1-socle-layer", false,
                  fail("extension μ missing from [I_λ] at λ=" + partition_tuple_display(lam) +
                       " μ=" + partition_tuple_display(mu))};
      }
  }
  return {"ext1-socle-layer", true, sweep_stat(cases) + " nonzero pairs"};
}

CheckResult check_duality_jh(const VerifyOptions& opts) {
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    for (const auto& lam : tuples_up_to_total(n, opts.duality_max_degree)) {
      ++cases;
      const GrothClass p_side = jh_multiplicities(indec_projective(lam));
      const GrothClass i_side = jh_multiplicities(indec_injective(lam.reversed()));
      if (p_side != i_side.reversed_labels())
        return {"duality-jh-multiplicities", false,
                fail("[P_λ] and reversed [I_{τλ}] differ at λ=" + partition_tuple_display(lam))};
    }
  }
  return {"duality-jh-multiplicities", true, sweep_stat(cases)};
}

CheckResult check_socle_top_mult(const VerifyOptions& opts) {
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    for (const auto& lam : tuples_up_to_total(n, opts.duality_max_degree)) {
      ++cases;
      if (jh_multiplicities(indec_projective(lam)).mult(lam) != 1 ||
          jh_multiplicities(indec_injective(lam)).mult(lam) != 1)
        return {"socle-top-multiplicity-one", false,
                fail("top/socle multiplicity differs from 1 at λ=" + partition_tuple_display(lam))};
    }
  }
  return {"socle-top-multiplicity-one", true, sweep_stat(cases)};
}

CheckResult check_support_windows(const VerifyOptions& opts) {
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    for (const auto& lam : tuples_up_to_total(n, opts.duality_max_degree)) {
      ++cases;
      const WeightTuple a(lam.degrees());
      try {
        socle_of_injective(lam);
      } catch (const consistency_error& e) {
        return {"support-windows", false,
                fail(std::string(e.what()) + " at λ=" + partition_tuple_display(lam))};
      }
      const GrothClass proj = jh_multiplicities(indec_projective(lam));
      for (const auto& [mu, m] : proj.entries()) {
        if (mu == lam) continue;
        if (!dominance_gt(a, WeightTuple(mu.degrees())))
          return {"support-windows", false,
                  fail("projective constituent not strictly below at λ=" +
                       partition_tuple_display(lam))};
      }
    }
  }
  return {"support-windows", true, sweep_stat(cases)};
}

CheckResult check_degree_conservation(const VerifyOptions& opts) {
  long long cases = 0;
  const auto constituents_total = [&cases](const GrothClass& cls, int expect) {
    for (const auto& [mu, m] : cls.entries()) {
      ++cases;
      if (mu.total_degree() != expect) return false;
    }
    return true;
  };
  for (int n = 1; n <= opts.max_n; ++n) {
    for (const auto& lam : tuples_up_to_total(n, opts.duality_max_degree)) {
      const int t = lam.total_degree();
      if (!constituents_total(jh_multiplicities(indec_projective(lam)), t) ||
          !constituents_total(jh_multiplicities(indec_injective(lam)), t) ||
          !constituents_total(day_tensor_simples(lam, lam), 2 * t))
        return {"degree-conservation", false,
                fail("constituent changes total degree at λ=" + partition_tuple_display(lam))};
    }
  }
  return {"degree-conservation", true, sweep_stat(cases)};
}

CheckResult check_socle_t_containment(const VerifyOptions& opts) {
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    for (int t = 0; t <= opts.repg_containment_max; ++t) {
      for (const auto& a : weight_tuples_with_total(n, t)) {
        ++cases;
        if (!jh_T(a).contains(socle_T(a)))
          return {"socle-T-containment", false,
                  fail("socle_T exceeds jh_T at a=" + weight_tuple_to_string(a))};
      }
    }
  }
  return {"socle-T-containment", true, sweep_stat(cases)};
}

CheckResult check_regular_identity(const VerifyOptions& opts) {
  long long cases = 0;
  for (int m = 0; m <= opts.char_regular_max; ++m) {
    Int sum = 0;
    for (const auto& lam : partitions_of(m)) {
      const Int f = specht_dim(lam);
      sum += f * f;
      ++cases;
    }
    if (sum != factorial(m))
      return {"regular-representation-identity", false,
              fail("Σ f² != m! at m=" + std::to_string(m))};
  }
  return {"regular-representation-identity", true, sweep_stat(cases)};
}

CheckResult check_mn_orthogonality(const VerifyOptions& opts) {
  long long cases = 0;
  for (int m = 0; m <= opts.char_orth_max; ++m) {
    const auto shapes = partitions_of(m);
    for (const auto& lam : shapes)
      for (const auto& mu : shapes) {
        ++cases;
        Int sum = 0;
        for (const auto& rho : shapes)
          sum += class_size(rho) * mn_character(lam, rho) * mn_character(mu, rho);
        const Int expect = lam == mu ? factorial(m) : Int(0);
        if (sum != expect)
          return {"character-orthogonality", false,
                  fail("⟨χ^λ,χ^μ⟩ wrong at λ=" + partition_to_display(lam) + " μ=" +
                       partition_to_display(mu))};
      }
  }
  return {"character-orthogonality", true, sweep_stat(cases)};
}

CheckResult check_mn_oracle(const VerifyOptions& opts) {
  long long cases = 0;
  for (int m = 0; m <= opts.char_oracle_max; ++m) {
    const auto shapes = partitions_of(m);
    for (const auto& lam : shapes)
      for (const auto& rho : shapes) {
        ++cases;
        if (mn_character(lam, rho) != character_oracle(lam, rho, opts.char_oracle_max))
          return {"mn-vs-permutation-module-oracle", false,
                  fail("characters disagree at λ=" + partition_to_display(lam) + " class " +
                       partition_to_display(rho))};
      }
  }
  return {"mn-vs-permutation-module-oracle", true, sweep_stat(cases)};
}

CheckResult check_lr_identities(const VerifyOptions& opts) {
  long long cases = 0;
  for (int s = 0; s <= opts.lr_dim_max; ++s) {
    for (int sl = 0; sl <= s; ++sl) {
      for (const auto& lam : partitions_of(sl)) {
        for (const auto& mu : partitions_of(s - sl)) {
          ++cases;
          Int dim_sum = 0;
          for (const auto& nu : partitions_of(s)) {
            const Int c = lr_coefficient(lam, mu, nu);
            if (c != lr_coefficient(mu, lam, nu))
              return {"lr-identities", false,
                      fail("symmetry fails at λ=" + partition_to_display(lam) + " μ=" +
                           partition_to_display(mu) + " ν=" + partition_to_display(nu))};
            dim_sum += c * specht_dim(nu);
          }
          if (dim_sum != binomial(s, sl) * specht_dim(lam) * specht_dim(mu))
            return {"lr-identities", false,
                    fail("dimension identity fails at λ=" + partition_to_display(lam) + " μ=" +
                         partition_to_display(mu))};
        }
      }
    }
  }
  return {"lr-identities", true, sweep_stat(cases)};
}

CheckResult check_pieri_hs1(const VerifyOptions& opts) {
  const Partition box({1});
  long long cases = 0;
  for (int m = 0; m <= std::min(opts.lr_dim_max - 1, 6); ++m) {
    for (const auto& lam : partitions_of(m)) {
      for (const auto& nu : partitions_of(m + 1)) {
        ++cases;
        const Int c = lr_coefficient(lam, box, nu);
        const Int expect = is_hs1(lam, nu) ? 1 : 0;
        if (c != expect)
          return {"pieri-single-box", false,
                  fail("Pieri and is_hs1 disagree at λ=" + partition_to_display(lam) + " ν=" +
                       partition_to_display(nu))};
      }
      const auto grown = add_one_box(lam);
      std::vector<int> distinct;
      for (int p : lam.parts())
        if (distinct.empty() || distinct.back() != p) distinct.push_back(p);
      if (static_cast<int>(grown.size()) != static_cast<int>(distinct.size()) + 1)
        return {"pieri-single-box", false,
                fail("add_one_box count wrong at λ=" + partition_to_display(lam))};
    }
  }
  return {"pieri-single-box", true, sweep_stat(cases)};
}

CheckResult check_specht_recursions(const VerifyOptions& opts) {
  long long cases = 0;
  for (int m = 0; m <= 10; ++m) {
    for (const auto& lam : partitions_of(m)) {
      ++cases;
      if (specht_dim(lam) != specht_dim(lam.conjugate()))
        return {"specht-conjugate-branching", false,
                fail("conjugate symmetry fails at " + partition_to_display(lam))};
      if (m >= 1) {
        Int branch = 0;
        for (const auto& mu : partitions_of(m - 1))
          if (is_hs1(mu, lam)) branch += specht_dim(mu);
        if (branch != specht_dim(lam))
          return {"specht-conjugate-branching", false,
                  fail("branching recursion fails at " + partition_to_display(lam))};
      }
      if (m <= std::min(opts.char_regular_max, kDefaultSytBound) &&
          enumerate_syt(lam) != specht_dim(lam))
        return {"specht-conjugate-branching", false,
                fail("SYT count differs from hook formula at " + partition_to_display(lam))};
    }
  }
  return {"specht-conjugate-branching", true, sweep_stat(cases)};
}

CheckResult check_bimodule_audits(const VerifyOptions& opts) {
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    for (int t = 0; t <= opts.duality_max_degree; ++t) {
      const auto tuples = weight_tuples_with_total(n, t);
      for (const auto& a : tuples)
        for (const auto& b : tuples) {
          ++cases;
          const auto dec = decompose_bimodule(a, b);
          Int audit = 0;
          std::map<PartitionTuple, Int> row_dims;
          for (const auto& [pair, m] : dec) {
            const Int dl = simple_value_dim(pair.first, a);
            const Int dm = simple_value_dim(pair.second, b);
            audit += m * dl * dm;
            row_dims[pair.first] += m * dm;
          }
          const Int hom = count_u_morphisms(a, b);
          if (audit != hom)
            return {"bimodule-dimension-audit", false,
                    fail("Σ mult·dim·dim != |Hom| at a=" + weight_tuple_to_string(a) + " b=" +
                         weight_tuple_to_string(b))};
          if (hom != 0) {
            // One-sided freeness: the λ-row sums to (|Hom|/|𝔖_a|)·dim M_λ.
            const Int rank = exact_div(hom, sym_group_order(a), "free module rank");
            for (const auto& [lam, row] : row_dims)
              if (row != rank * simple_value_dim(lam, a))
                return {"bimodule-dimension-audit", false,
                        fail("one-sided freeness fails at a=" + weight_tuple_to_string(a) +
                             " b=" + weight_tuple_to_string(b))};
          }
        }
    }
  }
  return {"bimodule-dimension-audit", true, sweep_stat(cases)};
}

CheckResult check_hook_content_ssyt(const VerifyOptions& opts) {
  long long cases = 0;
  for (int m = 0; m <= opts.flag_boxes_max; ++m) {
    for (const auto& lam : partitions_of(m)) {
      for (int d = 0; d <= opts.flag_dim_max; ++d) {
        ++cases;
        if (schur_dim_finite(lam, d) != count_ssyt(lam, d, opts.flag_boxes_max))
          return {"hook-content-vs-ssyt", false,
                  fail("hook content differs from SSYT count at λ=" + partition_to_display(lam) +
                       " d=" + std::to_string(d))};
      }
    }
  }
  return {"hook-content-vs-ssyt", true, sweep_stat(cases)};
}

CheckResult check_envelope_bounds(const VerifyOptions& opts) {
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    const auto tuples = tuples_up_to_total(n, 3);
    std::vector<FlagShape> shapes;
    {
      std::vector<int> d(static_cast<size_t>(n), 0);
      std::function<void(int)> rec = [&](int i) {
        if (i == n) {
          shapes.push_back(FlagShape{d});
          return;
        }
        for (int v = 0; v <= 2; ++v) {
          d[static_cast<size_t>(i)] = v;
          rec(i + 1);
        }
      };
      rec(0);
    }
    for (const auto& lam : tuples) {
      for (const auto& shape : shapes) {
        ++cases;
        const Int simple = eval_flag(lam, shape);
        if (simple < 0 || eval_flag_injective(lam, shape) < simple ||
            eval_flag_projective(lam, shape) < simple)
          return {"envelope-bounds", false,
                  fail("envelope/cover dimension below the simple at λ=" +
                       partition_tuple_display(lam))};
      }
    }
  }
  return {"envelope-bounds", true, sweep_stat(cases)};
}

CheckResult check_monotone_stabilization(const VerifyOptions& opts) {
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    for (const auto& lam : tuples_up_to_total(n, 3)) {
      int max_rows = 0;
      for (int i = 0; i < n; ++i) max_rows = std::max(max_rows, lam[i].rows());
      Int prev = -1;
      for (int j = 0; j <= 4; ++j) {
        ++cases;
        const FlagShape shape{std::vector<int>(static_cast<size_t>(n), j)};
        const Int v = eval_flag(lam, shape);
        if (v < prev)
          return {"monotone-stabilization", false,
                  fail("evaluation not monotone in the square shape at λ=" +
                       partition_tuple_display(lam))};
        if (j >= max_rows && v <= 0)
          return {"monotone-stabilization", false,
                  fail("evaluation vanishes past the stabilization point at λ=" +
                       partition_tuple_display(lam))};
        prev = v;
      }
    }
  }
  return {"monotone-stabilization", true, sweep_stat(cases)};
}

CheckResult check_n1_semisimple_quiver(const VerifyOptions& opts) {
  (void)opts;
  long long cases = 0;
  for (int d = 0; d <= 6; ++d) {
    const ExtQuiver q = ext_quiver(1, d);
    cases += static_cast<long long>(q.nodes.size());
    if (!q.edges.empty())
      return {"n1-semisimple-quiver", false,
              fail("edge found in the width-1 quiver at degree " + std::to_string(d))};
  }
  return {"n1-semisimple-quiver", true, sweep_stat(cases) + " nodes"};
}

CheckResult check_flag_dimension_coherence(const VerifyOptions& opts) {
  long long cases = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    std::vector<FlagShape> shapes;
    {
      std::vector<int> d(static_cast<size_t>(n), 0);
      std::function<void(int)> rec = [&](int i) {
        if (i == n) {
          shapes.push_back(FlagShape{d});
          return;
        }
        for (int v = 0; v <= 2; ++v) {
          d[static_cast<size_t>(i)] = v;
          rec(i + 1);
        }
      };
      rec(0);
    }
    for (int t = 0; t <= 3; ++t) {
      for (const auto& a : weight_tuples_with_total(n, t)) {
        const GrothClass jh = jh_T(a);
        for (const auto& shape : shapes) {
          ++cases;
          Int lhs = 0;
          for (const auto& [lam, m] : jh.entries()) lhs += m * eval_flag(lam, shape);
          // dim T_a at the flag: ∏ (d_i + … + d_n)^{a_i}.
          Int rhs = 1;
          int suffix = 0;
          std::vector<Int> pow_cache;
          for (int i = n - 1; i >= 0; --i) {
            suffix += shape.graded_dims[static_cast<size_t>(i)];
            Int p = 1;
            for (int k = 0; k < a[i]; ++k) p *= suffix;
            rhs *= p;
          }
          if (lhs != rhs)
            return {"flag-dimension-coherence", false,
                    fail("Σ jh·eval != ∏ suffix^a at a=" + weight_tuple_to_string(a))};
        }
      }
    }
  }
  return {"flag-dimension-coherence", true, sweep_stat(cases)};
}

namespace {

using CheckFn = CheckResult (*)(const VerifyOptions&);

struct SuiteEntry {
  const char* suite;
  CheckFn fn;
};

// `all` runs the whole table in order.
const SuiteEntry kChecks[] = {
    {"hom-formula", check_hom_formula},
    {"hom-formula", check_hom_divisibility},
    {"hom-formula", check_hom_factorization},
    {"hom-formula", check_dominance_covers},
    {"tensor", check_tensor_principal},
    {"tensor", check_day_tensor_laws},
    {"ext-oracle", check_ext1_agreement},
    {"ext-oracle", check_ext1_cover_necessity},
    {"ext-oracle", check_ext1_socle_layer},
    {"duality", check_duality_jh},
    {"duality", check_socle_top_mult},
    {"duality", check_support_windows},
    {"duality", check_degree_conservation},
    {"duality", check_socle_t_containment},
    {"characters", check_regular_identity},
    {"characters", check_mn_orthogonality},
    {"characters", check_mn_oracle},
    {"characters", check_lr_identities},
    {"characters", check_pieri_hs1},
    {"characters", check_specht_recursions},
    {"characters", check_bimodule_audits},
    {"finite-rank", check_hook_content_ssyt},
    {"finite-rank", check_envelope_bounds},
    {"finite-rank", check_monotone_stabilization},
    {"finite-rank", check_n1_semisimple_quiver},
    {"finite-rank", check_flag_dimension_coherence},
};

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"hom-formula", "duality",  "ext-oracle",
                                                 "tensor",      "characters", "all"};
  return names;
}

bool is_verify_suite(const std::string& name) {
  const auto& names = verify_suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
  if (!is_verify_suite(suite))
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  std::vector<CheckResult> out;
  for (const auto& entry : kChecks)
    if (suite == "all" || suite == entry.suite) out.push_back(entry.fn(opts));
  return out;
}

}  // namespace flagcat
