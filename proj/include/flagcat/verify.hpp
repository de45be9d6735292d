#pragma once

#include <string>
#include <vector>

#include "flagcat/labels.hpp"

namespace flagcat {

/// Sweep bounds for the self-verification harness. Defaults keep the full
/// `all` suite under a minute on commodity hardware.
struct VerifyOptions {
  int max_n = 3;
  int hom_max_total = 6;        // Hom formula sweeps
  int tensor_max_total = 5;     // |a| + |b| for the principal tensor identity
  int ext_max_degree = 5;       // Ext¹ predicate/oracle sweeps
  int duality_max_degree = 5;   // JH duality sweeps
  int char_regular_max = 8;     // Σ (f^λ)² = m!
  int char_orth_max = 7;        // character orthogonality
  int char_oracle_max = 5;      // brute-force character oracle
  int lr_dim_max = 8;           // |λ| + |μ| for the LR dimension identity
  int flag_boxes_max = 6;       // hook content vs SSYT counts
  int flag_dim_max = 4;
  int repg_containment_max = 5; // socle_T ⊆ jh_T sweep
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // sweep statistics, or the first counterexample
};

// Suites: hom-formula, duality, ext-oracle, tensor, characters, all.
const std::vector<std::string>& verify_suite_names();
bool is_verify_suite(const std::string& name);

// Runs every check of the named suite; deterministic order and content.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts = {});

// Individual checks, exposed for the acceptance harness.
CheckResult check_hom_formula(const VerifyOptions& opts);
CheckResult check_hom_divisibility(const VerifyOptions& opts);
CheckResult check_hom_factorization(const VerifyOptions& opts);
CheckResult check_dominance_covers(const VerifyOptions& opts);
CheckResult check_tensor_principal(const VerifyOptions& opts);
CheckResult check_day_tensor_laws(const VerifyOptions& opts);
CheckResult check_ext1_agreement(const VerifyOptions& opts);
CheckResult check_ext1_cover_necessity(const VerifyOptions& opts);
CheckResult check_ext1_socle_layer(const VerifyOptions& opts);
CheckResult check_duality_jh(const VerifyOptions& opts);
CheckResult check_socle_top_mult(const VerifyOptions& opts);
CheckResult check_support_windows(const VerifyOptions& opts);
CheckResult check_degree_conservation(const VerifyOptions& opts);
CheckResult check_socle_t_containment(const VerifyOptions& opts);
CheckResult check_regular_identity(const VerifyOptions& opts);
CheckResult check_mn_orthogonality(const VerifyOptions& opts);
CheckResult check_mn_oracle(const VerifyOptions& opts);
CheckResult check_lr_identities(const VerifyOptions& opts);
CheckResult check_pieri_hs1(const VerifyOptions& opts);
CheckResult check_specht_recursions(const VerifyOptions& opts);
CheckResult check_bimodule_audits(const VerifyOptions& opts);
CheckResult check_hook_content_ssyt(const VerifyOptions& opts);
CheckResult check_envelope_bounds(const VerifyOptions& opts);
CheckResult check_monotone_stabilization(const VerifyOptions& opts);
CheckResult check_n1_semisimple_quiver(const VerifyOptions& opts);
CheckResult check_flag_dimension_coherence(const VerifyOptions& opts);

}  // namespace flagcat
