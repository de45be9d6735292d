#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flagcat/verify.hpp"
#include "flagcat/version.hpp"
#include "json.hpp"

namespace fc = flagcat;
using ordered_json = nlohmann::ordered_json;

namespace {

// Exact integers render as JSON numbers while they fit in 64 bits, and as
// decimal strings beyond that.
ordered_json json_int(const fc::Int& v) {
  static const fc::Int lo = std::numeric_limits<long long>::min();
  static const fc::Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

ordered_json groth_to_json(const fc::GrothClass& cls) {
  ordered_json out = ordered_json::object();
  for (const auto& [lam, m] : cls.entries()) out[fc::partition_tuple_key(lam)] = json_int(m);
  return out;
}

ordered_json map_to_json(const std::map<fc::PartitionTuple, fc::Int>& m) {
  ordered_json out = ordered_json::object();
  for (const auto& [lam, mult] : m) out[fc::partition_tuple_key(lam)] = json_int(mult);
  return out;
}

ordered_json quiver_to_json(const fc::ExtQuiver& q) {
  ordered_json nodes = ordered_json::array();
  for (const auto& node : q.nodes) nodes.push_back(fc::partition_tuple_key(node));
  ordered_json edges = ordered_json::array();
  for (const auto& [i, j] : q.edges)
    edges.push_back({fc::partition_tuple_key(q.nodes[static_cast<size_t>(i)]),
                     fc::partition_tuple_key(q.nodes[static_cast<size_t>(j)])});
  return ordered_json{{"n", q.n},
                      {"max_degree", q.max_degree},
                      {"node_count", q.nodes.size()},
                      {"edge_count", q.edges.size()},
                      {"nodes", nodes},
                      {"edges", edges}};
}

std::string key_to_display(const std::string& key, int n) {
  return fc::partition_tuple_display(fc::parse_partition_tuple(key, n));
}

std::string value_to_string(const ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// Text and DOT renderings are derived from the JSON payload, so cached and
// fresh invocations print byte-identically.
std::string render_dot(const ordered_json& result, int n) {
  std::ostringstream os;
  os << "digraph ext_quiver {\n  rankdir=LR;\n";
  for (const auto& node : result.at("nodes"))
    os << "  \"" << key_to_display(node.get<std::string>(), n) << "\";\n";
  for (const auto& edge : result.at("edges"))
    os << "  \"" << key_to_display(edge[0].get<std::string>(), n) << "\" -> \""
       << key_to_display(edge[1].get<std::string>(), n) << "\";\n";
  os << "}\n";
  return os.str();
}

std::string render_class_text(const ordered_json& result, int n) {
  std::ostringstream os;
  for (const auto& [key, val] : result.items())
    os << key_to_display(key, n) << ": " << value_to_string(val) << "\n";
  if (result.empty()) os << "(zero class)\n";
  return os.str();
}

std::string render_text(const std::string& command, const ordered_json& result, int n) {
  std::ostringstream os;
  if (command == "hom-dim") {
    os << "dim = " << value_to_string(result.at("dim")) << "\n";
    if (result.contains("oracle") && result["oracle"].contains("count"))
      os << "oracle count = " << value_to_string(result["oracle"]["count"])
         << (result["oracle"]["agree"].get<bool>() ? " (agree)" : " (DISAGREE)") << "\n";
    else if (result.contains("oracle"))
      os << "oracle skipped: " << result["oracle"]["skipped"].get<std::string>() << "\n";
  } else if (command == "ext1") {
    os << "dim = " << result.at("dim").get<int>() << "\n";
    const auto& c = result.at("conditions");
    os << "1 degree cover with unit move: " << c.at("1_degree_cover_with_unit_move").dump() << "\n"
       << "2 other components equal:      " << c.at("2_other_components_equal").dump() << "\n"
       << "3 single box moves:            " << c.at("3_single_box_moves").dump() << "\n";
  } else if (command == "quiver") {
    os << result.at("node_count").get<long long>() << " nodes, "
       << result.at("edge_count").get<long long>() << " edges\n";
    for (const auto& edge : result.at("edges"))
      os << key_to_display(edge[0].get<std::string>(), n) << " -> "
         << key_to_display(edge[1].get<std::string>(), n) << "\n";
  } else if (command == "eval-flag") {
    os << "dim = " << value_to_string(result.at("dim")) << "\n";
  } else if (command == "dual" || command == "tau" ||
             (command == "tensor" && result.contains("label"))) {
    os << result.at("label").get<std::string>() << "\n";
  } else if (command == "verify") {
    for (const auto& check : result.at("checks"))
      os << (check.at("pass").get<bool>() ? "PASS " : "FAIL ") << check.at("name").get<std::string>()
         << " — " << check.at("detail").get<std::string>() << "\n";
    os << "suite " << result.at("suite").get<std::string>() << ": "
       << (result.at("passed").get<bool>() ? "PASS" : "FAIL") << "\n";
  } else {
    // Grothendieck-class payloads: decompose-principal, jh, socle-T, tensor.
    return render_class_text(result, n);
  }
  return os.str();
}

// Content-addressed result cache, disabled unless --cache is given. Keyed by
// engine version + command + canonical argument echo; stores the payload.
class ResultCache {
 public:
  explicit ResultCache(const std::string& key) : key_(key) {
    const char* env = std::getenv("FLAGCAT_CACHE_DIR");
    std::filesystem::path dir =
        env ? std::filesystem::path(env) : std::filesystem::temp_directory_path() / "flagcat-cache";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    path_ = dir / (fnv64_hex(key) + ".json");
  }

  bool lookup(ordered_json& result) const {
    if (path_.empty()) return false;
    std::ifstream in(path_);
    if (!in) return false;
    ordered_json stored;
    try {
      in >> stored;
    } catch (...) {
      return false;
    }
    if (!stored.contains("key") || stored["key"] != key_) return false;
    result = stored["result"];
    return true;
  }

  void store(const ordered_json& result) const {
    if (path_.empty()) return;
    std::ofstream out(path_);
    out << ordered_json{{"key", key_}, {"result", result}}.dump();
  }

 private:
  static std::string fnv64_hex(const std::string& s) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
  }

  std::string key_;
  std::filesystem::path path_;
};

fc::GrothClass jh_of_label(const std::string& label, int n, int bound) {
  const fc::ParsedLabel parsed = fc::parse_any_label(label, n);
  if (!parsed.is_repg) return fc::jh_multiplicities(parsed.obj, bound);
  if (parsed.rep.kind == fc::RepGKind::K) return fc::socle_T(parsed.rep.weight_index());
  // Representation-model objects: compute on the weighted-set side and pull
  // the constituents back through the reversing dictionary.
  return fc::jh_multiplicities(fc::to_umod(parsed.rep), bound).reversed_labels();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flagcat — exact-integer engine for modules over the category of weighted finite "
               "sets, their representation model, and polynomial functors on flags"};
  app.require_subcommand(1);

  // Every command states the ambient width explicitly; it fixes the meaning
  // of every tuple argument.
  int n = 0;
  std::string format = "json";
  bool use_cache = false;

  auto add_common = [&](CLI::App* cmd, bool with_dot = false) {
    cmd->add_option("--n", n, "ambient width (number of weights)")->required();
    cmd->add_option("--format", format,
                    with_dot ? "output format: json, text or dot" : "output format: json or text")
        ->default_val("json");
    cmd->add_flag("--cache", use_cache, "enable the on-disk result cache (FLAGCAT_CACHE_DIR)");
  };

  std::string a_str, b_str, lam_str, mu_str, d_str, kind_str, variant = "simple";
  std::string label1, label2, suite;
  int max_degree = 0;
  bool with_oracle = false;

  auto* cmd_hom = app.add_subcommand("hom-dim", "dim Hom(T_a, T_b) by the closed product formula");
  add_common(cmd_hom);
  cmd_hom->add_option("--a", a_str, "source weight tuple, e.g. 2,0")->required();
  cmd_hom->add_option("--b", b_str, "target weight tuple")->required();
  cmd_hom->add_flag("--oracle", with_oracle, "also run the exhaustive bijection count");

  auto* cmd_ext = app.add_subcommand(
      "ext1", "dim Ext¹(S_λ, S_μ) with the condition report; the degrees of μ sit above those of "
              "λ in the dominance order when nonzero");
  add_common(cmd_ext);
  cmd_ext->add_option("--lam", lam_str, "partition tuple λ, e.g. 1;1")->required();
  cmd_ext->add_option("--mu", mu_str, "partition tuple μ")->required();

  auto* cmd_quiver = app.add_subcommand("quiver", "Ext¹ quiver up to a total degree");
  add_common(cmd_quiver, true);
  cmd_quiver->add_option("--max-degree", max_degree, "largest total degree")->required();

  auto* cmd_dec = app.add_subcommand("decompose-principal",
                                     "indecomposable summands of P_a or I_a with multiplicities");
  add_common(cmd_dec);
  cmd_dec->add_option("--kind", kind_str, "projective or injective")->required();
  cmd_dec->add_option("--a", a_str, "weight tuple")->required();

  auto* cmd_jh = app.add_subcommand("jh", "Jordan–Hölder class of a labelled object");
  add_common(cmd_jh);
  cmd_jh->add_option("label", label1, "object label, e.g. I[1;1], P(2,0), T(1,1), M[2;-]")
      ->required();

  auto* cmd_socle = app.add_subcommand("socle-T", "socle of T_a (the class of K_a), in S-labels");
  add_common(cmd_socle);
  cmd_socle->add_option("--a", a_str, "weight tuple")->required();

  auto* cmd_tensor = app.add_subcommand("tensor",
                                        "tensor product: M[..] M[..] gives the class of simples, "
                                        "P(a) P(b) gives the principal projective at a+b");
  add_common(cmd_tensor);
  cmd_tensor->add_option("first", label1, "left factor")->required();
  cmd_tensor->add_option("second", label2, "right factor")->required();

  auto* cmd_eval = app.add_subcommand("eval-flag",
                                      "dimension of F_λ (or its envelope/cover) at a finite flag");
  add_common(cmd_eval);
  cmd_eval->add_option("--lam", lam_str, "partition tuple")->required();
  cmd_eval->add_option("--d", d_str, "graded dimensions of the flag, e.g. 1,2")->required();
  cmd_eval->add_option("--variant", variant, "simple, injective or projective")
      ->default_val("simple");

  auto* cmd_dual = app.add_subcommand("dual", "vector-space duality relabeling (P↔J, I↔Q)");
  add_common(cmd_dual);
  cmd_dual->add_option("label", label1, "object label")->required();

  auto* cmd_tau = app.add_subcommand("tau", "weight-reversal relabeling (P_a = Q_{τa} etc.)");
  add_common(cmd_tau);
  cmd_tau->add_option("label", label1, "object label")->required();

  fc::VerifyOptions vopts;
  auto* cmd_verify =
      app.add_subcommand("verify", "run a self-verification suite; widths 1..n are swept");
  cmd_verify
      ->add_option("suite", suite, "hom-formula, duality, ext-oracle, tensor, characters or all")
      ->required();
  cmd_verify->add_option("--n", vopts.max_n, "largest ambient width")->default_val(3);
  cmd_verify->add_option("--max-total", vopts.hom_max_total, "largest total for Hom sweeps")
      ->default_val(6);
  cmd_verify
      ->add_option("--max-degree", vopts.ext_max_degree, "largest total degree for Ext¹ sweeps")
      ->default_val(5);
  cmd_verify
      ->add_option("--duality-degree", vopts.duality_max_degree,
                   "largest total degree for duality sweeps")
      ->default_val(5);
  cmd_verify->add_option("--format", format, "output format: json or text")->default_val("json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::string command;
  ordered_json args = ordered_json::object();
  std::function<ordered_json()> compute;
  int exit_code = 0;

  try {
    if (cmd_hom->parsed()) {
      command = "hom-dim";
      args = {{"a", a_str}, {"b", b_str}, {"oracle", with_oracle}};
      compute = [&]() {
        const auto a = fc::parse_weight_tuple(a_str, n);
        const auto b = fc::parse_weight_tuple(b_str, n);
        const fc::Int dim = fc::count_u_morphisms(a, b);
        ordered_json result{{"dim", json_int(dim)}};
        if (with_oracle) {
          if (a.total() <= fc::kDefaultMorphismBound) {
            const fc::Int brute = static_cast<long long>(fc::enumerate_u_morphisms(a, b).size());
            result["oracle"] = {{"count", json_int(brute)}, {"agree", brute == dim}};
          } else {
            result["oracle"] = {{"skipped", "total exceeds the exhaustive bound"}};
          }
        }
        return result;
      };
    } else if (cmd_ext->parsed()) {
      command = "ext1";
      args = {{"lam", lam_str}, {"mu", mu_str}};
      compute = [&]() {
        const auto lam = fc::parse_partition_tuple(lam_str, n);
        const auto mu = fc::parse_partition_tuple(mu_str, n);
        const fc::Ext1Explain e = fc::ext1_explain(lam, mu);
        ordered_json conditions{{"1_degree_cover_with_unit_move", e.cover}};
        conditions["2_other_components_equal"] =
            e.cover ? ordered_json(e.outer_components_match) : ordered_json(nullptr);
        conditions["3_single_box_moves"] =
            e.cover ? ordered_json(e.first_slot_single_box && e.second_slot_single_box)
                    : ordered_json(nullptr);
        return ordered_json{{"dim", e.dim},
                            {"conditions", conditions},
                            {"cover_slot", e.slot ? ordered_json(*e.slot) : ordered_json(nullptr)},
                            {"branching_oracle", fc::ext1_branching_oracle(lam, mu)}};
      };
    } else if (cmd_quiver->parsed()) {
      command = "quiver";
      args = {{"max_degree", max_degree}};
      compute = [&]() { return quiver_to_json(fc::ext_quiver(n, max_degree)); };
    } else if (cmd_dec->parsed()) {
      command = "decompose-principal";
      args = {{"kind", kind_str}, {"a", a_str}};
      compute = [&]() {
        if (kind_str != "projective" && kind_str != "injective")
          throw fc::parse_error("kind: bad token '" + kind_str + "' (projective or injective)");
        const auto kind = kind_str == "projective" ? fc::ObjectKind::PrincipalProjective
                                                   : fc::ObjectKind::PrincipalInjective;
        return map_to_json(fc::decompose_principal(kind, fc::parse_weight_tuple(a_str, n)));
      };
    } else if (cmd_jh->parsed()) {
      command = "jh";
      args = {{"label", label1}};
      compute = [&]() { return groth_to_json(jh_of_label(label1, n, fc::kDefaultJhBound)); };
    } else if (cmd_socle->parsed()) {
      command = "socle-T";
      args = {{"a", a_str}};
      compute = [&]() { return groth_to_json(fc::socle_T(fc::parse_weight_tuple(a_str, n))); };
    } else if (cmd_tensor->parsed()) {
      command = "tensor";
      args = {{"first", label1}, {"second", label2}};
      compute = [&]() -> ordered_json {
        const fc::ParsedLabel x = fc::parse_any_label(label1, n);
        const fc::ParsedLabel y = fc::parse_any_label(label2, n);
        if (!x.is_repg && !y.is_repg && x.obj.kind == fc::ObjectKind::Simple &&
            y.obj.kind == fc::ObjectKind::Simple)
          return groth_to_json(fc::day_tensor_simples(x.obj.tuple_index(), y.obj.tuple_index()));
        if (!x.is_repg && !y.is_repg && x.obj.kind == fc::ObjectKind::PrincipalProjective &&
            y.obj.kind == fc::ObjectKind::PrincipalProjective && x.obj.side == fc::Side::U &&
            y.obj.side == fc::Side::U) {
          const fc::ObjectLabel prod =
              fc::tensor_principal_projectives(x.obj.weight_index(), y.obj.weight_index());
          return ordered_json{{"label", fc::object_label_to_string(prod)}};
        }
        throw fc::parse_error("tensor: supported pairs are M[..] M[..] and P(a) P(b)");
      };
    } else if (cmd_eval->parsed()) {
      command = "eval-flag";
      args = {{"lam", lam_str}, {"d", d_str}, {"variant", variant}};
      compute = [&]() {
        const auto lam = fc::parse_partition_tuple(lam_str, n);
        const fc::FlagShape shape{fc::parse_weight_tuple(d_str, n).entries()};
        fc::Int dim;
        if (variant == "simple")
          dim = fc::eval_flag(lam, shape);
        else if (variant == "injective")
          dim = fc::eval_flag_injective(lam, shape);
        else if (variant == "projective")
          dim = fc::eval_flag_projective(lam, shape);
        else
          throw fc::parse_error("variant: bad token '" + variant + "'");
        return ordered_json{{"dim", json_int(dim)}};
      };
    } else if (cmd_dual->parsed() || cmd_tau->parsed()) {
      const bool is_dual = cmd_dual->parsed();
      command = is_dual ? "dual" : "tau";
      args = {{"label", label1}};
      compute = [&, is_dual]() {
        const fc::ParsedLabel x = fc::parse_any_label(label1, n);
        if (x.is_repg)
          throw fc::parse_error("label '" + label1 +
                                "': dual/tau act on module labels (P, I, M, Q, J)");
        const fc::ObjectLabel out = is_dual ? fc::dual_vee(x.obj) : fc::tau_push(x.obj);
        return ordered_json{{"label", fc::object_label_to_string(out)},
                            {"side", out.side == fc::Side::U ? "U" : "D"}};
      };
    } else if (cmd_verify->parsed()) {
      command = "verify";
      n = vopts.max_n;
      vopts.tensor_max_total = std::min(vopts.hom_max_total, vopts.tensor_max_total);
      args = {{"suite", suite},
              {"max_n", vopts.max_n},
              {"max_total", vopts.hom_max_total},
              {"max_degree", vopts.ext_max_degree},
              {"duality_degree", vopts.duality_max_degree}};
      use_cache = false;  // the harness must always recompute
      compute = [&]() {
        const auto results = fc::run_suite(suite, vopts);
        bool all_pass = true;
        ordered_json checks = ordered_json::array();
        for (const auto& r : results) {
          all_pass = all_pass && r.pass;
          checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        return ordered_json{{"suite", suite}, {"passed", all_pass}, {"checks", checks}};
      };
    }

    const std::string cache_key = std::string(fc::kEngineVersion) + "\n" + command + "\n" +
                                  std::to_string(n) + "\n" + args.dump();
    ordered_json result;
    bool cache_hit = false;
    const auto t0 = std::chrono::steady_clock::now();
    if (use_cache) {
      ResultCache cache(cache_key);
      if (cache.lookup(result)) {
        cache_hit = true;
      } else {
        result = compute();
        cache.store(result);
      }
    } else {
      result = compute();
    }
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (command == "verify" && !result.at("passed").get<bool>()) exit_code = 1;

    if (format == "dot") {
      if (command != "quiver")
        throw fc::parse_error("format 'dot' is only available for the quiver command");
      std::cout << render_dot(result, n);
    } else if (format == "text") {
      std::cout << render_text(command, result, n);
    } else if (format == "json") {
      ordered_json envelope{
          {"query",
           ordered_json{{"command", command}, {"n", n}, {"args", args}, {"format", format}}},
          {"result", result},
          {"elapsed_ms", elapsed_ms},
          {"engine_version", fc::kEngineVersion},
          {"cache_hit", cache_hit}};
      std::cout << envelope.dump(2) << "\n";
    } else {
      throw fc::parse_error("format: bad token '" + format + "'");
    }
  } catch (const fc::consistency_error& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 3;
  } catch (const fc::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fc::bound_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return exit_code;
}
