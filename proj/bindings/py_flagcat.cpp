#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagcat/verify.hpp"
#include "flagcat/version.hpp"

namespace py = pybind11;
namespace fc = flagcat;

namespace pybind11::detail {

// Exact big integers cross the boundary as python ints, via decimal strings.
template <>
struct type_caster<fc::Int> {
  PYBIND11_TYPE_CASTER(fc::Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = fc::Int(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const fc::Int& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

fc::Partition to_partition(const std::vector<int>& parts) { return fc::Partition(parts); }

fc::PartitionTuple to_tuple(const std::vector<std::vector<int>>& comps) {
  std::vector<fc::Partition> ps;
  ps.reserve(comps.size());
  for (const auto& c : comps) ps.emplace_back(c);
  return fc::PartitionTuple(std::move(ps));
}

std::vector<std::vector<int>> from_tuple(const fc::PartitionTuple& t) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < t.n(); ++i) out.push_back(t[i].parts());
  return out;
}

py::dict groth_to_dict(const fc::GrothClass& cls) {
  py::dict d;
  for (const auto& [lam, m] : cls.entries())
    d[py::str(fc::partition_tuple_key(lam))] = py::cast(m);
  return d;
}

}  // namespace

PYBIND11_MODULE(flagcat, m) {
  m.doc() = "Exact-integer engine for modules over the category of weighted finite sets, the "
            "matching representation model, and polynomial functors on flags. Partitions are "
            "lists of parts, weight tuples are lists of entries, partition tuples are lists of "
            "partitions; class-valued results are dicts keyed by ';'-joined tuple strings.";
  m.attr("__version__") = fc::kEngineVersion;

  // partitions
  m.def("specht_dim", [](const std::vector<int>& p) { return fc::specht_dim(to_partition(p)); },
        py::arg("partition"), "Standard-tableaux count by the hook length formula.");
  m.def("enumerate_syt",
        [](const std::vector<int>& p, int bound) { return fc::enumerate_syt(to_partition(p), bound); },
        py::arg("partition"), py::arg("bound") = fc::kDefaultSytBound,
        "Exhaustive standard-tableaux count (the oracle for specht_dim).");
  m.def("is_hs1",
        [](const std::vector<int>& inner, const std::vector<int>& outer) {
          return fc::is_hs1(to_partition(inner), to_partition(outer));
        },
        py::arg("inner"), py::arg("outer"));
  m.def("add_one_box",
        [](const std::vector<int>& p) {
          std::vector<std::vector<int>> out;
          for (const auto& q : fc::add_one_box(to_partition(p))) out.push_back(q.parts());
          return out;
        },
        py::arg("partition"));
  m.def("conjugate",
        [](const std::vector<int>& p) { return to_partition(p).conjugate().parts(); },
        py::arg("partition"));
  m.def("schur_dim_finite",
        [](const std::vector<int>& p, int d) { return fc::schur_dim_finite(to_partition(p), d); },
        py::arg("partition"), py::arg("dim"),
        "Dimension of the Schur functor on a space of the given dimension (hook content).");
  m.def("partitions_of",
        [](int mm, int bound) {
          std::vector<std::vector<int>> out;
          for (const auto& p : fc::partitions_of(mm, bound)) out.push_back(p.parts());
          return out;
        },
        py::arg("m"), py::arg("bound") = fc::kDefaultPartitionsBound);
  m.def("count_ssyt",
        [](const std::vector<int>& p, int max_entry, int bound) {
          return fc::count_ssyt(to_partition(p), max_entry, bound);
        },
        py::arg("partition"), py::arg("max_entry"), py::arg("bound") = fc::kDefaultSsytBound);

  // weighted sets
  m.def("dominance_geq",
        [](const std::vector<int>& a, const std::vector<int>& b) {
          return fc::dominance_geq(fc::WeightTuple(a), fc::WeightTuple(b));
        },
        py::arg("a"), py::arg("b"));
  m.def("cover_relations_below",
        [](const std::vector<int>& a) {
          std::vector<std::vector<int>> out;
          for (const auto& b : fc::cover_relations_below(fc::WeightTuple(a)))
            out.push_back(b.entries());
          return out;
        },
        py::arg("a"));
  m.def("tau", [](const std::vector<int>& a) { return fc::tau(fc::WeightTuple(a)).entries(); },
        py::arg("a"));
  m.def("count_u_morphisms",
        [](const std::vector<int>& a, const std::vector<int>& b) {
          return fc::count_u_morphisms(fc::WeightTuple(a), fc::WeightTuple(b));
        },
        py::arg("a"), py::arg("b"),
        "Closed product-formula count of weight-non-decreasing bijections a -> b.");
  m.def("enumerate_u_morphisms",
        [](const std::vector<int>& a, const std::vector<int>& b, int bound) {
          std::vector<std::vector<int>> out;
          for (const auto& f : fc::enumerate_u_morphisms(fc::WeightTuple(a), fc::WeightTuple(b), bound))
            out.push_back(f.map());
          return out;
        },
        py::arg("a"), py::arg("b"), py::arg("bound") = fc::kDefaultMorphismBound,
        "Exhaustive morphism list as permutation map vectors (the count oracle).");
  m.def("hom_g_dim",
        [](const std::vector<int>& a, const std::vector<int>& b) {
          return fc::hom_g_dim(fc::WeightTuple(a), fc::WeightTuple(b));
        },
        py::arg("a"), py::arg("b"));

  // characters
  m.def("mn_character",
        [](const std::vector<int>& shape, const std::vector<int>& cycle_type) {
          return fc::mn_character(to_partition(shape), to_partition(cycle_type));
        },
        py::arg("shape"), py::arg("cycle_type"), "Murnaghan–Nakayama character value.");
  m.def("character_oracle",
        [](const std::vector<int>& shape, const std::vector<int>& cycle_type, int bound) {
          return fc::character_oracle(to_partition(shape), to_partition(cycle_type), bound);
        },
        py::arg("shape"), py::arg("cycle_type"), py::arg("bound") = fc::kDefaultCharOracleBound);
  m.def("class_size",
        [](const std::vector<int>& cycle_type) { return fc::class_size(to_partition(cycle_type)); },
        py::arg("cycle_type"));
  m.def("lr_coefficient",
        [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& nu) {
          return fc::lr_coefficient(to_partition(lam), to_partition(mu), to_partition(nu));
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def("decompose_bimodule",
        [](const std::vector<int>& a, const std::vector<int>& b, int bound) {
          py::dict d;
          for (const auto& [pair, mult] :
               fc::decompose_bimodule(fc::WeightTuple(a), fc::WeightTuple(b), bound))
            d[py::make_tuple(fc::partition_tuple_key(pair.first),
                             fc::partition_tuple_key(pair.second))] = py::cast(mult);
          return d;
        },
        py::arg("a"), py::arg("b"), py::arg("bound") = fc::kDefaultBimoduleBound,
        "Multiplicities of outer products of Specht modules in the Hom bimodule.");

  // module category
  m.def("simple_value_dim",
        [](const std::vector<std::vector<int>>& lam, const std::vector<int>& b) {
          return fc::simple_value_dim(to_tuple(lam), fc::WeightTuple(b));
        },
        py::arg("lam"), py::arg("b"));
  m.def("decompose_principal",
        [](const std::string& kind, const std::vector<int>& a) {
          if (kind != "projective" && kind != "injective")
            throw std::invalid_argument("kind must be 'projective' or 'injective'");
          const auto k = kind == "projective" ? fc::ObjectKind::PrincipalProjective
                                              : fc::ObjectKind::PrincipalInjective;
          py::dict d;
          for (const auto& [lam, mult] : fc::decompose_principal(k, fc::WeightTuple(a)))
            d[py::str(fc::partition_tuple_key(lam))] = py::cast(mult);
          return d;
        },
        py::arg("kind"), py::arg("a"));
  m.def("jh",
        [](const std::string& label, int n, int bound) {
          const fc::ParsedLabel parsed = fc::parse_any_label(label, n);
          fc::GrothClass cls;
          if (!parsed.is_repg)
            cls = fc::jh_multiplicities(parsed.obj, bound);
          else if (parsed.rep.kind == fc::RepGKind::K)
            cls = fc::socle_T(parsed.rep.weight_index());
          else
            cls = fc::jh_multiplicities(fc::to_umod(parsed.rep), bound).reversed_labels();
          return groth_to_dict(cls);
        },
        py::arg("label"), py::arg("n"), py::arg("bound") = fc::kDefaultJhBound,
        "Jordan–Hölder class of a labelled object, e.g. jh('I[1;1]', 2).");
  m.def("socle_of_injective",
        [](const std::vector<std::vector<int>>& lam, int bound) {
          return from_tuple(fc::socle_of_injective(to_tuple(lam), bound));
        },
        py::arg("lam"), py::arg("bound") = fc::kDefaultJhBound);
  m.def("day_tensor_simples",
        [](const std::vector<std::vector<int>>& lam, const std::vector<std::vector<int>>& mu) {
          return groth_to_dict(fc::day_tensor_simples(to_tuple(lam), to_tuple(mu)));
        },
        py::arg("lam"), py::arg("mu"));
  m.def("ext1_dim",
        [](const std::vector<std::vector<int>>& lam, const std::vector<std::vector<int>>& mu) {
          return fc::ext1_dim(to_tuple(lam), to_tuple(mu));
        },
        py::arg("lam"), py::arg("mu"));
  m.def("ext1_branching_oracle",
        [](const std::vector<std::vector<int>>& lam, const std::vector<std::vector<int>>& mu) {
          return fc::ext1_branching_oracle(to_tuple(lam), to_tuple(mu));
        },
        py::arg("lam"), py::arg("mu"));
  m.def("ext_quiver",
        [](int n, int max_degree) {
          const fc::ExtQuiver q = fc::ext_quiver(n, max_degree);
          py::list nodes, edges;
          for (const auto& node : q.nodes) nodes.append(fc::partition_tuple_key(node));
          for (const auto& [i, j] : q.edges)
            edges.append(py::make_tuple(fc::partition_tuple_key(q.nodes[static_cast<size_t>(i)]),
                                        fc::partition_tuple_key(q.nodes[static_cast<size_t>(j)])));
          py::dict d;
          d["nodes"] = nodes;
          d["edges"] = edges;
          return d;
        },
        py::arg("n"), py::arg("max_degree"));
  m.def("dual",
        [](const std::string& label, int n) {
          return fc::object_label_to_string(fc::dual_vee(fc::parse_object_label(label, n)));
        },
        py::arg("label"), py::arg("n"));
  m.def("tau_push",
        [](const std::string& label, int n) {
          return fc::object_label_to_string(fc::tau_push(fc::parse_object_label(label, n)));
        },
        py::arg("label"), py::arg("n"));

  // representation model
  m.def("to_umod",
        [](const std::string& label, int n) {
          return fc::object_label_to_string(fc::to_umod(fc::parse_repg_label(label, n)));
        },
        py::arg("label"), py::arg("n"), "Dictionary into module labels, e.g. T(2,0) -> I(0,2).");
  m.def("from_umod",
        [](const std::string& label, int n) {
          return fc::repg_label_to_string(fc::from_umod(fc::parse_object_label(label, n)));
        },
        py::arg("label"), py::arg("n"));
  m.def("socle_T",
        [](const std::vector<int>& a) { return groth_to_dict(fc::socle_T(fc::WeightTuple(a))); },
        py::arg("a"));
  m.def("jh_T",
        [](const std::vector<int>& a, int bound) {
          return groth_to_dict(fc::jh_T(fc::WeightTuple(a), bound));
        },
        py::arg("a"), py::arg("bound") = fc::kDefaultJhBound);
  m.def("eval_flag",
        [](const std::vector<std::vector<int>>& lam, const std::vector<int>& dims) {
          return fc::eval_flag(to_tuple(lam), fc::FlagShape{dims});
        },
        py::arg("lam"), py::arg("dims"));
  m.def("eval_flag_injective",
        [](const std::vector<std::vector<int>>& lam, const std::vector<int>& dims) {
          return fc::eval_flag_injective(to_tuple(lam), fc::FlagShape{dims});
        },
        py::arg("lam"), py::arg("dims"));
  m.def("eval_flag_projective",
        [](const std::vector<std::vector<int>>& lam, const std::vector<int>& dims) {
          return fc::eval_flag_projective(to_tuple(lam), fc::FlagShape{dims});
        },
        py::arg("lam"), py::arg("dims"));

  // verification
  m.def("verify_suite",
        [](const std::string& suite, int max_n) {
          fc::VerifyOptions opts;
          opts.max_n = max_n;
          py::list out;
          for (const auto& r : fc::run_suite(suite, opts)) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
          }
          return out;
        },
        py::arg("suite"), py::arg("max_n") = 3,
        "Run a verification suite; returns one record per check.");

  py::register_exception<fc::bound_error>(m, "BoundError", PyExc_ValueError);
  py::register_exception<fc::parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<fc::consistency_error>(m, "ConsistencyError", PyExc_RuntimeError);
}
