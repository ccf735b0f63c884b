#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "covlab/harness.hpp"
#include "covlab/io.hpp"

namespace py = pybind11;
using namespace covlab;

namespace {

// The python surface mirrors the CLI's JSON forms: topologies/families come in
// and go out as dicts, avoiding a second binding layer for every struct.
json to_json(const py::object& obj) {
  py::module_ js = py::module_::import("json");
  std::string text = js.attr("dumps")(obj).cast<std::string>();
  return json::parse(text);
}

py::object from_json(const json& j) {
  py::module_ js = py::module_::import("json");
  return js.attr("loads")(j.dump());
}

Topology as_topology(const py::dict& d) { return topology_from_json(to_json(d)); }
SetFamily as_family(const py::dict& d) { return family_from_json(to_json(d)); }
FamilyCollection as_collection(const py::dict& d) { return collection_from_json(to_json(d)); }

py::dict verdict_dict(const Verdict& v) {
  json j;
  j["holds"] = v.holds;
  if (v.cover_witness) j["witness"] = subset_sequence_to_json(*v.cover_witness);
  if (v.point_witness) j["witness"] = point_sequence_to_json(*v.point_witness);
  if (v.setseq_witness) j["witness"] = subset_sequence_to_json(*v.setseq_witness);
  if (v.assignment) j["assignment"] = *v.assignment;
  return from_json(j);
}

py::dict report_dict(const ConditionReport& r) {
  json j;
  j["theorem"] = r.theorem_id;
  j["agree"] = r.agree;
  json conds = json::array();
  for (const auto& [label, holds] : r.condition_values)
    conds.push_back(json{{"holds", holds}, {"label", label}});
  j["conditions"] = conds;
  return from_json(j);
}

}  // namespace

PYBIND11_MODULE(_covlab, m) {
  m.doc() = "finite covering-property laboratory";
  m.attr("GROUND_LIMIT") = kGroundLimit;
  m.attr("DEFAULT_BUDGET") = Budget::kDefaultLimit;

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<ParseError>(m, "ParseError");

  m.def("check_compact",
        [](const py::dict& space, int A_size, const py::dict& B, std::uint64_t budget) {
          Budget b(budget);
          return verdict_dict(check_BA_compact(as_topology(space), A_size, as_family(B), b));
        },
        py::arg("space"), py::arg("A_size"), py::arg("B"),
        py::arg("budget") = Budget::kDefaultLimit);

  m.def("check_compact_closed",
        [](const py::dict& space, int A_size, const py::dict& B, std::uint64_t budget) {
          Budget b(budget);
          return verdict_dict(
              check_BA_compact_closed(as_topology(space), A_size, as_family(B), b));
        },
        py::arg("space"), py::arg("A_size"), py::arg("B"),
        py::arg("budget") = Budget::kDefaultLimit);

  m.def("check_f_compact",
        [](const py::dict& space, int A_size, const py::dict& B, const py::dict& F,
           std::uint64_t budget) {
          Budget b(budget);
          return verdict_dict(
              check_F_BA_compact(as_topology(space), A_size, as_family(B), as_family(F), b));
        },
        py::arg("space"), py::arg("A_size"), py::arg("B"), py::arg("F"),
        py::arg("budget") = Budget::kDefaultLimit);

  m.def("check_bg_compact",
        [](const py::dict& space, int A_size, const py::dict& B, const py::dict& G,
           std::uint64_t budget) {
          Budget b(budget);
          return verdict_dict(
              check_BG_compact(as_topology(space), A_size, as_family(B), as_family(G), b));
        },
        py::arg("space"), py::arg("A_size"), py::arg("B"), py::arg("G"),
        py::arg("budget") = Budget::kDefaultLimit);

  m.def("check_accum",
        [](const py::dict& space, int I_size, const py::dict& E, std::uint64_t budget) {
          Budget b(budget);
          return verdict_dict(
              check_E_accumulation_property(as_topology(space), I_size, as_family(E), b));
        },
        py::arg("space"), py::arg("I_size"), py::arg("E"),
        py::arg("budget") = Budget::kDefaultLimit);

  m.def("check_d_compact",
        [](const py::dict& space, const py::dict& D, std::uint64_t budget) {
          Budget b(budget);
          return verdict_dict(check_D_compact(as_topology(space), as_family(D), b));
        },
        py::arg("space"), py::arg("D"), py::arg("budget") = Budget::kDefaultLimit);

  m.def("check_weak_m_compact",
        [](const py::dict& space, const py::dict& M, std::uint64_t budget) {
          Budget b(budget);
          return verdict_dict(check_weak_M_compact(as_topology(space), as_collection(M), b));
        },
        py::arg("space"), py::arg("M"), py::arg("budget") = Budget::kDefaultLimit);

  m.def("check_quasi_m_compact",
        [](const py::dict& space, const py::dict& M, std::uint64_t budget) {
          Budget b(budget);
          return verdict_dict(check_quasi_M_compact(as_topology(space), as_collection(M), b));
        },
        py::arg("space"), py::arg("M"), py::arg("budget") = Budget::kDefaultLimit);

  m.def("has_irreducible_cover",
        [](const py::dict& space, int k, std::uint64_t budget) {
          Budget b(budget);
          return verdict_dict(has_irreducible_cover(as_topology(space), k, b));
        },
        py::arg("space"), py::arg("k"), py::arg("budget") = Budget::kDefaultLimit);

  m.def("transversal_dual",
        [](const py::dict& family) {
          return from_json(family_to_json(transversal_dual(as_family(family))));
        },
        py::arg("family"));
  m.def("upward_closure",
        [](const py::dict& family) {
          return from_json(family_to_json(upward_closure(as_family(family))));
        },
        py::arg("family"));
  m.def("downward_closure",
        [](const py::dict& family) {
          return from_json(family_to_json(downward_closure(as_family(family))));
        },
        py::arg("family"));
  m.def("is_filter",
        [](const py::dict& family) { return is_filter(as_family(family)); },
        py::arg("family"));
  m.def("is_ultrafilter",
        [](const py::dict& family) { return is_ultrafilter(as_family(family)); },
        py::arg("family"));
  m.def("principal_ultrafilter",
        [](int i, int n) { return from_json(family_to_json(principal_ultrafilter(i, n))); },
        py::arg("i"), py::arg("n"));

  m.def("example_space_a",
        [](int A_size, const py::dict& B) {
          return from_json(topology_to_json(example_space_a(A_size, as_family(B))));
        },
        py::arg("A_size"), py::arg("B"));
  m.def("example_space_b",
        [](int A_size, const py::dict& B) {
          return from_json(topology_to_json(example_space_b(A_size, as_family(B))));
        },
        py::arg("A_size"), py::arg("B"));
  m.def("sections_family",
        [](int I_size, const py::dict& A) {
          return from_json(family_to_json(sections_family(I_size, as_family(A))));
        },
        py::arg("I_size"), py::arg("A"));

  m.def("verify_theorem_e",
        [](const py::dict& space, int A_size, const py::dict& B, std::uint64_t budget) {
          Budget b(budget);
          return report_dict(verify_theorem_e(as_topology(space), A_size, as_family(B), b));
        },
        py::arg("space"), py::arg("A_size"), py::arg("B"),
        py::arg("budget") = Budget::kDefaultLimit);
  m.def("verify_theorem_r",
        [](const py::dict& space, int I_size, const py::dict& A, std::uint64_t budget) {
          Budget b(budget);
          return report_dict(verify_theorem_r(as_topology(space), I_size, as_family(A), b));
        },
        py::arg("space"), py::arg("I_size"), py::arg("A"),
        py::arg("budget") = Budget::kDefaultLimit);
  m.def("verify_facts",
        [](const py::dict& space, int A_size, const py::dict& B, std::uint64_t budget) {
          Budget b(budget);
          return report_dict(verify_facts(as_topology(space), A_size, as_family(B), b));
        },
        py::arg("space"), py::arg("A_size"), py::arg("B"),
        py::arg("budget") = Budget::kDefaultLimit);

  m.def("random_topology",
        [](int n, std::uint64_t seed) {
          return from_json(topology_to_json(random_topology(n, seed)));
        },
        py::arg("n"), py::arg("seed"));
  m.def("random_family",
        [](int ground, int max_members, std::uint64_t seed) {
          return from_json(family_to_json(random_family(ground, max_members, seed)));
        },
        py::arg("ground"), py::arg("max_members"), py::arg("seed"));

  m.def("fuzz_theorems",
        [](std::uint64_t seed, std::uint64_t count, int max_points, std::uint64_t budget) {
          Budget b(budget);
          FuzzResult r = fuzz_theorems(seed, count, max_points, b);
          json j;
          j["checked"] = r.checked;
          j["all_agree"] = r.all_agree;
          if (!r.all_agree) {
            j["seed"] = r.bad_seed;
            j["theorem"] = r.theorem_id;
            j["space"] = topology_to_json(r.X);
          }
          return from_json(j);
        },
        py::arg("seed"), py::arg("count"), py::arg("max_points") = 3,
        py::arg("budget") = Budget::kDefaultLimit);
}
