#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sellns/fileio.hpp"
#include "sellns/latex.hpp"
#include "sellns/parser.hpp"

namespace py = pybind11;
using namespace sellns;

namespace {

SystemKind system_arg(const std::string& name) {
  auto s = system_from_name(name);
  if (!s) throw py::value_error("unknown system '" + name + "' (sell | lns-assoc | lns-nonassoc)");
  return *s;
}

py::dict result_dict(const SearchResult& res) {
  py::dict out;
  out["outcome"] = outcome_name(res.outcome);
  out["nodes"] = res.nodes;
  out["certificate"] = res.certificate ? py::object(py::str(certificate_to_text(*res.certificate)))
                                       : py::object(py::none());
  return out;
}

}  // namespace

PYBIND11_MODULE(_sellns, m) {
  m.doc() = "proof search and certificate checking for multi-modal substructural linear logics";

  py::class_<Signature>(m, "Signature")
      .def_static("from_text", &signature_from_text, py::arg("text"),
                  "Load a signature from its JSON text form.")
      .def_static("from_file", &load_signature_file, py::arg("path"))
      .def("to_text", &signature_to_text)
      .def("labels", &Signature::labels)
      .def("leq", &Signature::leq, py::arg("a"), py::arg("b"))
      .def("upset", &Signature::upset, py::arg("label"))
      .def("upset4", &Signature::upset4, py::arg("label"))
      .def("fingerprint", &Signature::fingerprint)
      .def("validate",
           [](const Signature& sig) {
             std::vector<std::string> out;
             for (const auto& v : sig.validate()) out.push_back(v.message);
             return out;
           })
      .def("__repr__", [](const Signature& sig) {
        return "<Signature " + std::to_string(sig.labels().size()) + " labels, " +
               mode_name(sig.mode()) + ", " + sig.fingerprint() + ">";
      });

  m.def("normalize_formula",
        [](const std::string& text) { return print_formula(parse_formula(text)); }, py::arg("text"),
        "Parse a formula and print it back in canonical ASCII syntax.");
  m.def("normalize_context",
        [](const std::string& text) { return print_context(parse_context(text)); }, py::arg("text"));
  m.def("normalize_sequent",
        [](const std::string& text) { return print_sequent(parse_sequent(text)); }, py::arg("text"));

  m.def("interpret", [](const std::string& lns) { return print_formula(interpret(parse_lns(lns))); },
        py::arg("lns"),
        "Formula interpretation of a linear nested sequent (extended language: | is par).");

  m.def("restrict_upset",
        [](const std::string& context, const std::string& label, const Signature& sig) -> py::object {
          auto restricted = restrict_upset(parse_context(context), label, sig);
          if (!restricted) return py::none();
          return py::str(print_context(*restricted));
        },
        py::arg("context"), py::arg("label"), py::arg("sig"),
        "The promotion restriction, or None when it is undefined.");

  m.def("prove",
        [](const std::string& goal, const Signature& sig, const std::string& system, int depth,
           std::uint64_t nodes) {
          SearchBudget budget;
          budget.max_depth = depth;
          budget.max_nodes = nodes;
          return result_dict(prove(system_arg(system), parse_lns(goal), sig, budget));
        },
        py::arg("goal"), py::arg("sig"), py::arg("system") = "sell", py::arg("depth") = 12,
        py::arg("nodes") = 100000,
        "Bounded backward proof search; outcome is proved | unprovable | bound.");

  m.def("check_certificate",
        [](const std::string& cert_text, const Signature& sig) {
          Verdict v = check_certificate(certificate_from_text(cert_text), sig);
          py::dict out;
          out["accepted"] = v.accepted;
          out["reason"] = v.reason;
          out["node_path"] = v.node_path;
          return out;
        },
        py::arg("certificate"), py::arg("sig"));

  m.def("oracle_provable",
        [](const std::string& goal, const Signature& sig) {
          return oracle_provable(parse_sequent(goal), sig);
        },
        py::arg("goal"), py::arg("sig"),
        "Independent exhaustive decision for the multiplicative fragment.");

  m.def("axiom_matrix",
        [](const Signature& sig, const std::string& system, int depth) {
          SearchBudget budget;
          budget.max_depth = depth;
          SystemKind kind = system_arg(system);
          py::dict out;
          for (const auto& label : sig.labels()) {
            py::dict row;
            for (Axiom a : all_axioms()) {
              SearchResult res = prove(kind, single_component(axiom_instance(a, label)), sig, budget);
              row[axiom_name(a)] = outcome_name(res.outcome);
            }
            out[py::str(label)] = row;
          }
          return out;
        },
        py::arg("sig"), py::arg("system") = "sell", py::arg("depth") = 12,
        "Label x axiom provability matrix, as nested dicts.");

  m.def("render_latex",
        [](const std::string& cert_text) { return render_latex(certificate_from_text(cert_text)); },
        py::arg("certificate"), "Standalone LaTeX proof tree for a certificate.");
}
