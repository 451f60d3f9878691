#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "lamlab/cbneed.hpp"
#include "lamlab/derivation.hpp"
#include "lamlab/derivation_dyn.hpp"
#include "lamlab/harness.hpp"
#include "lamlab/json_io.hpp"
#include "lamlab/neededness.hpp"
#include "lamlab/reduction.hpp"
#include "lamlab/residuals.hpp"

namespace py = pybind11;
using namespace lamlab;

namespace {

// Thin value wrappers: the shared_ptr<const ...> handles stay internal and
// everything crossing the boundary is a string, int or list.

struct PyTerm {
  Term t;
};

struct PyDerivation {
  Derivation d;
};

std::vector<std::string> occ_list(const OccurrenceSet& s) {
  std::vector<std::string> out;
  for (const Occurrence& o : s) out.push_back(o.display());
  return out;
}

Occurrence occ(const std::string& s) { return Occurrence::parse(s); }

PyTerm wrap(Term t) { return PyTerm{std::move(t)}; }

}  // namespace

PYBIND11_MODULE(lamlab, m) {
  m.doc() = "lambda-calculus laboratory: strategies, residuals, neededness, "
            "intersection typings and call-by-need";

  py::register_exception<LamError>(m, "LamError");

  py::class_<PyTerm>(m, "Term")
      .def("__str__", [](const PyTerm& s) { return print_term(s.t); })
      .def("__repr__", [](const PyTerm& s) { return "Term(" + print_term(s.t) + ")"; })
      .def("__eq__",
           [](const PyTerm& a, const PyTerm& b) { return alpha_eq(a.t, b.t); })
      .def("__hash__", [](const PyTerm& s) { return alpha_hash(s.t); })
      .def_property_readonly("size", [](const PyTerm& s) { return term_size(s.t); })
      .def_property_readonly("is_pure", [](const PyTerm& s) { return is_pure(s.t); })
      .def_property_readonly("free_vars", [](const PyTerm& s) { return free_vars(s.t); })
      .def("to_json", [](const PyTerm& s) { return term_to_json(s.t).dump(); });

  m.def(
      "parse",
      [](const std::string& src, bool allow_closures) {
        return wrap(parse_term(src, allow_closures));
      },
      py::arg("src"), py::arg("allow_closures") = true);
  m.def("term_from_json",
        [](const std::string& j) { return wrap(term_from_json(nlohmann::json::parse(j))); });
  m.def("substitute", [](const PyTerm& t, const std::string& x, const PyTerm& u) {
    return wrap(substitute(t.t, x, u.t));
  });

  m.def("occurrences", [](const PyTerm& t) { return occ_list(occurrences(t.t)); });
  m.def("subterm_at",
        [](const PyTerm& t, const std::string& p) { return wrap(subterm_at(t.t, occ(p))); });
  m.def("redex_occurrences",
        [](const PyTerm& t) { return occ_list(redex_occurrences(t.t)); });
  m.def("contract",
        [](const PyTerm& t, const std::string& r) { return wrap(contract(t.t, occ(r))); });

  py::class_<StrategyResult>(m, "StrategyResult")
      .def_property_readonly("status",
                             [](const StrategyResult& r) {
                               return r.status == StrategyStatus::Normalized
                                          ? std::string("normalized")
                                          : std::string("fuel");
                             })
      .def_property_readonly("final", [](const StrategyResult& r) { return wrap(r.final()); })
      .def_property_readonly("initial",
                             [](const StrategyResult& r) { return wrap(r.trace.initial); })
      .def_property_readonly("steps",
                             [](const StrategyResult& r) {
                               std::vector<std::pair<std::string, PyTerm>> out;
                               for (const TraceStep& s : r.trace.steps)
                                 out.emplace_back(s.occ.display(), wrap(s.after));
                               return out;
                             })
      .def("to_json", [](const StrategyResult& r) { return trace_to_json(r).dump(); });

  m.def(
      "reduce",
      [](const PyTerm& t, const std::string& strategy, int fuel) {
        Strategy s = strategy == "name"      ? Strategy::Name
                     : strategy == "head"    ? Strategy::Head
                     : strategy == "leftmost" ? Strategy::Leftmost
                                              : throw LamError("unknown strategy " + strategy);
        return run_strategy(t.t, s, fuel);
      },
      py::arg("t"), py::arg("strategy") = "name", py::arg("fuel") = 10000);

  m.def("residuals_step",
        [](const PyTerm& t, const std::string& p, const std::string& r) {
          return occ_list(residuals_step(t.t, occ(p), occ(r)));
        });

  m.def(
      "classify",
      [](const PyTerm& t, const std::string& r, int fuel) {
        NeedClass c = classify(t.t, occ(r), fuel);
        py::dict out;
        out["needed"] = to_string(c.needed);
        out["head_needed"] = to_string(c.head_needed);
        out["whnd_needed"] = to_string(c.whnd_needed);
        return out;
      },
      py::arg("t"), py::arg("r"), py::arg("fuel") = 10000);

  py::class_<PyDerivation>(m, "Derivation")
      .def("__repr__", [](const PyDerivation& s) { return print_judgement(s.d); })
      .def_property_readonly("judgement",
                             [](const PyDerivation& s) { return print_judgement(s.d); })
      .def_property_readonly("subject", [](const PyDerivation& s) { return wrap(s.d->subject); })
      .def_property_readonly("type", [](const PyDerivation& s) { return print_type(s.d->type); })
      .def_property_readonly("size", [](const PyDerivation& s) { return deriv_size(s.d); })
      .def_property_readonly(
          "typed_occurrences",
          [](const PyDerivation& s) { return occ_list(typed_occurrences(s.d)); })
      .def("to_json", [](const PyDerivation& s) { return derivation_to_json(s.d).dump(); });

  m.def("derivation_from_json", [](const std::string& j) {
    Derivation d = derivation_from_json(nlohmann::json::parse(j));
    validate(d);
    return PyDerivation{d};
  });
  m.def(
      "infer_principal",
      [](const PyTerm& t, int fuel) -> std::optional<PyDerivation> {
        std::optional<Derivation> d = infer_principal(t.t, fuel);
        if (!d) return std::nullopt;
        return PyDerivation{*d};
      },
      py::arg("t"), py::arg("fuel") = 10000);
  m.def(
      "whnd_redexes",
      [](const PyTerm& t, int fuel) -> std::optional<std::vector<std::string>> {
        std::optional<OccurrenceSet> s = whnd_redexes_by_typing(t.t, fuel);
        if (!s) return std::nullopt;
        return occ_list(*s);
      },
      py::arg("t"), py::arg("fuel") = 10000);

  py::class_<NeedResult>(m, "NeedResult")
      .def_property_readonly("status",
                             [](const NeedResult& r) {
                               switch (r.outcome) {
                                 case NeedOutcome::Answer: return std::string("answer");
                                 case NeedOutcome::Stuck: return std::string("stuck");
                                 case NeedOutcome::FuelExhausted: return std::string("fuel");
                               }
                               return std::string("?");
                             })
      .def_property_readonly("final", [](const NeedResult& r) { return wrap(r.final_term); })
      .def_property_readonly("stuck_var", [](const NeedResult& r) { return r.stuck_var; })
      .def_property_readonly("steps",
                             [](const NeedResult& r) {
                               std::vector<std::pair<std::string, PyTerm>> out;
                               for (const NeedTraceStep& s : r.steps)
                                 out.emplace_back(s.rule, wrap(s.after));
                               return out;
                             })
      .def("to_json", [](const NeedResult& r) { return need_result_to_json(r).dump(); });

  m.def(
      "eval_need", [](const PyTerm& t, int fuel) { return eval_need(t.t, fuel); },
      py::arg("t"), py::arg("fuel") = 10000);
  m.def("unfold", [](const PyTerm& t) { return wrap(unfold(t.t)); });

  m.def(
      "check_equivalences",
      [](const PyTerm& t, int fuel) {
        EquivalenceRow row = check_equivalences(t.t, fuel);
        py::dict out;
        out["typable"] = to_string(row.typable);
        out["wn_name"] = to_string(row.wn_name);
        out["wn_whnd"] = to_string(row.wn_whnd);
        out["wn_need"] = to_string(row.wn_need);
        out["mismatches"] = row.mismatches;
        return out;
      },
      py::arg("t"), py::arg("fuel") = 2000);

  m.def(
      "generate_corpus",
      [](std::uint64_t seed, int max_size, int count, bool closed_only, bool include_zoo) {
        CorpusSpec spec{seed, max_size, count, closed_only, include_zoo};
        std::vector<PyTerm> out;
        for (Term& t : generate_corpus(spec)) out.push_back(wrap(std::move(t)));
        return out;
      },
      py::arg("seed") = 1, py::arg("max_size") = 14, py::arg("count") = 1000,
      py::arg("closed_only") = false, py::arg("include_zoo") = true);

  m.def(
      "check_observational",
      [](const PyTerm& t, const PyTerm& u, int max_ctx_size, int fuel) {
        ObsResult r = check_observational(t.t, u.t, max_ctx_size, fuel);
        py::dict out;
        out["agree"] = r.agree;
        out["context"] = r.context_skeleton ? py::object(py::str(print_term(*r.context_skeleton)))
                                            : py::object(py::none());
        out["detail"] = r.detail;
        return out;
      },
      py::arg("t"), py::arg("u"), py::arg("max_ctx_size") = 6, py::arg("fuel") = 200);
}
