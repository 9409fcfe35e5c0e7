#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ocreason/assumptions.hpp"
#include "ocreason/bcs.hpp"
#include "ocreason/closedness.hpp"
#include "ocreason/errors.hpp"
#include "ocreason/io.hpp"
#include "ocreason/reductions.hpp"
#include "ocreason/si.hpp"

namespace py = pybind11;
using namespace ocreason;
using io::Json;

namespace {

// Dicts cross the boundary as JSON text; the stdlib json module does the
// Python side.
Json to_json(const py::object& value) {
  if (py::isinstance<py::str>(value)) return io::parse_json(value.cast<std::string>());
  auto text = py::module_::import("json").attr("dumps")(value).cast<std::string>();
  return io::parse_json(text);
}

py::object to_py(const Json& value) {
  return py::module_::import("json").attr("loads")(value.dump());
}

io::Instance instance_of(const py::object& value) { return io::instance_from_json(to_json(value)); }

Preference preference_of(const py::object& spec, const io::Instance& inst) {
  if (py::isinstance<py::str>(spec)) {
    auto s = spec.cast<std::string>();
    if (s == "pareto") return io::preference_from_json(Json{{"kind", "pareto"}}, inst);
    if (s.rfind("player:", 0) == 0) {
      long player = 0;
      try {
        player = std::stol(s.substr(7));
      } catch (const std::exception&) {
        throw InputError("bad player in preference '" + s + "'");
      }
      return io::preference_from_json(Json{{"kind", "player"}, {"player", player}}, inst);
    }
    throw InputError("preference must be 'pareto', 'player:N' or a dict");
  }
  return io::preference_from_json(to_json(spec), inst);
}

SiCertificate certificate_of(const py::object& orders, const py::object& semilattices,
                             const Bcs& bcs) {
  SiCertificate cert;
  if (!orders.is_none()) cert.orders = io::orders_from_json(to_json(orders), bcs);
  if (!semilattices.is_none()) cert.joins = io::joins_from_json(to_json(semilattices), bcs);
  return cert;
}

py::dict closedness_result(const ClosednessReport& rep, const Bcs& bcs) {
  py::dict out;
  out["closed"] = rep.closed;
  if (rep.witness) {
    const auto& w = *rep.witness;
    const auto& c = bcs.constraints().at(w.constraint);
    const auto& dx = bcs.variable(bcs.require(c.source())).domain;
    const auto& dy = bcs.variable(bcs.require(c.target())).domain;
    auto pair = [&](Correspondence::Pair p) { return py::make_tuple(dx[p.first], dy[p.second]); };
    py::dict wd;
    wd["constraint"] = w.constraint;
    wd["first"] = pair(w.first);
    wd["second"] = pair(w.second);
    wd["missing"] = pair(w.missing);
    out["witness"] = wd;
  }
  return out;
}

py::object propagate(const py::object& instance) {
  auto inst = instance_of(instance);
  auto p = path_consistency(inst.bcs);
  Json out{{"has_empty", p.has_empty},
           {"passes", p.passes},
           {"structure", io::bcs_to_json(p.to_bcs())}};
  return to_py(out);
}

py::object solve(const py::object& instance, std::optional<std::size_t> limit) {
  auto inst = instance_of(instance);
  Json out = Json::array();
  for (const auto& a : enumerate_satisfying(inst.bcs, limit)) {
    out.push_back(io::assignment_to_json(a, inst.bcs));
  }
  return to_py(out);
}

py::dict check_si(const py::object& instance, std::optional<std::string> x,
                  std::optional<std::string> y, const py::object& pref, bool strict,
                  const std::string& mode, const py::object& orders,
                  const py::object& semilattices) {
  auto inst = instance_of(instance);
  if (!x || !y) {
    if (x || y) throw InputError("give both x and y, or neither");
    if (!inst.pair) throw InputError("no pair given and the instance designates none");
    x = inst.pair->first;
    y = inst.pair->second;
  }
  auto v = decide_si(inst.bcs, *x, *y, preference_of(pref, inst), strict, parse_si_mode(mode),
                     certificate_of(orders, semilattices, inst.bcs));
  py::dict out;
  out["yes"] = v.yes;
  out["mode"] = to_string(v.mode);
  out["certified"] = v.certified;
  out["counterexample"] =
      v.counterexample ? to_py(io::assignment_to_json(*v.counterexample, inst.bcs)) : py::none();
  return out;
}

std::vector<std::pair<std::string, std::string>> find_si(
    const py::object& instance, std::optional<std::string> on, const py::object& pref,
    bool strict, const std::string& mode, const py::object& orders,
    const py::object& semilattices) {
  auto inst = instance_of(instance);
  auto p = preference_of(pref, inst);
  auto m = parse_si_mode(mode);
  auto cert = certificate_of(orders, semilattices, inst.bcs);
  if (!on) return find_any_si(inst.bcs, p, strict, m, cert);
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& y : find_si_on(inst.bcs, *on, p, strict, m, cert)) out.emplace_back(*on, y);
  return out;
}

py::object search_orders(const py::object& instance) {
  auto inst = instance_of(instance);
  auto o = search_max_orders(inst.bcs);
  if (!o) return py::none();
  return to_py(io::orders_to_json(*o, inst.bcs));
}

py::object assumption_orders(const py::object& instance) {
  auto inst = instance_of(instance);
  return to_py(io::orders_to_json(orders_for_assumptions(inst.games, inst.bcs), inst.bcs));
}

py::object build_assumptions(const py::list& games, const py::object& selection) {
  io::Instance inst;
  std::size_t k = 0;
  for (const auto& g : games) {
    inst.games.push_back(io::game_from_json(to_json(py::reinterpret_borrow<py::object>(g)),
                                            "G" + std::to_string(++k)));
  }
  inst.bcs = build_assumption_bcs(inst.games, io::selection_from_json(to_json(selection)));
  return to_py(io::instance_to_json(inst));
}

py::tuple join_incompleteness() {
  auto ji = join_incompleteness_instance();
  return py::make_tuple(to_py(io::bcs_to_json(ji.bcs)), to_py(io::semilattices_to_json(ji.edges)));
}

py::object csp_to_si(const py::object& source, bool epsilon) {
  auto inst = csp_to_si_games(instance_of(source).bcs, epsilon);
  io::Instance out{inst.bcs(), inst.games, std::nullopt,
                   std::make_pair(inst.gamma, inst.gamma_prime)};
  return to_py(io::instance_to_json(out));
}

py::dict augment(const py::object& source, const std::string& switch_id) {
  auto aug = augment_always_satisfiable(instance_of(source).bcs, switch_id);
  py::dict out;
  out["structure"] = to_py(io::bcs_to_json(aug.bcs));
  out["anchor"] = py::make_tuple(aug.anchor_variable, aug.anchor_value);
  out["off_values"] = aug.off_values;
  return out;
}

py::dict implication(const py::object& source, const std::string& variable,
                     const std::string& value) {
  auto imp = implication_instance(instance_of(source).bcs, variable, value);
  py::dict out;
  out["structure"] = to_py(io::bcs_to_json(imp.bcs));
  out["claim"] = to_py(io::correspondence_to_json(imp.claim(), imp.bcs));
  out["holds"] = implies(imp.bcs, imp.claim());
  return out;
}

}  // namespace

PYBIND11_MODULE(ocreason, m) {
  m.doc() = "Outcome-correspondence reasoning over binary constraint structures";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  (void)input_error;

  m.def("propagate", &propagate, py::arg("instance"),
        "Path-consistency fixed point: {'has_empty', 'passes', 'structure'}.");
  m.def("solve", &solve, py::arg("instance"), py::arg("limit") = py::none(),
        "Satisfying assignments in lexicographic order.");
  m.def("count_solutions", [](const py::object& instance) {
    return count_satisfying(instance_of(instance).bcs);
  }, py::arg("instance"));
  m.def("check_si", &check_si, py::arg("instance"), py::arg("x") = py::none(),
        py::arg("y") = py::none(), py::arg("pref") = "pareto", py::arg("strict") = false,
        py::arg("mode") = "exact", py::arg("orders") = py::none(),
        py::arg("semilattices") = py::none(),
        "Is y a safe improvement on x? Defaults to the instance's designated pair.");
  m.def("find_si", &find_si, py::arg("instance"), py::arg("on") = py::none(),
        py::arg("pref") = "pareto", py::arg("strict") = false, py::arg("mode") = "exact",
        py::arg("orders") = py::none(), py::arg("semilattices") = py::none());
  m.def("max_closed", [](const py::object& instance, const py::object& orders) {
    auto inst = instance_of(instance);
    return closedness_result(is_max_closed(inst.bcs, io::orders_from_json(to_json(orders), inst.bcs)),
                             inst.bcs);
  }, py::arg("instance"), py::arg("orders"));
  m.def("join_closed", [](const py::object& instance, const py::object& semilattices) {
    auto inst = instance_of(instance);
    return closedness_result(
        is_join_closed(inst.bcs, io::joins_from_json(to_json(semilattices), inst.bcs)), inst.bcs);
  }, py::arg("instance"), py::arg("semilattices"));
  m.def("search_orders", &search_orders, py::arg("instance"),
        "Certifying orders for max-closedness, or None.");
  m.def("assumption_orders", &assumption_orders, py::arg("instance"));
  m.def("build_assumptions", &build_assumptions, py::arg("games"), py::arg("selection"));

  m.def("montanari", [] { return to_py(io::bcs_to_json(montanari_instance())); });
  m.def("join_incompleteness", &join_incompleteness, "(structure, semilattices)");
  m.def("csp_to_si", &csp_to_si, py::arg("source"), py::arg("epsilon") = false);
  m.def("augment", &augment, py::arg("source"), py::arg("switch_id") = "X0");
  m.def("implication", &implication, py::arg("source"), py::arg("variable"), py::arg("value"));
}
