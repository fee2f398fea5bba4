#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <string>

#include "bohr/checks.hpp"
#include "bohr/errors.hpp"
#include "bohr/functionals.hpp"
#include "bohr/kernel.hpp"
#include "bohr/model.hpp"
#include "bohr/tables.hpp"

namespace py = pybind11;
using namespace bohr;

namespace {

Functional functional(const std::string& kind, std::optional<int> n,
                      std::optional<int> m, std::optional<int> p,
                      std::optional<std::string> variant) {
  const auto k = parse_kind(kind);
  if (!k) throw DomainError("unknown kind '" + kind + "'");
  std::optional<Variant> v;
  if (variant) {
    v = parse_variant(*variant);
    if (!v) throw DomainError("unknown variant '" + *variant + "'");
  }
  return make_functional(*k, n, m, p, v);
}

py::dict root_dict(const Functional& f, double alpha, const RootResult& r) {
  py::dict d;
  d["functional"] = f.label();
  d["variant"] = std::string(variant_name(f.variant));
  d["alpha"] = alpha;
  d["root"] = r.root;
  d["lo"] = r.lo;
  d["hi"] = r.hi;
  d["residual"] = r.residual_at_root;
  d["iterations"] = r.iterations;
  d["converged"] = r.converged;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bohr radii of the close-to-convex harmonic class";

  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const UnknownTable& e) {
      PyErr_SetString(PyExc_KeyError, e.what());
    }
  });

  m.def("log_tail", &log_tail, py::arg("first_index"), py::arg("r"));
  m.def("alt_log_tail", &alt_log_tail, py::arg("r"));
  m.def("dilog", &dilog, py::arg("r"));
  m.def("distance_bound", [](double a) { return distance_bound(Alpha(a)); },
        py::arg("alpha"));
  m.def("majorant", [](double r, double a) { return majorant(r, Alpha(a)); },
        py::arg("r"), py::arg("alpha"));
  m.def("minorant", [](double r, double a) { return minorant(r, Alpha(a)); },
        py::arg("r"), py::arg("alpha"));
  m.def("area_bound", [](double r, double a) { return area_bound(r, Alpha(a)); },
        py::arg("r"), py::arg("alpha"));

  m.def("kinds", [] {
    std::vector<std::string> out;
    for (Kind k : kAllKinds) out.emplace_back(kind_name(k));
    return out;
  });

  m.def(
      "lhs",
      [](const std::string& kind, double alpha, double r, std::optional<int> n,
         std::optional<int> mm, std::optional<int> p,
         std::optional<std::string> variant) {
        return lhs_closed(functional(kind, n, mm, p, variant),
                          extremal_profile(Alpha(alpha)), r);
      },
      py::arg("kind"), py::arg("alpha"), py::arg("r"), py::arg("n") = py::none(),
      py::arg("m") = py::none(), py::arg("p") = py::none(),
      py::arg("variant") = py::none());

  m.def(
      "lhs_series",
      [](const std::string& kind, double alpha, double r, std::optional<int> n,
         std::optional<int> mm, std::optional<int> p,
         std::optional<std::string> variant) {
        const auto s = lhs_series(functional(kind, n, mm, p, variant),
                                  extremal_profile(Alpha(alpha)), r);
        return py::make_tuple(s.value, s.tail_bound, s.terms_used);
      },
      py::arg("kind"), py::arg("alpha"), py::arg("r"), py::arg("n") = py::none(),
      py::arg("m") = py::none(), py::arg("p") = py::none(),
      py::arg("variant") = py::none());

  m.def(
      "radius",
      [](const std::string& kind, double alpha, std::optional<int> n,
         std::optional<int> mm, std::optional<int> p,
         std::optional<std::string> variant) {
        const Functional f = functional(kind, n, mm, p, variant);
        return root_dict(f, alpha, solve(radius_equation(f, Alpha(alpha))));
      },
      py::arg("kind"), py::arg("alpha"), py::arg("n") = py::none(),
      py::arg("m") = py::none(), py::arg("p") = py::none(),
      py::arg("variant") = py::none());

  m.def("table_ids", [] {
    std::vector<std::string> out;
    for (const auto& t : registry()) out.push_back(t.id);
    return out;
  });

  m.def(
      "reproduce",
      [](const std::string& id, std::optional<std::string> variant) {
        std::optional<Variant> v;
        if (variant) {
          v = parse_variant(*variant);
          if (!v) throw DomainError("unknown variant '" + *variant + "'");
        }
        const auto& t = find_table(id);
        const auto rep = reproduce(t, v);
        py::list cells;
        for (const auto& c : rep.cells) {
          py::dict d;
          d["row"] = row_label(t, c);
          d["col"] = col_label(t, c);
          d["alpha"] = c.alpha;
          d["functional"] = c.functional.label();
          d["printed"] = c.printed;
          d["recomputed"] = c.recomputed;
          d["diff"] = c.diff;
          d["status"] = std::string(status_name(c.status));
          d["note"] = c.note;
          cells.append(d);
        }
        py::dict out;
        out["id"] = rep.id;
        out["passed"] = rep.passed;
        out["flagged"] = rep.flagged;
        out["failed"] = rep.failed;
        out["cells"] = cells;
        return out;
      },
      py::arg("id"), py::arg("variant") = py::none());

  m.def(
      "run_suite",
      [](const std::string& name, const std::string& grid) {
        const auto rep =
            run_suite(name, grid == "coarse" ? Grid::kCoarse : Grid::kFull);
        py::list items;
        for (const auto& i : rep.items) {
          py::dict d;
          d["name"] = i.name;
          d["checks"] = i.checks;
          d["failures"] = i.failures;
          d["worst"] = i.worst;
          d["detail"] = i.detail;
          items.append(d);
        }
        py::dict out;
        out["suite"] = rep.suite;
        out["ok"] = rep.ok();
        out["checks"] = rep.checks();
        out["flagged_cells"] = rep.flagged_cells;
        out["items"] = items;
        return out;
      },
      py::arg("name"), py::arg("grid") = "full");
}
