#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "zakharov/csv.hpp"
#include "zakharov/errors.hpp"
#include "zakharov/harness.hpp"

namespace py = pybind11;
using namespace zakharov;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

py::array_t<Complex> to_numpy(const Field& f) {
  const Field p = to_physical(f);
  const auto n = static_cast<py::ssize_t>(p.size());
  py::array_t<Complex> out({n}, {static_cast<py::ssize_t>(sizeof(Complex))});
  std::copy(p.values().begin(), p.values().end(), out.mutable_data());
  return out;
}

Field from_numpy(const GridPtr& grid, const CArray& a) {
  if (a.ndim() != 1 || static_cast<std::size_t>(a.shape(0)) != grid->modes()) {
    throw GridMismatchError("expected a 1-d array with " + std::to_string(grid->modes()) +
                            " entries");
  }
  std::vector<Complex> v(a.data(), a.data() + a.shape(0));
  return Field(grid, std::move(v), Representation::physical);
}

GridPtr grid_of(const FieldTriple& s) { return s.E.grid_ptr(); }

Dealiasing dealias_of(bool on) { return on ? Dealiasing::two_thirds : Dealiasing::none; }

ProblemSetup setup_for(const std::string& problem, std::size_t K, double L, double B, double C,
                       const std::optional<FieldTriple>& data) {
  ProblemSetup s;
  s.problem = parse_problem(problem);
  s.soliton = {B, C};
  if (s.problem == Problem::custom) {
    if (!data) throw std::invalid_argument("problem 'custom' needs data");
    s.grid = grid_of(*data);
    s.custom_data = data;
  } else if (s.problem == Problem::example1) {
    s.grid = make_grid(2.0 * std::numbers::pi, K ? K : 1024);
  } else {
    s.grid = make_grid(L > 0.0 ? L : 20.0 * std::numbers::pi, K ? K : 512);
  }
  return s;
}

py::dict params_dict(const Params& p) {
  py::dict d;
  for (const auto& [k, v] : p) d[py::str(k)] = v;
  return d;
}

Params params_from(const py::dict& d) {
  Params p;
  for (auto item : d) p.emplace_back(py::str(item.first), py::str(item.second));
  return p;
}

}  // namespace

PYBIND11_MODULE(_zakharov, m) {
  m.doc() = "Trigonometric integrators for the Zakharov system";

  py::register_exception<GridMismatchError>(m, "GridMismatchError", PyExc_ValueError);
  py::register_exception<SchemeMismatchError>(m, "SchemeMismatchError", PyExc_ValueError);
  py::register_exception<DomainTooSmallError>(m, "DomainTooSmallError", PyExc_ValueError);
  py::register_exception<StabilityError>(m, "StabilityError", PyExc_ValueError);
  py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<ReferenceDisagreementError>(m, "ReferenceDisagreementError",
                                                     PyExc_RuntimeError);

  py::class_<TorusGrid, std::shared_ptr<TorusGrid>>(m, "TorusGrid")
      .def(py::init<double, std::size_t>(), py::arg("length"), py::arg("modes"))
      .def_property_readonly("length", &TorusGrid::length)
      .def_property_readonly("modes", &TorusGrid::modes)
      .def_property_readonly("spacing", &TorusGrid::spacing)
      .def_property_readonly("max_wavenumber", &TorusGrid::max_wavenumber)
      .def("points", [](const TorusGrid& g) { return py::array(py::cast(g.points())); })
      .def("wavenumbers", [](const TorusGrid& g) { return py::array(py::cast(g.wavenumbers())); })
      .def("__repr__", [](const TorusGrid& g) {
        return "TorusGrid(length=" + std::to_string(g.length()) +
               ", modes=" + std::to_string(g.modes()) + ")";
      });

  py::class_<FieldTriple>(m, "State", "(E, u, u') on a grid; arrays are collocation values")
      .def(py::init([](std::shared_ptr<TorusGrid> grid, const CArray& E, const CArray& u,
                       const CArray& up) {
             return FieldTriple{to_spectral(from_numpy(grid, E)), to_spectral(from_numpy(grid, u)),
                                to_spectral(from_numpy(grid, up))};
           }),
           py::arg("grid"), py::arg("E"), py::arg("u"), py::arg("uprime"))
      .def_property_readonly("E", [](const FieldTriple& s) { return to_numpy(s.E); })
      .def_property_readonly("u", [](const FieldTriple& s) { return to_numpy(s.u); })
      .def_property_readonly("uprime", [](const FieldTriple& s) { return to_numpy(s.uprime); })
      .def_property_readonly("grid", [](const FieldTriple& s) {
        return std::make_shared<TorusGrid>(s.E.grid());
      });

  m.def("example1_data", [](std::size_t K) { return example1_data(make_grid(2.0 * std::numbers::pi, K)); },
        py::arg("K") = 1024);
  m.def(
      "soliton_exact",
      [](std::shared_ptr<TorusGrid> grid, double t, double B, double C) {
        return soliton_exact({B, C}, grid, t);
      },
      py::arg("grid"), py::arg("t"), py::arg("B") = 0.5, py::arg("C") = 0.15);

  m.def(
      "sobolev_norm",
      [](std::shared_ptr<TorusGrid> grid, const CArray& f, double s) {
        return sobolev_norm(from_numpy(grid, f), s);
      },
      py::arg("grid"), py::arg("values"), py::arg("s"));
  m.def("composite_error", &composite_error, py::arg("a"), py::arg("b"), py::arg("s") = 0.0);
  m.def("hamiltonian", [](const FieldTriple& s) { return hamiltonian(s).value; });
  m.def("l2_norm_E", py::overload_cast<const FieldTriple&>(&l2_norm_E));
  m.def("rk4_max_stable_tau", &rk4_max_stable_tau);

  m.def(
      "step",
      [](const FieldTriple& s, const std::string& method, double tau, std::size_t steps,
         bool dealias) {
        StepOptions o;
        o.dealias = dealias_of(dealias);
        return run(parse_method(method), s, tau, tau * static_cast<double>(steps),
                   RunOptions{steps ? steps : 1, {}, o})
            .final_state;
      },
      py::arg("state"), py::arg("method"), py::arg("tau"), py::arg("steps") = 1,
      py::arg("dealias") = false);

  m.def(
      "run",
      [](const FieldTriple& s, const std::string& method, double tau, double T,
         std::size_t sample_every, bool dealias) {
        StepOptions o;
        o.dealias = dealias_of(dealias);
        const Trajectory tr = run(parse_method(method), s, tau, T, RunOptions{sample_every, {}, o});
        std::vector<double> t, l2, h, mu, mup;
        for (const auto& smp : tr.samples) {
          t.push_back(smp.t);
          l2.push_back(smp.diagnostics.l2_E);
          h.push_back(smp.diagnostics.hamiltonian);
          mu.push_back(smp.diagnostics.mean_u);
          mup.push_back(smp.diagnostics.mean_uprime);
        }
        py::dict d;
        d["t"] = py::array(py::cast(t));
        d["l2_E"] = py::array(py::cast(l2));
        d["hamiltonian"] = py::array(py::cast(h));
        d["mean_u"] = py::array(py::cast(mu));
        d["mean_uprime"] = py::array(py::cast(mup));
        d["final"] = tr.final_state;
        d["steps"] = tr.steps;
        return d;
      },
      py::arg("state"), py::arg("method"), py::arg("tau"), py::arg("T"),
      py::arg("sample_every") = 1, py::arg("dealias") = false);

  py::class_<ConvergenceRow>(m, "ConvergenceRow")
      .def_readonly("tau", &ConvergenceRow::tau)
      .def_readonly("err_E", &ConvergenceRow::err_E)
      .def_readonly("err_u", &ConvergenceRow::err_u)
      .def_readonly("err_uprime", &ConvergenceRow::err_uprime)
      .def_readonly("err_composite", &ConvergenceRow::err_composite);
  py::class_<ConvergenceRecord>(m, "ConvergenceRecord")
      .def_readonly("rows", &ConvergenceRecord::rows)
      .def_readonly("T", &ConvergenceRecord::T)
      .def_readonly("s_index", &ConvergenceRecord::s_index)
      .def_property_readonly("params", [](const ConvergenceRecord& r) { return params_dict(r.params); });

  py::class_<RunRow>(m, "RunRow")
      .def_readonly("t", &RunRow::t)
      .def_readonly("l2_E", &RunRow::l2_E)
      .def_readonly("hamiltonian", &RunRow::hamiltonian)
      .def_readonly("dev_l2", &RunRow::dev_l2)
      .def_readonly("dev_H", &RunRow::dev_H)
      .def_readonly("mean_u", &RunRow::mean_u)
      .def_readonly("mean_uprime", &RunRow::mean_uprime);
  py::class_<RunRecord>(m, "RunRecord")
      .def_readonly("rows", &RunRecord::rows)
      .def_readonly("tau", &RunRecord::tau)
      .def_readonly("cfl", &RunRecord::cfl)
      .def_readonly("mean_zero_warning", &RunRecord::mean_zero_warning)
      .def_property_readonly("params", [](const RunRecord& r) { return params_dict(r.params); });

  m.def(
      "convergence_study",
      [](const std::string& scheme, const std::string& problem, std::vector<double> taus,
         double T, double s, std::size_t K, double L, double B, double C,
         std::optional<FieldTriple> data, bool dealias) {
        StudyOptions o;
        o.step.dealias = dealias_of(dealias);
        const ProblemSetup setup = setup_for(problem, K, L, B, C, data);
        py::gil_scoped_release release;
        return convergence_study(parse_method(scheme), setup, std::move(taus), T, s, o);
      },
      py::arg("scheme"), py::arg("problem") = "soliton", py::arg("taus"), py::arg("T") = 1.0,
      py::arg("s") = 0.0, py::arg("K") = 0, py::arg("L") = 0.0, py::arg("B") = 0.5,
      py::arg("C") = 0.15, py::arg("data") = std::nullopt, py::arg("dealias") = false);

  m.def(
      "fit_order",
      [](const std::vector<double>& taus, const std::vector<double>& errors) {
        if (taus.size() != errors.size()) throw std::invalid_argument("length mismatch");
        std::vector<std::pair<double, double>> rows;
        for (std::size_t i = 0; i < taus.size(); ++i) rows.emplace_back(taus[i], errors[i]);
        const OrderFit f = fit_order(rows);
        py::dict d;
        d["slope"] = f.slope;
        d["intercept"] = f.intercept;
        d["r2"] = f.r2;
        d["used"] = f.used;
        d["excluded"] = f.excluded;
        return d;
      },
      py::arg("taus"), py::arg("errors"));

  m.def(
      "conservation_run",
      [](const std::string& scheme, const std::string& problem, double cfl, double T,
         std::size_t K, double L, double B, double C, std::size_t sample_every,
         std::optional<FieldTriple> data, bool dealias) {
        RunOptions o;
        o.sample_every = sample_every;
        o.step.dealias = dealias_of(dealias);
        const ProblemSetup setup = setup_for(problem, K, L, B, C, data);
        py::gil_scoped_release release;
        return conservation_run(parse_method(scheme), setup, cfl, T, o);
      },
      py::arg("scheme"), py::arg("problem") = "soliton", py::arg("CFL") = 3.2,
      py::arg("T") = 1.0, py::arg("K") = 0, py::arg("L") = 0.0, py::arg("B") = 0.5,
      py::arg("C") = 0.15, py::arg("sample_every") = 1, py::arg("data") = std::nullopt,
      py::arg("dealias") = false);

  m.def("cfl_step", &cfl_step, py::arg("grid"), py::arg("CFL"), py::arg("T"));

  m.def("write_convergence", &csv::write_convergence, py::arg("record"), py::arg("path"));
  m.def("read_convergence", &csv::read_convergence, py::arg("path"));
  m.def("write_run", &csv::write_run, py::arg("record"), py::arg("path"));
  m.def(
      "write_snapshot",
      [](const FieldTriple& s, const py::dict& params, const std::filesystem::path& path) {
        csv::write_snapshot(s, params_from(params), path);
      },
      py::arg("state"), py::arg("params"), py::arg("path"));
  m.def("read_snapshot", &csv::read_snapshot, py::arg("path"));
}
