#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "subadd/bounds.hpp"
#include "subadd/cli.hpp"
#include "subadd/envelope.hpp"
#include "subadd/generators.hpp"
#include "subadd/interpolant.hpp"
#include "subadd/periodicity.hpp"

namespace py = pybind11;
using namespace subadd;

namespace {

std::vector<double> to_list(const Sequence& s) { return {s.values().begin(), s.values().end()}; }

std::optional<std::pair<std::size_t, std::size_t>> as_pair(const std::optional<IndexPair>& p) {
  if (!p) return std::nullopt;
  return std::make_pair(p->m, p->n);
}

const char* status_name(MaximalityStatus s) {
  switch (s) {
    case MaximalityStatus::dominated: return "dominated";
    case MaximalityStatus::not_dominated: return "not_dominated";
    case MaximalityStatus::w_not_subadditive: return "w_not_subadditive";
    case MaximalityStatus::w_above_u: return "w_above_u";
    case MaximalityStatus::length_mismatch: return "length_mismatch";
  }
  return "unknown";
}

Sequence generate_py(const std::string& family, std::size_t length, std::uint64_t seed, double a, double b,
                     double exponent, std::size_t period, double noise, double low, double high,
                     std::vector<double> pattern) {
  return generate({family_from_name(family), length, seed, a, b, exponent, period, noise, low, high,
                   std::move(pattern)});
}

}  // namespace

PYBIND11_MODULE(_subadd, m) {
  m.doc() = "Subadditive and periodic sequence analysis";

  py::class_<SubadditivityCheck>(m, "SubadditivityCheck")
      .def_readonly("holds", &SubadditivityCheck::holds)
      .def_property_readonly("violation", [](const SubadditivityCheck& c) { return as_pair(c.violation); })
      .def("__bool__", [](const SubadditivityCheck& c) { return c.holds; });

  m.def("is_subadditive",
        [](std::vector<double> u, double tol) { return is_subadditive(Sequence(std::move(u)), Tolerance{tol}); },
        py::arg("values"), py::arg("tol") = 1e-9);

  py::class_<EnvelopeResult>(m, "EnvelopeResult")
      .def_property_readonly("v", [](const EnvelopeResult& e) { return to_list(e.v); })
      .def_property_readonly("witnesses", [](const EnvelopeResult& e) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& w : e.witnesses) out.push_back(w.parts);
        return out;
      });

  m.def("subadditive_envelope", [](std::vector<double> u) { return subadditive_envelope(Sequence(std::move(u))); },
        py::arg("values"));

  m.def(
      "verify_maximality",
      [](std::vector<double> u, std::vector<double> v, std::vector<double> w, double tol) {
        const auto r = verify_maximality(Sequence(std::move(u)), Sequence(std::move(v)), Sequence(std::move(w)),
                                         Tolerance{tol});
        return py::make_tuple(status_name(r.status), r.index);
      },
      py::arg("u"), py::arg("v"), py::arg("w"), py::arg("tol") = 1e-9);

  py::class_<Interpolant>(m, "Interpolant")
      .def(py::init([](std::vector<double> u) { return Interpolant(Sequence(std::move(u))); }), py::arg("values"))
      .def("__call__", &Interpolant::operator(), py::arg("x"))
      .def_property_readonly("knots", [](const Interpolant& f) { return to_list(f.knots()); });

  py::class_<AuditResult>(m, "AuditResult")
      .def_readonly("holds", &AuditResult::holds)
      .def_readonly("max_deficit", &AuditResult::max_deficit)
      .def_readonly("x", &AuditResult::x)
      .def_readonly("y", &AuditResult::y)
      .def_readonly("pairs_checked", &AuditResult::pairs_checked);

  m.def(
      "audit_subadditivity",
      [](std::vector<double> u, double step, double tol) {
        return audit_subadditivity(Interpolant(Sequence(std::move(u))), step, Tolerance{tol});
      },
      py::arg("values"), py::arg("step") = 0.1, py::arg("tol") = 1e-9);

  m.def(
      "ratio_infimum",
      [](std::vector<double> u) {
        const auto r = ratio_infimum(Interpolant(Sequence(std::move(u))));
        return py::make_tuple(r.value, r.argmin);
      },
      py::arg("values"));

  py::class_<FeketeEstimate>(m, "FeketeEstimate")
      .def_readonly("ratios", &FeketeEstimate::ratios)
      .def_readonly("prefix_inf", &FeketeEstimate::prefix_inf)
      .def_readonly("prefix_argmin", &FeketeEstimate::prefix_argmin)
      .def_readonly("last_ratio", &FeketeEstimate::last_ratio)
      .def_readonly("gap", &FeketeEstimate::gap)
      .def_readonly("subadditive", &FeketeEstimate::subadditive);

  m.def(
      "fekete_estimate",
      [](std::vector<double> u, double tol) { return fekete_estimate(Sequence(std::move(u)), Tolerance{tol}); },
      py::arg("values"), py::arg("tol") = 1e-9);

  py::class_<BoundsReport>(m, "BoundsReport")
      .def_readonly("mean", &BoundsReport::mean)
      .def_readonly("height", &BoundsReport::height)
      .def_readonly("hh_lower", &BoundsReport::hh_lower)
      .def_readonly("hh_upper", &BoundsReport::hh_upper)
      .def_property_readonly("parity",
                             [](const BoundsReport& r) { return r.parity == Parity::even ? "even" : "odd"; })
      .def_readonly("subadditive", &BoundsReport::subadditive)
      .def_readonly("bracket_holds", &BoundsReport::bracket_holds);

  m.def(
      "hermite_hadamard_bounds",
      [](std::vector<double> u, double tol) { return hermite_hadamard_bounds(Sequence(std::move(u)), Tolerance{tol}); },
      py::arg("values"), py::arg("tol") = 1e-9);

  m.def(
      "epsilon_for_period",
      [](std::vector<double> u, std::size_t period) { return epsilon_for_period(Sequence(std::move(u)), period).epsilon; },
      py::arg("values"), py::arg("period"));

  py::class_<PeriodicityReport>(m, "PeriodicityReport")
      .def_readonly("period", &PeriodicityReport::period)
      .def_readonly("epsilon", &PeriodicityReport::epsilon)
      .def_property_readonly("periodic", [](const PeriodicityReport& r) { return to_list(r.periodic); })
      .def_property_readonly("residual", [](const PeriodicityReport& r) { return to_list(r.residual); })
      .def_readonly("max_residual", &PeriodicityReport::max_residual);

  m.def("decompose", [](std::vector<double> u, std::size_t period) { return decompose(Sequence(std::move(u)), period); },
        py::arg("values"), py::arg("period"));

  py::class_<PartialSumProfile>(m, "PartialSumProfile")
      .def_readonly("period", &PartialSumProfile::period)
      .def_readonly("profiles", &PartialSumProfile::profiles)
      .def_readonly("constant", &PartialSumProfile::constant)
      .def_readonly("all_constant", &PartialSumProfile::all_constant);

  m.def(
      "partial_sum_profile",
      [](std::vector<double> u, std::size_t period, double tol) {
        return partial_sum_profile(Sequence(std::move(u)), period, Tolerance{tol});
      },
      py::arg("values"), py::arg("period"), py::arg("tol") = 1e-9);

  m.def(
      "constant_partition",
      [](std::vector<double> u, std::size_t period, double tol) -> py::object {
        const auto cp = constant_partition(Sequence(std::move(u)), period, Tolerance{tol});
        if (!cp) return py::none();
        py::list pieces;
        for (const auto& p : cp.pieces) {
          py::dict d;
          d["value"] = p.value;
          d["classes"] = p.classes;
          d["indices"] = p.elements.indices;
          pieces.append(d);
        }
        return pieces;
      },
      py::arg("values"), py::arg("period"), py::arg("tol") = 1e-9);

  m.def(
      "scan_periods",
      [](std::vector<double> u, double max_eps) {
        const auto s = scan_periods(Sequence(std::move(u)), max_eps);
        std::vector<std::pair<std::size_t, double>> entries;
        for (const auto& e : s.entries) entries.emplace_back(e.period, e.epsilon);
        return py::make_tuple(entries, s.best_period);
      },
      py::arg("values"), py::arg("max_eps") = 0.0);

  m.def(
      "generate",
      [](const std::string& family, std::size_t length, std::uint64_t seed, double a, double b, double exponent,
         std::size_t period, double noise, double low, double high, std::vector<double> pattern) {
        return to_list(generate_py(family, length, seed, a, b, exponent, period, noise, low, high, std::move(pattern)));
      },
      py::arg("family"), py::arg("length"), py::arg("seed") = 0, py::arg("a") = 1.0, py::arg("b") = 0.0,
      py::arg("exponent") = 0.5, py::arg("period") = 1, py::arg("noise") = 0.0, py::arg("low") = -1.0,
      py::arg("high") = 1.0, py::arg("pattern") = std::vector<double>{});

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
