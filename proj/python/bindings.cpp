#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "meanbounds/bounds.hpp"
#include "meanbounds/kernels.hpp"
#include "meanbounds/means.hpp"
#include "meanbounds/series.hpp"

namespace py = pybind11;
using namespace meanbounds;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bivariate means, their kernel functions and sharp power/Lehmer mean bounds.";

  py::class_<PositivePair>(m, "PositivePair")
      .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("a", &PositivePair::a)
      .def_property_readonly("b", &PositivePair::b)
      .def_property_readonly("min", &PositivePair::min)
      .def_property_readonly("max", &PositivePair::max)
      .def("__repr__", [](const PositivePair& p) {
        return "PositivePair(" + std::to_string(p.a()) + ", " + std::to_string(p.b()) + ")";
      });

  py::enum_<MeanTag>(m, "MeanTag")
      .value("Power", MeanTag::Power)
      .value("Lehmer", MeanTag::Lehmer)
      .value("Harmonic", MeanTag::Harmonic)
      .value("Geometric", MeanTag::Geometric)
      .value("Arithmetic", MeanTag::Arithmetic)
      .value("Quadratic", MeanTag::Quadratic)
      .value("Logarithmic", MeanTag::Logarithmic)
      .value("Identric", MeanTag::Identric)
      .value("FirstSeiffert", MeanTag::FirstSeiffert)
      .value("Yang", MeanTag::Yang)
      .value("Toader", MeanTag::Toader)
      .value("NeumanSandor", MeanTag::NeumanSandor)
      .value("Sandor", MeanTag::Sandor)
      .value("SecondSeiffert", MeanTag::SecondSeiffert)
      .value("SandorYang", MeanTag::SandorYang);

  py::class_<MeanKind>(m, "MeanKind")
      .def_readonly("tag", &MeanKind::tag)
      .def_readonly("param", &MeanKind::param)
      .def_static("power", &MeanKind::power, py::arg("p"))
      .def_static("lehmer", &MeanKind::lehmer, py::arg("p"))
      .def_static("of", &MeanKind::of, py::arg("tag"))
      .def(py::self == py::self)
      .def("__repr__", [](const MeanKind& k) { return "MeanKind('" + to_string(k) + "')"; })
      .def("__str__", [](const MeanKind& k) { return to_string(k); });

  m.def("parse_mean", &parse_mean, py::arg("text"));
  m.def("parse_real", &parse_real, py::arg("text"));
  m.def("half_log_ratio", [](double a, double b) { return half_log_ratio(PositivePair(a, b)); },
        py::arg("a"), py::arg("b"));
  m.def("eval_mean", [](const MeanKind& k, double a, double b) {
        return eval_mean(k, PositivePair(a, b));
      }, py::arg("kind"), py::arg("a"), py::arg("b"));
  m.def("eval_mean", [](const std::string& name, double a, double b) {
        return eval_mean(parse_mean(name), PositivePair(a, b));
      }, py::arg("name"), py::arg("a"), py::arg("b"));
  m.def("log_normalized_mean", &log_normalized_mean, py::arg("kind"), py::arg("t"));

  m.def("f1", [](double t, double p) { return f1({t, p}); }, py::arg("t"), py::arg("p"));
  m.def("f2", [](double t, double p) { return f2({t, p}); }, py::arg("t"), py::arg("p"));
  m.def("F", [](double t, double p) { return F({t, p}); }, py::arg("t"), py::arg("p"));
  m.def("u_n", [](int n, double p) { return u_n<double>(n, p); }, py::arg("n"), py::arg("p"));
  m.def("f2_series_coefficients", &f2_series_coefficients, py::arg("p"), py::arg("terms"));

  m.def("detect_sign_change", [](const std::vector<double>& c) { return detect_sign_change(c); },
        py::arg("coeffs"));
  m.def("series_positive_root", [](const std::vector<double>& c, double radius) {
        const auto seq = CoefficientSeq::from(c);
        if (!seq) throw py::value_error("coefficients do not change sign exactly once");
        return series_positive_root(*seq, radius);
      }, py::arg("coeffs"), py::arg("radius"));

  py::enum_<Family>(m, "Family").value("Power", Family::Power).value("Lehmer", Family::Lehmer);
  py::enum_<Side>(m, "Side").value("Lower", Side::Lower).value("Upper", Side::Upper);

  py::class_<EndpointReport>(m, "EndpointReport")
      .def_readonly("mean", &EndpointReport::mean)
      .def_readonly("family", &EndpointReport::family)
      .def_readonly("side", &EndpointReport::side)
      .def_readonly("closed_form", &EndpointReport::closed_form)
      .def_readonly("closed_form_expression", &EndpointReport::closed_form_expression)
      .def_readonly("numeric", &EndpointReport::numeric)
      .def_readonly("witness_t", &EndpointReport::witness_t)
      .def_readonly("tolerance_used", &EndpointReport::tolerance_used)
      .def("within_tolerance", &EndpointReport::within_tolerance);

  m.def("closed_form_p0", &closed_form_p0);
  m.def("recover_p0_numeric", &recover_p0_numeric);
  m.def("sharp_lambda", &sharp_lambda, py::arg("p"));
  m.def("find_t0", &find_t0, py::arg("p"));
  m.def("best_exponent", [](const MeanKind& k, Family f, Side s) { return best_exponent(k, f, s); },
        py::arg("mean"), py::arg("family"), py::arg("side"));
  m.def("find_witness", [](const MeanKind& k, Family f, double param, Side s) {
        return find_witness(k, f, param, s);
      }, py::arg("mean"), py::arg("family"), py::arg("param"), py::arg("side"));
  m.def("verify_chain_corollary31", [](double a, double b) {
        return verify_chain_corollary31(PositivePair(a, b));
      }, py::arg("a"), py::arg("b"));
  m.def("verify_sandor_yang_between_a_q", [](double a, double b) {
        return verify_sandor_yang_between_a_q(PositivePair(a, b));
      }, py::arg("a"), py::arg("b"));
  m.def("sharp_constant_table", [] {
    py::list rows;
    for (const auto& e : sharp_constant_table()) rows.append(py::make_tuple(e.label, e.expression, e.value));
    return rows;
  });
}
