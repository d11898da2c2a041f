// Python bindings for the core operations: series arithmetic, canonical maps,
// admissibility verdicts, subordination sampling/falsification and the order
// formulas.
#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subord/admissibility.hpp"
#include "subord/contact.hpp"
#include "subord/examples.hpp"
#include "subord/gft.hpp"
#include "subord/report.hpp"
#include "subord/subordination.hpp"
#include "subord/suites.hpp"

namespace py = pybind11;
using namespace subord;

namespace {

std::string status_name(AdmissibleStatus s) {
    switch (s) {
        case AdmissibleStatus::AdmissibleExact: return "AdmissibleExact";
        case AdmissibleStatus::AdmissibleNumeric: return "AdmissibleNumeric";
        case AdmissibleStatus::Violation: return "Violation";
        case AdmissibleStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

PsiSpec psi_from_arg(const py::object& psi) {
    if (py::isinstance<PsiSpec>(psi)) return psi.cast<PsiSpec>();
    if (py::isinstance<py::sequence>(psi)) {
        const auto seq = psi.cast<std::vector<cplx>>();
        if (seq.size() != 5)
            throw std::invalid_argument("psi: expected (c0, c_r, c_r2, c_s, c_t)");
        return PsiSpec::make_structured(seq[0], seq[1], seq[2], seq[3], seq[4]);
    }
    auto fn = psi.cast<std::function<cplx(cplx, cplx, cplx)>>();
    return PsiSpec::make_generic(std::move(fn));
}

}  // namespace

PYBIND11_MODULE(subord, m) {
    m.doc() = "second-order differential subordination toolkit (fixed initial coefficient)";

    py::class_<Series>(m, "Series")
        .def(py::init<std::vector<cplx>>(), py::arg("coefficients"))
        .def_property_readonly("degree", &Series::degree)
        .def_property_readonly("coefficients",
                               [](const Series& s) { return s.coefficients(); })
        .def("__call__", &Series::evaluate, py::arg("z"))
        .def("derivative", &Series::derivative)
        .def("truncated", &Series::truncated, py::arg("degree"))
        .def("__repr__", [](const Series& s) {
            return "<Series degree " + std::to_string(s.degree()) + ">";
        });

    py::class_<FixedClassSpec>(m, "FixedClassSpec")
        .def(py::init([](cplx a, int n, double beta) {
                 FixedClassSpec spec{a, n, beta};
                 spec.validate();
                 return spec;
             }),
             py::arg("a"), py::arg("n"), py::arg("beta"))
        .def_readonly("a", &FixedClassSpec::a)
        .def_readonly("n", &FixedClassSpec::n)
        .def_readonly("beta", &FixedClassSpec::beta);

    m.def("make_member",
          [](const FixedClassSpec& spec, const std::vector<cplx>& tail, int degree) {
              return make_member(spec, tail, degree);
          },
          py::arg("spec"), py::arg("tail") = std::vector<cplx>{}, py::arg("degree") = -1);
    m.def("compose", &compose, py::arg("outer"), py::arg("inner"), py::arg("degree") = -1);
    m.def("sqrt_series", &sqrt_series, py::arg("s"));
    m.def("orbit", &orbit, py::arg("p"), py::arg("z"),
          "(p(z), z p'(z), z^2 p''(z))");

    py::class_<CanonicalMap>(m, "CanonicalMap")
        .def_static("disk", &CanonicalMap::disk, py::arg("M"), py::arg("a") = cplx(0.0))
        .def_static("halfplane", &CanonicalMap::halfplane, py::arg("alpha"), py::arg("a"))
        .def_static("affine", &CanonicalMap::affine, py::arg("a0"), py::arg("a1"))
        .def("dilate", &CanonicalMap::dilate, py::arg("rho"))
        .def("__call__", &CanonicalMap::eval, py::arg("z"))
        .def("derivatives", &CanonicalMap::derivatives, py::arg("z"))
        .def("invert", &CanonicalMap::invert, py::arg("w"))
        .def("contains",
             [](const CanonicalMap& q, cplx w) {
                 const auto mem = q.contains(w);
                 return py::make_tuple(mem.inside, mem.margin);
             },
             py::arg("w"))
        .def("to_series", &CanonicalMap::to_series, py::arg("degree"))
        .def_property_readonly("q0", &CanonicalMap::q0)
        .def_property_readonly("qprime0", &CanonicalMap::qprime0)
        .def("__repr__", &CanonicalMap::describe);

    m.def("schwarz_bound", &schwarz_bound, py::arg("a1_mag"), py::arg("r"));
    m.def("schwarz_extremal", &schwarz_extremal, py::arg("a1"), py::arg("t"),
          py::arg("degree") = 64);
    m.def("m_lower_bound", &m_lower_bound, py::arg("n"), py::arg("qprime0_mag"), py::arg("beta"),
          py::arg("r0"));

    py::class_<PsiSpec>(m, "PsiSpec")
        .def_static("structured", &PsiSpec::make_structured, py::arg("c0"), py::arg("c_r"),
                    py::arg("c_r2"), py::arg("c_s"), py::arg("c_t"))
        .def("__call__", &PsiSpec::eval, py::arg("r"), py::arg("s"), py::arg("t"));

    py::class_<OmegaRegion>(m, "OmegaRegion")
        .def_static("disk", &OmegaRegion::disk, py::arg("center"), py::arg("radius"))
        .def_static("halfplane", &OmegaRegion::halfplane, py::arg("rotation"), py::arg("offset"))
        .def_static("image_of", &OmegaRegion::image_of, py::arg("h"))
        .def("contains", &OmegaRegion::contains, py::arg("w"))
        .def("__repr__", &OmegaRegion::describe);

    m.def("check_admissible",
          [](const py::object& psi, const OmegaRegion& omega, const CanonicalMap& q, int n,
             double beta) {
              const AdmissibilityVerdict v = check_admissible(psi_from_arg(psi), omega, q, n, beta);
              py::dict d;
              d["status"] = status_name(v.status);
              d["admissible"] = v.admissible();
              d["margin"] = v.margin;
              d["psi_value"] = v.psi_value;
              d["worst"] = py::make_tuple(v.worst.theta, v.worst.m, v.worst.r0, v.worst.s0,
                                          v.worst.t0);
              d["note"] = v.note;
              return d;
          },
          py::arg("psi"), py::arg("omega"), py::arg("q"), py::arg("n"), py::arg("beta"));
    m.def("sharp_disk_radius",
          [](const py::object& psi, const CanonicalMap& q, int n, double beta) {
              return sharp_disk_radius(psi_from_arg(psi), q, n, beta);
          },
          py::arg("psi"), py::arg("q"), py::arg("n"), py::arg("beta"));
    m.def("min_admissible_n",
          [](const py::object& psi, const CanonicalMap& q, double beta, const OmegaRegion& omega) {
              return min_admissible_n(psi_from_arg(psi), q, beta, omega);
          },
          py::arg("psi"), py::arg("q"), py::arg("beta"), py::arg("omega"));

    m.def("is_subordinate",
          [](const Series& p, const CanonicalMap& q, double r_max) {
              const auto r = is_subordinate(p, q, r_max);
              return py::make_tuple(r.subordinate, r.margin, r.witness);
          },
          py::arg("p"), py::arg("q"), py::arg("r_max") = 0.99);
    m.def("sample_subordinate", &sample_subordinate, py::arg("spec"), py::arg("q"),
          py::arg("seed"), py::arg("degree") = 64);
    m.def("falsify_example",
          [](const std::string& example, int n, double beta, double M, long samples,
             std::uint64_t seed, double shrink) {
              ExampleCase ex = example_case(example, n, beta, M);
              FalsifyOptions opts;
              opts.conclusion_shrink = shrink;
              const FalsificationReport rep =
                  falsify_implication(ex.psi, ex.omega, ex.map, ex.spec, samples, seed,
                                      EvalGrid::defaults(), opts);
              return py::module_::import("json").attr("loads")(
                  falsification_to_json(rep).dump());
          },
          py::arg("example"), py::arg("n") = 1, py::arg("beta") = 1.0, py::arg("M") = 1.0,
          py::arg("samples") = 100, py::arg("seed") = 1, py::arg("shrink") = 1.0,
          "built-in falsification case; returns the report as a dict");

    m.def("starlike_order_of_convex",
          [](double b) { return starlike_order_of_convex(b).alpha; }, py::arg("a2_mag"));
    m.def("sqrt_deriv_order", &sqrt_deriv_order, py::arg("a2_mag"));
    m.def("sqrt_ratio_order", &sqrt_ratio_order, py::arg("a2_mag"));

    py::enum_<ConvexKind>(m, "ConvexKind")
        .value("HalfplaneType", ConvexKind::HalfplaneType)
        .value("LogType", ConvexKind::LogType)
        .value("Identity", ConvexKind::Identity);

    m.def("convex_family",
          [](ConvexKind kind, cplx c, int degree) {
              const FamilyMember fm = convex_family(kind, c, degree);
              return py::make_tuple(fm.f, fm.a2, fm.name);
          },
          py::arg("kind"), py::arg("c"), py::arg("degree") = 2048);

    py::enum_<OrderTheorem>(m, "OrderTheorem")
        .value("StarlikeOrder", OrderTheorem::StarlikeOrder)
        .value("SqrtDeriv", OrderTheorem::SqrtDeriv)
        .value("SqrtRatio", OrderTheorem::SqrtRatio);

    m.def("verify_order_theorem",
          [](OrderTheorem which, const Series& f, double tol) {
              const OrderVerification v = verify_order_theorem(which, f, EvalGrid::defaults(), tol);
              py::dict d;
              d["pass"] = v.pass;
              d["alpha"] = v.alpha;
              d["functional_inf"] = v.functional_inf;
              d["a2_mag"] = v.a2_mag;
              d["note"] = v.note;
              return d;
          },
          py::arg("which"), py::arg("f"), py::arg("tol") = 1e-3);
}
