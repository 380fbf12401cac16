// Copyright 2026 The steerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. States cross the boundary as 4x4 numpy covariance matrices.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steerlab/conditioning.h"
#include "steerlab/errors.h"
#include "steerlab/oracle.h"
#include "steerlab/steering.h"
#include "steerlab/symplectic_core.h"
#include "steerlab/tmst_triangoloid.h"

namespace py = pybind11;
using namespace steerlab;

namespace {

GaussianState from_cm(const Mat4 &cm) {
    return GaussianState::two_mode(cm);
}

Eigen::MatrixXd points_to_array(const std::vector<TriangoloidPoint> &points) {
    Eigen::MatrixXd out(points.size(), 5);
    for (size_t k = 0; k < points.size(); k++) {
        const TriangoloidPoint &p = points[k];
        out.row(k) << p.mu, p.mu_s, p.mu_c, p.mu_sc, p.depth;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_steerlab, m) {
    m.doc() = "Nonclassical and EPR steering classifiers for two-mode Gaussian states.";
    m.attr("__version__") = STEERLAB_VERSION;

    py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<UnsupportedVariantError>(m, "UnsupportedVariantError", PyExc_ValueError);
    py::register_exception<InconsistentInvariantsError>(m, "InconsistentInvariantsError", PyExc_ValueError);
    py::register_exception<NumericalDegeneracyError>(m, "NumericalDegeneracyError", PyExc_ArithmeticError);
    py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError", PyExc_RuntimeError);

    py::class_<CanonicalParams>(m, "CanonicalParams")
        .def(py::init([](double a, double b, double c1, double c2) { return CanonicalParams{a, b, c1, c2}; }),
             py::arg("a"), py::arg("b"), py::arg("c1"), py::arg("c2"))
        .def_readwrite("a", &CanonicalParams::a)
        .def_readwrite("b", &CanonicalParams::b)
        .def_readwrite("c1", &CanonicalParams::c1)
        .def_readwrite("c2", &CanonicalParams::c2)
        .def("normalized", &CanonicalParams::normalized)
        .def("to_cm", &CanonicalParams::to_cm)
        .def("__eq__", [](const CanonicalParams &x, const CanonicalParams &y) { return x == y; })
        .def("__repr__", [](const CanonicalParams &c) {
            return "CanonicalParams(a=" + py::repr(py::float_(c.a)).cast<std::string>() +
                   ", b=" + py::repr(py::float_(c.b)).cast<std::string>() +
                   ", c1=" + py::repr(py::float_(c.c1)).cast<std::string>() +
                   ", c2=" + py::repr(py::float_(c.c2)).cast<std::string>() + ")";
        });

    py::class_<SymplecticInvariants>(m, "SymplecticInvariants")
        .def(py::init([](double i1, double i2, double i3, double i4) { return SymplecticInvariants{i1, i2, i3, i4}; }),
             py::arg("i1"), py::arg("i2"), py::arg("i3"), py::arg("i4"))
        .def_readonly("i1", &SymplecticInvariants::i1)
        .def_readonly("i2", &SymplecticInvariants::i2)
        .def_readonly("i3", &SymplecticInvariants::i3)
        .def_readonly("i4", &SymplecticInvariants::i4);

    py::class_<PhysicalityReport>(m, "PhysicalityReport")
        .def_readonly("symmetric", &PhysicalityReport::symmetric)
        .def_readonly("ur_satisfied", &PhysicalityReport::ur_satisfied)
        .def_readonly("min_ur_eigenvalue", &PhysicalityReport::min_ur_eigenvalue)
        .def_property_readonly("physical", &PhysicalityReport::physical);

    py::class_<SteeringReport>(m, "SteeringReport")
        .def_readonly("lambda_wns", &SteeringReport::lambda_wns)
        .def_readonly("lambda_sns", &SteeringReport::lambda_sns)
        .def_readonly("epr_product_b_to_a", &SteeringReport::epr_product_b_to_a)
        .def_readonly("wns", &SteeringReport::wns)
        .def_readonly("sns", &SteeringReport::sns)
        .def_readonly("epr_b_to_a", &SteeringReport::epr_b_to_a)
        .def_readonly("epr_a_to_b", &SteeringReport::epr_a_to_b)
        .def_readonly("entangled", &SteeringReport::entangled)
        .def_readonly("marginal", &SteeringReport::marginal);

    py::class_<ConditionalParams>(m, "ConditionalParams")
        .def_readonly("mu_c", &ConditionalParams::mu_c)
        .def_readonly("mu_sc", &ConditionalParams::mu_sc)
        .def_readonly("phi_c", &ConditionalParams::phi_c)
        .def_property_readonly("lambda_minus", &ConditionalParams::lambda_minus)
        .def_property_readonly("lambda_plus", &ConditionalParams::lambda_plus);

    m.def(
        "check_physical", [](const Mat4 &cm, double tol) { return check_physical(from_cm(cm), tol); }, py::arg("cm"),
        py::arg("tol") = kPsdTolerance);
    m.def(
        "symplectic_invariants", [](const Mat4 &cm) { return symplectic_invariants(from_cm(cm)); }, py::arg("cm"));
    m.def(
        "canonical_params", [](const Mat4 &cm, double tol) { return canonical_params(from_cm(cm), tol); },
        py::arg("cm"), py::arg("tol") = kPsdTolerance);
    m.def(
        "hierarchy_report", [](const Mat4 &cm, double tol) { return hierarchy_report(from_cm(cm), tol); },
        py::arg("cm"), py::arg("tol") = kPsdTolerance,
        "All steering and entanglement flags; raises InternalConsistencyError if an implication fails.");
    m.def(
        "classify_from_invariants",
        [](const SymplecticInvariants &inv, double tol) {
            InvariantLambdas l = classify_from_invariants(inv, tol);
            return py::make_tuple(l.lambda_wns, l.lambda_sns);
        },
        py::arg("invariants"), py::arg("tol") = kPsdTolerance, "(lambda_wns, lambda_sns) from the invariants.");
    m.def(
        "measurement_cm", [](double mu, double mu_s, double phi) { return measurement_cm(GeneralGaussian{mu, mu_s, phi}); },
        py::arg("mu"), py::arg("mu_s"), py::arg("phi"));
    m.def(
        "condition_on_b",
        [](const Mat4 &cm, double mu, double mu_s, double phi) {
            return condition_on_b(from_cm(cm), MeasurementSpec{GeneralGaussian{mu, mu_s, phi}});
        },
        py::arg("cm"), py::arg("mu"), py::arg("mu_s"), py::arg("phi"), "Conditional CM of mode A.");
    m.def(
        "condition_on_quadrature",
        [](const Mat4 &cm, double phi) { return condition_on_b(from_cm(cm), MeasurementSpec{IdealQuadrature{phi}}); },
        py::arg("cm"), py::arg("phi"), "Conditional CM of mode A after an ideal quadrature measurement on B.");
    m.def("conditional_params", &conditional_params, py::arg("cm_a"));
    m.def(
        "tmst_params", [](double na, double nb, double r) { return tmst_params(TmstSpec{na, nb, r}); }, py::arg("na"),
        py::arg("nb"), py::arg("r"));
    m.def(
        "tmst_steerable", [](double na, double nb, double r) { return tmst_steerable(TmstSpec{na, nb, r}); },
        py::arg("na"), py::arg("nb"), py::arg("r"));
    m.def(
        "triangoloid",
        [](double na, double nb, double r, int grid, double mu_min, double mu_s_min) {
            return points_to_array(triangoloid_sample(TmstSpec{na, nb, r}, grid, TriangoloidOptions{mu_min, mu_s_min}));
        },
        py::arg("na"), py::arg("nb"), py::arg("r"), py::arg("grid") = 200, py::arg("mu_min") = 1e-3,
        py::arg("mu_s_min") = 1e-3, "Rows (mu, mu_s, mu_c, mu_sc, depth); the last row is the quadrature vertex.");
    m.def(
        "scan_min_lambda",
        [](const Mat4 &cm, int n_mu, int n_mus, int n_phi, double mu_s_min) {
            ScanResult r = brute_force_min_lambda(from_cm(cm), ScanGrid{n_mu, n_mus, n_phi, mu_s_min});
            return py::make_tuple(r.best_lambda, py::make_tuple(r.best_spec.mu, r.best_spec.mu_s, r.best_spec.phi),
                                  r.monotone_in_mus);
        },
        py::arg("cm"), py::arg("n_mu") = 5, py::arg("n_mus") = 40, py::arg("n_phi") = 8, py::arg("mu_s_min") = 1e-4,
        "(best_lambda, (mu, mu_s, phi), monotone_in_mus) over a grid of Gaussian measurements.");
}
