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

#include "steerlab/symplectic_core.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "steerlab/errors.h"

namespace steerlab {

namespace {

void require_two_mode(const GaussianState &state, const char *what) {
    if (state.n_modes != 2 || state.cm.rows() != 4 || state.cm.cols() != 4) {
        std::stringstream ss;
        ss << what << " requires a two-mode state (4x4 CM), got n_modes=" << state.n_modes << " and a "
           << state.cm.rows() << "x" << state.cm.cols() << " CM.";
        throw InvalidInputError(ss.str());
    }
}

Mat2 rotation(double theta) {
    Mat2 r;
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return r;
}

}  // namespace

GaussianState GaussianState::single_mode(const Mat2 &cm, const Vec2 &mean) {
    return GaussianState{1, mean, cm};
}

GaussianState GaussianState::two_mode(const Mat4 &cm, const Vec4 &mean) {
    return GaussianState{2, mean, cm};
}

Mat2 GaussianState::block_a() const {
    require_two_mode(*this, "block_a");
    return cm.block<2, 2>(0, 0);
}

Mat2 GaussianState::block_b() const {
    require_two_mode(*this, "block_b");
    return cm.block<2, 2>(2, 2);
}

Mat2 GaussianState::block_c() const {
    require_two_mode(*this, "block_c");
    return cm.block<2, 2>(0, 2);
}

Vec2 GaussianState::mean_a() const {
    require_two_mode(*this, "mean_a");
    return mean.segment<2>(0);
}

Vec2 GaussianState::mean_b() const {
    require_two_mode(*this, "mean_b");
    return mean.segment<2>(2);
}

double CanonicalParams::c_max() const {
    return std::max(std::abs(c1), std::abs(c2));
}

double CanonicalParams::c_min() const {
    return std::min(std::abs(c1), std::abs(c2));
}

CanonicalParams CanonicalParams::normalized() const {
    double product = c1 * c2;
    double hi = c_max();
    double lo = c_min();
    // A quarter turn on both modes swaps c1 and c2; a half turn on one mode flips both signs.
    return CanonicalParams{a, b, hi, product < 0 ? -lo : lo};
}

Mat4 CanonicalParams::to_cm() const {
    Mat4 cm = Mat4::Zero();
    cm(0, 0) = cm(1, 1) = a;
    cm(2, 2) = cm(3, 3) = b;
    cm(0, 2) = cm(2, 0) = c1;
    cm(1, 3) = cm(3, 1) = c2;
    return cm;
}

GaussianState CanonicalParams::to_state() const {
    return GaussianState::two_mode(to_cm());
}

Mat2 omega() {
    Mat2 w;
    w << 0, 1, -1, 0;
    return w;
}

Eigen::MatrixXd symplectic_form(int n_modes) {
    Eigen::MatrixXd big = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; k++) {
        big.block<2, 2>(2 * k, 2 * k) = omega();
    }
    return big;
}

double min_hermitian_eigenvalue(const Eigen::MatrixXd &re, const Eigen::MatrixXd &im) {
    Eigen::MatrixXcd h(re.rows(), re.cols());
    h.real() = re;
    h.imag() = im;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

PhysicalityReport check_physical(const GaussianState &state, double tol) {
    int n = state.n_modes;
    if (n != 1 && n != 2) {
        throw InvalidInputError("n_modes must be 1 or 2, got " + std::to_string(n) + ".");
    }
    if (state.cm.rows() != 2 * n || state.cm.cols() != 2 * n || state.mean.size() != 2 * n) {
        std::stringstream ss;
        ss << "A " << n << "-mode state needs a " << 2 * n << "x" << 2 * n << " CM and a length-" << 2 * n
           << " mean; got " << state.cm.rows() << "x" << state.cm.cols() << " and " << state.mean.size() << ".";
        throw InvalidInputError(ss.str());
    }
    if (!state.cm.allFinite() || !state.mean.allFinite()) {
        throw InvalidInputError("CM and mean entries must be finite.");
    }

    PhysicalityReport report;
    double scale = std::max(1.0, state.cm.cwiseAbs().maxCoeff());
    report.symmetric = (state.cm - state.cm.transpose()).cwiseAbs().maxCoeff() <= 1e-9 * scale;

    Eigen::MatrixXd sym = 0.5 * (state.cm + state.cm.transpose());
    report.min_ur_eigenvalue = min_hermitian_eigenvalue(sym, 0.5 * symplectic_form(n));
    report.ur_satisfied = report.min_ur_eigenvalue >= -tol;
    return report;
}

void require_physical_two_mode(const GaussianState &state, double tol) {
    require_two_mode(state, "This operation");
    PhysicalityReport report = check_physical(state, tol);
    if (!report.physical()) {
        std::stringstream ss;
        ss << "State is not physical (symmetric=" << report.symmetric
           << ", least eigenvalue of cm + (i/2)Omega = " << report.min_ur_eigenvalue << ").";
        throw InvalidInputError(ss.str());
    }
}

SymplecticInvariants symplectic_invariants(const GaussianState &state) {
    require_two_mode(state, "symplectic_invariants");
    if (!state.cm.allFinite()) {
        throw InvalidInputError("CM entries must be finite.");
    }
    Mat2 a = state.block_a();
    Mat2 b = state.block_b();
    Mat2 c = state.block_c();
    double det_b = b.determinant();
    double det_cm;
    if (det_b > 0) {
        // det(cm) = det(B) det(A - C B^-1 C^T). Cofactor expansion of the full 4x4 loses several
        // digits once local squeezing inflates the entries.
        Mat2 adj_b;
        adj_b << b(1, 1), -b(0, 1), -b(1, 0), b(0, 0);
        det_cm = det_b * (a - c * adj_b * c.transpose() / det_b).determinant();
    } else {
        Mat4 cm = state.cm;
        det_cm = cm.determinant();
    }
    return SymplecticInvariants{a.determinant(), det_b, c.determinant(), det_cm};
}

CanonicalParams canonical_params(const SymplecticInvariants &inv, double tol) {
    if (!(inv.i1 > 0) || !(inv.i2 > 0) || !std::isfinite(inv.i3) || !std::isfinite(inv.i4)) {
        std::stringstream ss;
        ss << "Invariants (" << inv.i1 << ", " << inv.i2 << ", " << inv.i3 << ", " << inv.i4
           << ") need I1 > 0, I2 > 0 and finite I3, I4.";
        throw InconsistentInvariantsError(ss.str());
    }
    double a = std::sqrt(inv.i1);
    double b = std::sqrt(inv.i2);
    double ab = a * b;
    double t = (ab * ab + inv.i3 * inv.i3 - inv.i4) / ab;

    // Both roots must be real and non-negative. The tolerance is scaled by t^2 because the
    // discriminant is a difference of quantities of that size.
    double disc = t * t - 4 * inv.i3 * inv.i3;
    double scale = std::max(1.0, t * t);
    if (disc < -tol * scale || t < -tol * std::sqrt(scale)) {
        std::stringstream ss;
        ss << "Invariants (" << inv.i1 << ", " << inv.i2 << ", " << inv.i3 << ", " << inv.i4
           << ") admit no real canonical form (t=" << t << ", discriminant=" << disc << ").";
        throw InconsistentInvariantsError(ss.str());
    }
    double y_hi = std::max(0.0, 0.5 * (t + std::sqrt(std::max(0.0, disc))));
    // Product of the roots is I3^2; dividing avoids cancellation in the small root.
    double y_lo = y_hi > 0 ? inv.i3 * inv.i3 / y_hi : 0.0;

    double c1 = std::sqrt(y_hi);
    double c2 = std::sqrt(y_lo);
    if (inv.i3 < 0) {
        c2 = -c2;
    }
    return CanonicalParams{a, b, c1, c2};
}

CanonicalParams canonical_params(const GaussianState &state, double tol) {
    require_two_mode(state, "canonical_params");
    Mat2 a = state.block_a();
    Mat2 b = state.block_b();
    Mat2 c = state.block_c();
    bool canonical = a(0, 1) == 0 && a(1, 0) == 0 && a(0, 0) == a(1, 1) && b(0, 1) == 0 && b(1, 0) == 0 &&
                     b(0, 0) == b(1, 1) && c(0, 1) == 0 && c(1, 0) == 0 && state.cm(2, 0) == c(0, 0) &&
                     state.cm(3, 1) == c(1, 1) && state.cm(3, 0) == 0 && state.cm(2, 1) == 0;
    if (canonical) {
        return CanonicalParams{a(0, 0), b(0, 0), c(0, 0), c(1, 1)}.normalized();
    }
    return canonical_params(symplectic_invariants(state), tol);
}

double min_cm_eigenvalue(const Mat2 &cm) {
    double tr = cm(0, 0) + cm(1, 1);
    // sqrt(tr^2 - 4 det) written without cancellation.
    double spread = std::hypot(cm(0, 0) - cm(1, 1), cm(0, 1) + cm(1, 0));
    return 0.5 * (tr - spread);
}

double nonclassical_depth(const Mat2 &cm) {
    if (!cm.allFinite() || std::abs(cm(0, 1) - cm(1, 0)) > 1e-9 * std::max(1.0, cm.cwiseAbs().maxCoeff())) {
        throw InvalidInputError("Single-mode CM must be finite and symmetric.");
    }
    PhysicalityReport report = check_physical(GaussianState::single_mode(cm));
    if (!report.physical()) {
        std::stringstream ss;
        ss << "Single-mode CM violates the uncertainty relation (least eigenvalue of cm + (i/2)omega = "
           << report.min_ur_eigenvalue << ").";
        throw InvalidInputError(ss.str());
    }
    return std::max(0.0, 0.5 - min_cm_eigenvalue(cm));
}

bool is_nonclassical(const Mat2 &cm) {
    return nonclassical_depth(cm) > 0;
}

GaussianState apply_symplectic(const GaussianState &state, const Mat2 &s_a, const Mat2 &s_b) {
    require_two_mode(state, "apply_symplectic");
    for (const Mat2 *s : {&s_a, &s_b}) {
        double det = s->determinant();
        if (!s->allFinite() || std::abs(det - 1) > 1e-9) {
            std::stringstream ss;
            ss << "Local symplectic factors must have unit determinant, got det=" << det << ".";
            throw InvalidInputError(ss.str());
        }
    }
    Mat4 s = Mat4::Zero();
    s.block<2, 2>(0, 0) = s_a;
    s.block<2, 2>(2, 2) = s_b;
    Mat4 cm = state.cm;
    Vec4 mean = state.mean;
    return GaussianState::two_mode(s * cm * s.transpose(), s * mean);
}

GaussianState apply_symplectic(const GaussianState &state, const LocalSymplectic &s) {
    return apply_symplectic(state, s.s_a, s.s_b);
}

LocalSymplectic random_local_symplectic(uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> squeeze(-2, 2);
    auto draw = [&]() {
        double theta1 = angle(rng);
        double r = squeeze(rng);
        double theta2 = angle(rng);
        Mat2 sq = Mat2::Zero();
        sq(0, 0) = std::exp(r);
        sq(1, 1) = std::exp(-r);
        return Mat2(rotation(theta1) * sq * rotation(theta2));
    };
    LocalSymplectic result;
    result.s_a = draw();
    result.s_b = draw();
    return result;
}

}  // namespace steerlab
