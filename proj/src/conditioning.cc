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

#include "steerlab/conditioning.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "steerlab/errors.h"

namespace steerlab {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

void validate_phi(double phi) {
    if (!(phi >= 0 && phi < kTwoPi)) {
        std::stringstream ss;
        ss << "Measurement phase must be in [0, 2pi), got " << phi << ".";
        throw InvalidInputError(ss.str());
    }
}

void require_conditionable(const GaussianState &state, const Mat2 &meas_cm) {
    if (state.n_modes != 2 || state.cm.rows() != 4 || state.cm.cols() != 4 || state.mean.size() != 4) {
        throw InvalidInputError("Conditioning requires a two-mode state.");
    }
    if (!state.cm.allFinite() || !meas_cm.allFinite()) {
        throw InvalidInputError("Conditioning inputs must be finite.");
    }
}

Mat2 inverse_2x2(const Mat2 &m, const char *what) {
    double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (!(std::abs(det) > 1e-12 * scale * scale)) {
        std::stringstream ss;
        ss << what << " is singular (det=" << det << ").";
        throw NumericalDegeneracyError(ss.str());
    }
    Mat2 inv;
    inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return inv / det;
}

// Direction of infinite variance of the mu_s -> 0 seed state, and the measured direction.
Vec2 elongated_direction(double phi) {
    return Vec2(std::cos(phi / 2), -std::sin(phi / 2));
}

Vec2 measured_direction(double phi) {
    return Vec2(std::sin(phi / 2), std::cos(phi / 2));
}

Mat2 symmetrized(const Mat2 &m) {
    return 0.5 * (m + m.transpose());
}

}  // namespace

double ConditionalParams::kappa_sc() const {
    return std::sqrt(std::max(0.0, 1 - mu_sc * mu_sc));
}

double ConditionalParams::lambda_minus() const {
    // (1 - kappa) / (2 mu_c mu_sc), rewritten to avoid cancellation for strong squeezing.
    return mu_sc / (2 * mu_c * (1 + kappa_sc()));
}

double ConditionalParams::lambda_plus() const {
    return (1 + kappa_sc()) / (2 * mu_c * mu_sc);
}

double kappa_s(double mu_s) {
    return std::sqrt(std::max(0.0, 1 - mu_s * mu_s));
}

void validate(const MeasurementSpec &spec) {
    if (const auto *g = std::get_if<GeneralGaussian>(&spec)) {
        if (!(g->mu > 0 && g->mu <= 1) || !(g->mu_s > 0 && g->mu_s <= 1)) {
            std::stringstream ss;
            ss << "Gaussian POVM needs mu and mu_s in (0, 1], got mu=" << g->mu << ", mu_s=" << g->mu_s << ".";
            throw InvalidInputError(ss.str());
        }
        validate_phi(g->phi);
    } else {
        validate_phi(std::get<IdealQuadrature>(spec).phi);
    }
}

Mat2 measurement_cm(const MeasurementSpec &spec) {
    validate(spec);
    const auto *g = std::get_if<GeneralGaussian>(&spec);
    if (g == nullptr) {
        throw UnsupportedVariantError(
            "An ideal quadrature measurement has no finite CM; use condition_on_b with the spec or "
            "condition_quadrature.");
    }
    double kappa = kappa_s(g->mu_s);
    double hi = (1 + kappa) / (2 * g->mu * g->mu_s);
    double lo = g->mu_s / (2 * g->mu * (1 + kappa));
    Vec2 v = elongated_direction(g->phi);
    Vec2 u = measured_direction(g->phi);
    return symmetrized(hi * v * v.transpose() + lo * u * u.transpose());
}

Mat2 condition_on_b(const GaussianState &state, const Mat2 &meas_cm) {
    require_conditionable(state, meas_cm);
    Mat2 c = state.block_c();
    Mat2 gain = inverse_2x2(state.block_b() + meas_cm, "B + measurement CM");
    return symmetrized(state.block_a() - c * gain * c.transpose());
}

Mat2 condition_on_b(const GaussianState &state, const MeasurementSpec &spec) {
    validate(spec);
    if (std::holds_alternative<GeneralGaussian>(spec)) {
        return condition_on_b(state, measurement_cm(spec));
    }
    require_conditionable(state, Mat2::Zero());
    Vec2 u = measured_direction(std::get<IdealQuadrature>(spec).phi);
    double var = u.dot(state.block_b() * u);
    if (!(var > 0)) {
        throw NumericalDegeneracyError("Measured quadrature of mode B has nonpositive variance.");
    }
    Vec2 cu = state.block_c() * u;
    return symmetrized(state.block_a() - cu * cu.transpose() / var);
}

Mat2 condition_quadrature(const CanonicalParams &canon, QuadratureBranch which) {
    if (!(canon.b > 0)) {
        throw InvalidInputError("Canonical parameter b must be positive.");
    }
    Mat2 out = Mat2::Zero();
    out(0, 0) = canon.a;
    out(1, 1) = canon.a;
    if (which == QuadratureBranch::kUsesC1) {
        out(0, 0) -= canon.c1 * canon.c1 / canon.b;
    } else {
        out(1, 1) -= canon.c2 * canon.c2 / canon.b;
    }
    return out;
}

Vec2 conditional_mean(const GaussianState &state, const Mat2 &meas_cm, const Vec2 &outcome) {
    require_conditionable(state, meas_cm);
    if (!outcome.allFinite() || !state.mean.allFinite()) {
        throw InvalidInputError("Conditioning inputs must be finite.");
    }
    Mat2 gain = inverse_2x2(state.block_b() + meas_cm, "B + measurement CM");
    return state.mean_a() + state.block_c() * gain * (outcome - state.mean_b());
}

ConditionalParams conditional_params(const Mat2 &cm) {
    double scale = std::max(1.0, cm.cwiseAbs().maxCoeff());
    if (!cm.allFinite() || std::abs(cm(0, 1) - cm(1, 0)) > 1e-9 * scale) {
        throw InvalidInputError("Conditional CM must be finite and symmetric.");
    }
    double det = cm(0, 0) * cm(1, 1) - cm(0, 1) * cm(1, 0);
    double tr = cm(0, 0) + cm(1, 1);
    if (!(cm(0, 0) > 0) || !(det >= 0.25 - 1e-9)) {
        std::stringstream ss;
        ss << "Conditional CM is not a physical single-mode CM (det=" << det << ", trace=" << tr << ").";
        throw InvalidInputError(ss.str());
    }
    ConditionalParams out;
    out.mu_c = std::min(1.0, 1 / (2 * std::sqrt(det)));
    out.mu_sc = std::min(1.0, 1 / (out.mu_c * tr));
    if (out.kappa_sc() < 1e-12) {
        out.phi_c = 0;
        return out;
    }
    double phi = std::atan2(-(cm(0, 1) + cm(1, 0)), cm(0, 0) - cm(1, 1));
    if (phi < 0) {
        phi += kTwoPi;
    }
    out.phi_c = phi >= kTwoPi ? 0 : phi;
    return out;
}

}  // namespace steerlab
