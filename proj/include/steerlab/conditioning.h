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

#ifndef STEERLAB_CONDITIONING_H
#define STEERLAB_CONDITIONING_H

#include <variant>

#include "steerlab/symplectic_core.h"

namespace steerlab {

/// Single-mode Gaussian POVM with seed-state purity `mu`, squeezing parameter
/// `mu_s` = 1 / (1 + 2 sinh^2 r) and squeezing phase `phi`.
struct GeneralGaussian {
    double mu = 1;
    double mu_s = 1;
    double phi = 0;
};

/// The mu_s -> 0 limit of GeneralGaussian at fixed phi: a projective quadrature measurement.
/// The seed CM becomes infinitely elongated along (cos(phi/2), -sin(phi/2)), so the measured
/// quadrature is the orthogonal direction (sin(phi/2), cos(phi/2)).
struct IdealQuadrature {
    double phi = 0;
};

using MeasurementSpec = std::variant<GeneralGaussian, IdealQuadrature>;

/// Which entry of the canonical correlation block an ideal quadrature measurement exploits.
/// kUsesC1 is the x_B measurement (phi = pi), kUsesC2 the p_B measurement (phi = 0).
enum class QuadratureBranch { kUsesC1, kUsesC2 };

/// (mu_c, mu_sc, phi_c) of a single-mode CM written in the same form as a measurement CM.
struct ConditionalParams {
    double mu_c = 1;
    double mu_sc = 1;
    double phi_c = 0;

    double kappa_sc() const;
    double lambda_minus() const;
    double lambda_plus() const;
};

/// sqrt(1 - mu_s^2).
double kappa_s(double mu_s);

/// Throws InvalidInputError unless mu, mu_s are in (0, 1] and phi is in [0, 2pi).
void validate(const MeasurementSpec &spec);

/// CM of the POVM seed state. Throws UnsupportedVariantError for IdealQuadrature.
Mat2 measurement_cm(const MeasurementSpec &spec);

/// Conditional CM of mode A after measuring mode B with a POVM whose seed CM is `meas_cm`:
/// A - C (B + meas_cm)^-1 C^T. It does not depend on the measurement outcome.
Mat2 condition_on_b(const GaussianState &state, const Mat2 &meas_cm);

/// As above, and also accepts IdealQuadrature, whose conditional CM is the exact finite limit
/// A - (C u)(C u)^T / (u^T B u) with u the measured quadrature direction.
Mat2 condition_on_b(const GaussianState &state, const MeasurementSpec &spec);

/// Ideal quadrature conditioning of a canonical-form state.
Mat2 condition_quadrature(const CanonicalParams &canon, QuadratureBranch which);

/// Conditional mean of mode A given the outcome vector of the POVM on B.
Vec2 conditional_mean(const GaussianState &state, const Mat2 &meas_cm, const Vec2 &outcome);

/// Extracts (mu_c, mu_sc, phi_c) from det = 1/(2 mu_c)^2 and tr = 1/(mu_c mu_sc).
/// phi_c is in [0, 2pi) and is 0 when the state is unsqueezed. Throws InvalidInputError for an
/// unphysical CM.
ConditionalParams conditional_params(const Mat2 &cm);

}  // namespace steerlab

#endif
