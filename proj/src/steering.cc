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

#include "steerlab/steering.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "steerlab/errors.h"

namespace steerlab {

namespace {

void require_positive_b(const CanonicalParams &canon) {
    if (!(canon.b > 0)) {
        std::stringstream ss;
        ss << "Canonical parameter b must be positive, got " << canon.b << ".";
        throw InvalidInputError(ss.str());
    }
}

SteeringVerdict verdict(double lambda) {
    return SteeringVerdict{lambda, lambda < 0.5};
}

bool near(double x, double target) {
    return std::abs(x - target) < kBoundaryTolerance;
}

}  // namespace

SteeringVerdict classify_wns(const CanonicalParams &canon) {
    require_positive_b(canon);
    double c = canon.c_max();
    return verdict(canon.a - c * c / canon.b);
}

SteeringVerdict classify_sns(const CanonicalParams &canon) {
    require_positive_b(canon);
    double c = canon.c_min();
    return verdict(canon.a - c * c / canon.b);
}

InvariantLambdas classify_from_invariants(const SymplecticInvariants &inv, double tol) {
    if (!(inv.i1 > 0) || !(inv.i2 > 0)) {
        throw InconsistentInvariantsError("Invariants need I1 > 0 and I2 > 0.");
    }
    double x = inv.i1 * inv.i2 - inv.i3 * inv.i3 + inv.i4;
    double radicand = x * x - 4 * inv.i1 * inv.i2 * inv.i4;
    if (radicand < -tol * std::max(1.0, x * x)) {
        std::stringstream ss;
        ss << "Invariants (" << inv.i1 << ", " << inv.i2 << ", " << inv.i3 << ", " << inv.i4
           << ") give a negative radicand " << radicand << ".";
        throw InconsistentInvariantsError(ss.str());
    }
    double root = std::sqrt(std::max(0.0, radicand));
    double sqrt_i1 = std::sqrt(inv.i1);
    InvariantLambdas out;
    out.lambda_sns = (x + root) / (2 * inv.i2 * sqrt_i1);
    // The roots multiply to 4 I1 I2 I4, which gives the minus branch without cancellation.
    out.lambda_wns = x + root > 0 ? 2 * sqrt_i1 * inv.i4 / (x + root) : 0.0;
    return out;
}

double epr_product(const CanonicalParams &canon, Direction direction) {
    double steered = direction == Direction::kBToA ? canon.a : canon.b;
    double measured = direction == Direction::kBToA ? canon.b : canon.a;
    if (!(measured > 0)) {
        throw InvalidInputError("Measured mode must have positive variance.");
    }
    return (steered - canon.c1 * canon.c1 / measured) * (steered - canon.c2 * canon.c2 / measured);
}

double epr_min_eigenvalue(const GaussianState &state, Direction direction) {
    Mat4 im = Mat4::Zero();
    int offset = direction == Direction::kBToA ? 0 : 2;
    im.block<2, 2>(offset, offset) = 0.5 * omega();
    Mat4 cm = state.cm;
    return min_hermitian_eigenvalue(0.5 * (cm + cm.transpose()), im);
}

bool epr_steerable(const GaussianState &state, Direction direction, double tol) {
    require_physical_two_mode(state, tol);
    double product = epr_product(canonical_params(state, tol), direction);
    bool by_product = product < 0.25;

    double eig = epr_min_eigenvalue(state, direction);
    bool by_eigenvalue = eig < -tol;
    if (by_product != by_eigenvalue && !near(product, 0.25) && std::abs(eig) > tol) {
        std::stringstream ss;
        ss << "EPR steerability routes disagree: canonical product " << product << " vs least eigenvalue " << eig
           << ".";
        throw InternalConsistencyError(ss.str());
    }
    return by_product;
}

double ppt_min_eigenvalue(const GaussianState &state) {
    Mat4 cm = state.cm;
    Eigen::Vector4d flip(1, 1, 1, -1);
    Mat4 transposed = flip.asDiagonal() * (0.5 * (cm + cm.transpose())) * flip.asDiagonal();
    return min_hermitian_eigenvalue(transposed, 0.5 * symplectic_form(2));
}

bool is_entangled(const GaussianState &state, double tol) {
    require_physical_two_mode(state, tol);
    return ppt_min_eigenvalue(state) < -tol;
}

SteeringReport classify_all(const GaussianState &state, double tol) {
    require_physical_two_mode(state, tol);
    CanonicalParams canon = canonical_params(state, tol);
    SteeringVerdict wns = classify_wns(canon);
    SteeringVerdict sns = classify_sns(canon);

    SteeringReport report;
    report.lambda_wns = wns.lambda;
    report.lambda_sns = sns.lambda;
    report.epr_product_b_to_a = epr_product(canon, Direction::kBToA);
    report.wns = wns.steerable;
    report.sns = sns.steerable;
    report.epr_b_to_a = epr_steerable(state, Direction::kBToA, tol);
    report.epr_a_to_b = epr_steerable(state, Direction::kAToB, tol);
    report.entangled = is_entangled(state, tol);
    report.marginal =
        near(report.lambda_wns, 0.5) || near(report.lambda_sns, 0.5) || near(report.epr_product_b_to_a, 0.25);
    return report;
}

SteeringReport hierarchy_report(const GaussianState &state, double tol) {
    SteeringReport report = classify_all(state, tol);
    if (report.marginal) {
        return report;
    }
    const char *broken = nullptr;
    if (report.sns && !report.wns) {
        broken = "SNS => WNS";
    } else if (report.sns && !report.epr_b_to_a) {
        broken = "SNS => EPR(B->A)";
    } else if (report.epr_b_to_a && !report.entangled) {
        broken = "EPR(B->A) => entangled";
    }
    if (broken != nullptr) {
        std::stringstream ss;
        ss << "Steering hierarchy violated (" << broken << "): lambda_wns=" << report.lambda_wns
           << ", lambda_sns=" << report.lambda_sns << ", epr_product=" << report.epr_product_b_to_a << ".";
        throw InternalConsistencyError(ss.str());
    }
    return report;
}

}  // namespace steerlab
