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

#ifndef STEERLAB_STEERING_H
#define STEERLAB_STEERING_H

#include "steerlab/symplectic_core.h"

namespace steerlab {

/// Which party measures and which is steered. kBToA: Bob measures mode B, Alice's mode A is steered.
enum class Direction { kBToA, kAToB };

/// A conditional variance and whether it lies strictly below the vacuum value 1/2.
struct SteeringVerdict {
    double lambda = 0;
    bool steerable = false;
};

/// The two Reid conditional variances computed from the invariants alone.
struct InvariantLambdas {
    double lambda_wns = 0;
    double lambda_sns = 0;
};

/// All classifiers for one state. The lambda fields are for the B -> A direction.
struct SteeringReport {
    double lambda_wns = 0;
    double lambda_sns = 0;
    double epr_product_b_to_a = 0;
    bool wns = false;
    bool sns = false;
    bool epr_b_to_a = false;
    bool epr_a_to_b = false;
    bool entangled = false;
    /// Some lambda is within kBoundaryTolerance of 1/2, or the EPR product is within it of 1/4.
    bool marginal = false;
};

/// Weak nonclassical steering: a - max(c1^2, c2^2) / b < 1/2.
SteeringVerdict classify_wns(const CanonicalParams &canon);

/// Strong nonclassical steering: a - min(c1^2, c2^2) / b < 1/2.
SteeringVerdict classify_sns(const CanonicalParams &canon);

/// Both conditional variances from (I1, I2, I3, I4); the minus branch is lambda_wns.
/// Throws InconsistentInvariantsError if the inner radicand is negative beyond tolerance.
InvariantLambdas classify_from_invariants(const SymplecticInvariants &inv, double tol = kPsdTolerance);

/// (a - c1^2/b)(a - c2^2/b) for kBToA, with a and b swapped for kAToB.
double epr_product(const CanonicalParams &canon, Direction direction);

/// Least eigenvalue of cm + (i/2)(omega (+) 0) for kBToA, or cm + (i/2)(0 (+) omega) for kAToB.
double epr_min_eigenvalue(const GaussianState &state, Direction direction);

/// Gaussian EPR steerability by Gaussian measurements. Decided by the canonical-form product
/// and cross-checked against epr_min_eigenvalue; a disagreement away from the boundary throws
/// InternalConsistencyError.
bool epr_steerable(const GaussianState &state, Direction direction, double tol = kPsdTolerance);

/// Least eigenvalue of the partially transposed CM plus (i/2)Omega.
double ppt_min_eigenvalue(const GaussianState &state);

/// PPT criterion (necessary and sufficient for two-mode Gaussian states).
bool is_entangled(const GaussianState &state, double tol = kPsdTolerance);

/// Runs every classifier and enforces SNS => WNS, SNS => EPR(B->A) => entangled on states that
/// are not marginal. Throws InternalConsistencyError on a violation.
SteeringReport hierarchy_report(const GaussianState &state, double tol = kPsdTolerance);

/// As hierarchy_report, without the implication check.
SteeringReport classify_all(const GaussianState &state, double tol = kPsdTolerance);

}  // namespace steerlab

#endif
