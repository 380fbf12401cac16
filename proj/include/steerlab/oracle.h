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

#ifndef STEERLAB_ORACLE_H
#define STEERLAB_ORACLE_H

#include <cstdint>
#include <span>
#include <vector>

#include "steerlab/conditioning.h"
#include "steerlab/symplectic_core.h"

namespace steerlab {

/// Measurement grid for the brute-force scan.
///
/// mu takes n_mu values (k+1)/n_mu, mu_s takes n_mus log-spaced values from 1 down to mu_s_min,
/// and phi takes n_phi values 2 pi k / n_phi.
struct ScanGrid {
    int n_mu = 5;
    int n_mus = 40;
    int n_phi = 8;
    double mu_s_min = 1e-4;
};

struct ScanResult {
    double best_lambda = 0;
    GeneralGaussian best_spec;
    ScanGrid grid;
    /// lambda_min along decreasing mu_s at the optimal (mu, phi), and whether it never increases.
    std::vector<double> mus_trace;
    bool monotone_in_mus = false;
};

/// Evaluates the least eigenvalue of the conditional CM of mode A at every grid point.
ScanResult brute_force_min_lambda(const GaussianState &state, const ScanGrid &grid = {});

/// Deterministic random canonical-form states with a, b in [1/2, 20] and |c_i| <= sqrt(ab),
/// rejection-sampled until physical.
std::vector<GaussianState> sample_physical_states(uint64_t seed, size_t count);

struct AuditSummary {
    size_t checked = 0;
    size_t sns_not_wns = 0;
    size_t sns_not_epr = 0;
    size_t epr_not_entangled = 0;
    /// Classifier calls that threw (routes disagreeing, inconsistent invariants, ...).
    size_t errors = 0;
    std::vector<size_t> offending;

    size_t violations() const {
        return offending.size();
    }
};

/// Counts states violating SNS => WNS, SNS => EPR(B->A) or EPR(B->A) => entangled.
/// Marginal states are skipped, as in hierarchy_report.
AuditSummary audit_hierarchy(std::span<const GaussianState> states, double tol = kPsdTolerance);

}  // namespace steerlab

#endif
