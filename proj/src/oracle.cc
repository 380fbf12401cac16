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

#include "steerlab/oracle.h"

#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "steerlab/errors.h"
#include "steerlab/steering.h"

namespace steerlab {

ScanResult brute_force_min_lambda(const GaussianState &state, const ScanGrid &grid) {
    if (grid.n_mu < 2 || grid.n_mus < 2 || grid.n_phi < 2) {
        std::stringstream ss;
        ss << "Scan grid dimensions must be >= 2, got (" << grid.n_mu << ", " << grid.n_mus << ", " << grid.n_phi
           << ").";
        throw InvalidInputError(ss.str());
    }
    if (!(grid.mu_s_min > 0 && grid.mu_s_min < 1)) {
        throw InvalidInputError("Scan mu_s_min must be in (0, 1).");
    }
    require_physical_two_mode(state);

    std::vector<double> mus(grid.n_mu);
    for (int i = 0; i < grid.n_mu; i++) {
        mus[i] = static_cast<double>(i + 1) / grid.n_mu;
    }
    std::vector<double> mu_ss(grid.n_mus);
    double log_min = std::log(grid.mu_s_min);
    for (int k = 0; k < grid.n_mus; k++) {
        mu_ss[k] = std::exp(log_min * static_cast<double>(k) / (grid.n_mus - 1));
    }
    std::vector<double> phis(grid.n_phi);
    for (int j = 0; j < grid.n_phi; j++) {
        phis[j] = 2 * std::numbers::pi * j / grid.n_phi;
    }

    // lambdas[(i * n_phi + j) * n_mus + k]
    std::vector<double> lambdas(static_cast<size_t>(grid.n_mu) * grid.n_phi * grid.n_mus);
    ScanResult result;
    result.grid = grid;
    result.best_lambda = std::numeric_limits<double>::infinity();
    int best_i = 0;
    int best_j = 0;
    for (int i = 0; i < grid.n_mu; i++) {
        for (int j = 0; j < grid.n_phi; j++) {
            for (int k = 0; k < grid.n_mus; k++) {
                GeneralGaussian spec{mus[i], mu_ss[k], phis[j]};
                double lambda = min_cm_eigenvalue(condition_on_b(state, measurement_cm(spec)));
                lambdas[(static_cast<size_t>(i) * grid.n_phi + j) * grid.n_mus + k] = lambda;
                if (lambda < result.best_lambda) {
                    result.best_lambda = lambda;
                    result.best_spec = spec;
                    best_i = i;
                    best_j = j;
                }
            }
        }
    }

    result.monotone_in_mus = true;
    size_t row = (static_cast<size_t>(best_i) * grid.n_phi + best_j) * grid.n_mus;
    for (int k = 0; k < grid.n_mus; k++) {
        double lambda = lambdas[row + k];
        if (k > 0) {
            double prev = result.mus_trace.back();
            if (lambda > prev + 1e-12 * std::max(1.0, std::abs(prev))) {
                result.monotone_in_mus = false;
            }
        }
        result.mus_trace.push_back(lambda);
    }
    return result;
}

std::vector<GaussianState> sample_physical_states(uint64_t seed, size_t count) {
    if (count < 1) {
        throw InvalidInputError("sample_physical_states needs count >= 1.");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> diag(0.5, 20.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<GaussianState> out;
    out.reserve(count);
    while (out.size() < count) {
        double a = diag(rng);
        double b = diag(rng);
        double bound = std::sqrt(a * b);
        double c1 = bound * unit(rng);
        double c2 = bound * unit(rng);
        GaussianState state = CanonicalParams{a, b, c1, c2}.to_state();
        if (check_physical(state).physical()) {
            out.push_back(std::move(state));
        }
    }
    return out;
}

AuditSummary audit_hierarchy(std::span<const GaussianState> states, double tol) {
    AuditSummary summary;
    for (size_t k = 0; k < states.size(); k++) {
        summary.checked++;
        bool bad = false;
        try {
            SteeringReport r = classify_all(states[k], tol);
            if (!r.marginal) {
                if (r.sns && !r.wns) {
                    summary.sns_not_wns++;
                    bad = true;
                }
                if (r.sns && !r.epr_b_to_a) {
                    summary.sns_not_epr++;
                    bad = true;
                }
                if (r.epr_b_to_a && !r.entangled) {
                    summary.epr_not_entangled++;
                    bad = true;
                }
            }
        } catch (const std::exception &) {
            summary.errors++;
            bad = true;
        }
        if (bad) {
            summary.offending.push_back(k);
        }
    }
    return summary;
}

}  // namespace steerlab
