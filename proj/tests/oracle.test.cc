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
#include <numbers>

#include "gtest/gtest.h"

#include "steerlab/errors.h"
#include "steerlab/steering.h"
#include "steerlab/tmst_triangoloid.h"

using namespace steerlab;

namespace {

const CanonicalParams kFixture{13.9, 13.9, 4.6, -13.7};

}  // namespace

TEST(brute_force_min_lambda, fixture) {
    ScanResult r = brute_force_min_lambda(kFixture.to_state());
    double wns = classify_wns(kFixture).lambda;
    EXPECT_GE(r.best_lambda, wns - 1e-6);
    EXPECT_LT(r.best_lambda - wns, 2e-4);
    EXPECT_TRUE(r.monotone_in_mus);
    EXPECT_EQ(r.mus_trace.size(), 40u);
    // As written the larger correlation is c2, carried by p_B.
    EXPECT_EQ(r.best_spec.phi, 0.0);
    EXPECT_EQ(r.best_spec.mu, 1.0);
}

TEST(brute_force_min_lambda, product_state_has_nothing_to_gain) {
    ScanResult r = brute_force_min_lambda(CanonicalParams{1, 3, 0, 0}.to_state());
    EXPECT_NEAR(r.best_lambda, 1, 1e-12);
}

TEST(brute_force_min_lambda, tmsv_reaches_squeezed_variance) {
    ScanResult r = brute_force_min_lambda(tmst_state(TmstSpec{0, 0, 1}));
    EXPECT_NEAR(r.best_lambda, 0.13290111441703986, 2e-4);
    EXPECT_GE(r.best_lambda, 0.13290111441703986 - 1e-9);
}

TEST(brute_force_min_lambda, rejects_bad_grid) {
    GaussianState s = kFixture.to_state();
    EXPECT_THROW(brute_force_min_lambda(s, ScanGrid{1, 40, 8, 1e-4}), InvalidInputError);
    EXPECT_THROW(brute_force_min_lambda(s, ScanGrid{5, 40, 8, 0}), InvalidInputError);
    EXPECT_THROW(brute_force_min_lambda(CanonicalParams{0.5, 0.5, 1, -1}.to_state()), InvalidInputError);
}

TEST(brute_force_min_lambda, never_beats_quadrature_bound) {
    // Symplectics on B map the Gaussian measurement set onto itself, so the optimum is unchanged.
    // Squeezing A would change A's variances and is not a valid check.
    std::vector<GaussianState> states = sample_physical_states(5, 40);
    for (size_t k = 0; k < states.size(); k++) {
        LocalSymplectic on_b = random_local_symplectic(k);
        on_b.s_a = Mat2::Identity();
        GaussianState s = apply_symplectic(states[k], on_b);
        double wns = classify_wns(canonical_params(states[k])).lambda;
        ScanResult r = brute_force_min_lambda(s, ScanGrid{3, 20, 12, 1e-4});
        EXPECT_GE(r.best_lambda, wns - 1e-6 * std::max(1.0, wns)) << k;
    }
}

TEST(brute_force_min_lambda, converges_as_mu_s_floor_drops) {
    GaussianState s = kFixture.to_state();
    double wns = classify_wns(kFixture).lambda;
    double prev_gap = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 4; k++) {
        ScanResult r = brute_force_min_lambda(s, ScanGrid{5, 40, 8, std::pow(10.0, -k)});
        double gap = r.best_lambda - wns;
        EXPECT_GE(gap, -1e-9);
        EXPECT_LT(gap, prev_gap) << k;
        prev_gap = gap;
    }
}

TEST(brute_force_min_lambda, optimal_phase_is_a_quadrature) {
    std::vector<GaussianState> states = sample_physical_states(6, 30);
    const double step = 2 * std::numbers::pi / 16;
    for (const GaussianState &s : states) {
        ScanResult r = brute_force_min_lambda(s, ScanGrid{3, 20, 16, 1e-4});
        double to_zero = std::min(r.best_spec.phi, 2 * std::numbers::pi - r.best_spec.phi);
        double to_pi = std::abs(r.best_spec.phi - std::numbers::pi);
        EXPECT_LE(std::min(to_zero, to_pi), step + 1e-12);
    }
}

TEST(sample_physical_states, deterministic_and_physical) {
    std::vector<GaussianState> a = sample_physical_states(7, 300);
    std::vector<GaussianState> b = sample_physical_states(7, 300);
    ASSERT_EQ(a.size(), 300u);
    for (size_t k = 0; k < a.size(); k++) {
        EXPECT_EQ(a[k].cm, b[k].cm);
        EXPECT_TRUE(check_physical(a[k]).physical());
    }
    EXPECT_NE(sample_physical_states(8, 1)[0].cm, a[0].cm);
    EXPECT_THROW(sample_physical_states(1, 0), InvalidInputError);
}

TEST(sample_physical_states, contains_separable_wns_states) {
    std::vector<GaussianState> states = sample_physical_states(7, 10000);
    int wns_separable = 0;
    for (const GaussianState &s : states) {
        SteeringReport r = classify_all(s);
        wns_separable += r.wns && !r.entangled;
    }
    EXPECT_GT(wns_separable, 0);
}

TEST(audit_hierarchy, clean_on_random_states) {
    std::vector<GaussianState> states = sample_physical_states(7, 2000);
    AuditSummary summary = audit_hierarchy(states);
    EXPECT_EQ(summary.checked, 2000u);
    EXPECT_EQ(summary.violations(), 0u);
    EXPECT_EQ(summary.errors, 0u);
}

TEST(audit_hierarchy, fixture_and_empty) {
    std::vector<GaussianState> one{kFixture.to_state()};
    EXPECT_EQ(audit_hierarchy(one).violations(), 0u);
    AuditSummary empty = audit_hierarchy({});
    EXPECT_EQ(empty.checked, 0u);
    EXPECT_EQ(empty.violations(), 0u);
}

TEST(audit_hierarchy, huge_tolerance_surfaces_violations) {
    // With tol far above the state scale nothing reads as entangled, so the few EPR-steerable
    // samples break EPR => entangled.
    std::vector<GaussianState> states = sample_physical_states(7, 10000);
    AuditSummary summary = audit_hierarchy(states, 1000);
    EXPECT_GT(summary.epr_not_entangled, 0u);
}
