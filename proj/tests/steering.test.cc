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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "steerlab/errors.h"
#include "steerlab/oracle.h"
#include "steerlab/tmst_triangoloid.h"
#include "test_oracles.h"

using namespace steerlab;

namespace {

const CanonicalParams kFixture{13.9, 13.9, 4.6, -13.7};
const CanonicalParams kTmsv{1.8810978455418157, 1.8810978455418157, 1.8134302039235093, -1.8134302039235093};

CanonicalParams low_discord(int n) {
    double nn = n;
    return CanonicalParams{(nn + 2) / (2 * nn + 1), nn, 1 / std::sqrt(2 * nn), -std::sqrt(2 * nn / (2 * nn + 1))};
}

Eigen::MatrixXd omega_a_only() {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(4, 4);
    w(0, 1) = 1;
    w(1, 0) = -1;
    return w;
}

}  // namespace

TEST(classify_wns, fixture) {
    SteeringVerdict v = classify_wns(kFixture);
    EXPECT_NEAR(v.lambda, 0.3971223021582766, 1e-12);
    EXPECT_TRUE(v.steerable);
}

TEST(classify_wns, product_state) {
    SteeringVerdict v = classify_wns(CanonicalParams{1, 2, 0, 0});
    EXPECT_EQ(v.lambda, 1);
    EXPECT_FALSE(v.steerable);
}

TEST(classify_wns, low_discord_member) {
    SteeringVerdict v = classify_wns(low_discord(3));
    EXPECT_NEAR(v.lambda, 3.0 / 7.0, 1e-14);
    EXPECT_TRUE(v.steerable);
    EXPECT_TRUE(check_physical(low_discord(3).to_state()).physical());
}

TEST(classify_sns, examples) {
    SteeringVerdict f = classify_sns(kFixture);
    EXPECT_NEAR(f.lambda, 13.9 - 4.6 * 4.6 / 13.9, 1e-12);
    EXPECT_FALSE(f.steerable);

    SteeringVerdict t = classify_sns(kTmsv);
    EXPECT_NEAR(t.lambda, 0.13290111441703986, 1e-9);
    EXPECT_TRUE(t.steerable);
    EXPECT_DOUBLE_EQ(t.lambda, classify_wns(kTmsv).lambda);

    EXPECT_FALSE(classify_sns(CanonicalParams{0.5, 0.5, 0, 0}).steerable);
}

TEST(classify, threshold_is_strict) {
    // a - c^2/b == 1/2 exactly.
    CanonicalParams edge{1, 2, 1, 1};
    EXPECT_EQ(classify_wns(edge).lambda, 0.5);
    EXPECT_FALSE(classify_wns(edge).steerable);
}

TEST(classify, rejects_non_positive_b) {
    EXPECT_THROW(classify_wns(CanonicalParams{1, 0, 0, 0}), InvalidInputError);
    EXPECT_THROW(classify_sns(CanonicalParams{1, -1, 0, 0}), InvalidInputError);
}

TEST(classify_from_invariants, fixture) {
    InvariantLambdas l = classify_from_invariants(symplectic_invariants(kFixture.to_state()));
    EXPECT_NEAR(l.lambda_wns, classify_wns(kFixture).lambda, 1e-9);
    EXPECT_NEAR(l.lambda_sns, classify_sns(kFixture).lambda, 1e-9);
}

TEST(classify_from_invariants, product_vacuum) {
    InvariantLambdas l = classify_from_invariants(SymplecticInvariants{0.25, 0.25, 0, 1.0 / 16});
    EXPECT_NEAR(l.lambda_wns, 0.5, 1e-12);
    EXPECT_NEAR(l.lambda_sns, 0.5, 1e-12);
}

TEST(classify_from_invariants, transformed_tmst) {
    GaussianState s = apply_symplectic(tmst_state(TmstSpec{0.75, 0.75, 1.2}), random_local_symplectic(31));
    InvariantLambdas l = classify_from_invariants(symplectic_invariants(s));
    EXPECT_NEAR(l.lambda_wns, 0.224948, 1e-5);
    EXPECT_NEAR(l.lambda_sns, 0.224948, 1e-5);
}

TEST(classify_from_invariants, inconsistent_invariants_throw) {
    // X^2 < 4 I1 I2 I4.
    EXPECT_THROW(classify_from_invariants(SymplecticInvariants{1, 1, 1, 0.5}), InconsistentInvariantsError);
    EXPECT_THROW(classify_from_invariants(SymplecticInvariants{0, 1, 0, 0}), InconsistentInvariantsError);
}

TEST(classify_from_invariants, agrees_with_canonical_forms_on_random_states) {
    std::vector<GaussianState> states = sample_physical_states(21, 2000);
    for (size_t k = 0; k < states.size(); k++) {
        CanonicalParams canon = canonical_params(states[k]);
        double wns = classify_wns(canon).lambda;
        double sns = classify_sns(canon).lambda;
        GaussianState moved = apply_symplectic(states[k], random_local_symplectic(k));
        for (const GaussianState &s : {states[k], moved}) {
            InvariantLambdas l = classify_from_invariants(symplectic_invariants(s));
            ASSERT_NEAR(l.lambda_wns, wns, 1e-9 * std::max(1.0, std::abs(wns))) << k;
            ASSERT_NEAR(l.lambda_sns, sns, 1e-9 * std::max(1.0, std::abs(sns))) << k;
        }
    }
}

TEST(epr, examples) {
    EXPECT_NEAR(epr_product(kFixture, Direction::kBToA), 0.3971223021582766 * 12.377697841726619, 1e-9);
    EXPECT_FALSE(epr_steerable(kFixture.to_state(), Direction::kBToA));
    EXPECT_TRUE(epr_steerable(tmst_state(TmstSpec{0.75, 0.75, 1.2}), Direction::kBToA));
    EXPECT_FALSE(epr_steerable(tmst_state(TmstSpec{4.5, 4.5, 1.2}), Direction::kBToA));
}

TEST(epr, direction_swaps_roles) {
    // Thermal noise on A only: A can steer B, but B cannot steer A once cosh 2r <= (1 + 3 N_A) / (1 + N_A).
    GaussianState s = tmst_state(TmstSpec{1, 0, 0.5});
    EXPECT_FALSE(epr_steerable(s, Direction::kBToA));
    EXPECT_TRUE(epr_steerable(s, Direction::kAToB));
    CanonicalParams canon = canonical_params(s);
    CanonicalParams swapped{canon.b, canon.a, canon.c1, canon.c2};
    EXPECT_DOUBLE_EQ(epr_product(canon, Direction::kAToB), epr_product(swapped, Direction::kBToA));
}

TEST(epr, eigenvalue_route_matches_embedding_oracle) {
    std::vector<GaussianState> states = sample_physical_states(3, 200);
    for (size_t k = 0; k < states.size(); k++) {
        GaussianState s = apply_symplectic(states[k], random_local_symplectic(k + 100));
        double oracle = steerlab_test::embedded_min_eigenvalue(s.cm, 0.5 * omega_a_only());
        EXPECT_NEAR(epr_min_eigenvalue(s, Direction::kBToA), oracle, 1e-9 * std::max(1.0, s.cm.cwiseAbs().maxCoeff()));
    }
}

TEST(epr, product_and_eigenvalue_routes_agree) {
    std::vector<GaussianState> states = sample_physical_states(9, 2000);
    for (const GaussianState &s : states) {
        CanonicalParams canon = canonical_params(s);
        for (Direction d : {Direction::kBToA, Direction::kAToB}) {
            double product = epr_product(canon, d);
            double eig = epr_min_eigenvalue(s, d);
            if (std::abs(product - 0.25) > 1e-6 && std::abs(eig) > 1e-6) {
                EXPECT_EQ(product < 0.25, eig < 0);
            }
        }
    }
}

TEST(is_entangled, examples) {
    EXPECT_FALSE(is_entangled(kFixture.to_state()));
    EXPECT_TRUE(is_entangled(kTmsv.to_state()));
    EXPECT_NEAR(ppt_min_eigenvalue(kTmsv.to_state()), std::exp(-2.0) / 2 - 0.5, 1e-9);
    EXPECT_FALSE(is_entangled(CanonicalParams{0.5, 0.5, 0, 0}.to_state()));
}

TEST(is_entangled, same_sign_correlations_are_separable) {
    std::vector<GaussianState> states = sample_physical_states(17, 3000);
    int tested = 0;
    for (const GaussianState &s : states) {
        CanonicalParams canon = canonical_params(s);
        if (canon.c1 * canon.c2 > 0) {
            EXPECT_FALSE(is_entangled(s));
            tested++;
        }
    }
    EXPECT_GT(tested, 100);
}

TEST(is_entangled, ppt_eigenvalue_matches_embedding_oracle) {
    Eigen::Matrix4d lambda = Eigen::Vector4d(1, 1, 1, -1).asDiagonal();
    for (uint64_t seed = 0; seed < 50; seed++) {
        GaussianState s = apply_symplectic(tmst_state(TmstSpec{0.2, 0.7, 0.1 * seed}), random_local_symplectic(seed));
        Eigen::Matrix4d pt = lambda * s.cm * lambda;
        double oracle = steerlab_test::embedded_min_eigenvalue(pt, 0.5 * steerlab_test::big_omega(2));
        EXPECT_NEAR(ppt_min_eigenvalue(s), oracle, 1e-9 * std::max(1.0, s.cm.cwiseAbs().maxCoeff()));
    }
}

TEST(hierarchy_report, fixture) {
    SteeringReport r = hierarchy_report(kFixture.to_state());
    EXPECT_TRUE(r.wns);
    EXPECT_FALSE(r.sns);
    EXPECT_FALSE(r.epr_b_to_a);
    EXPECT_FALSE(r.entangled);
    EXPECT_FALSE(r.marginal);
    EXPECT_NEAR(r.lambda_wns, 0.397122, 1e-5);
}

TEST(hierarchy_report, tmst_steerable) {
    SteeringReport r = hierarchy_report(tmst_state(TmstSpec{0.75, 0.75, 1.2}));
    EXPECT_TRUE(r.wns);
    EXPECT_TRUE(r.sns);
    EXPECT_TRUE(r.epr_b_to_a);
    EXPECT_TRUE(r.entangled);
}

TEST(hierarchy_report, vacuum_is_all_false_and_marginal) {
    SteeringReport r = hierarchy_report(CanonicalParams{0.5, 0.5, 0, 0}.to_state());
    EXPECT_FALSE(r.wns);
    EXPECT_FALSE(r.sns);
    EXPECT_FALSE(r.epr_b_to_a);
    EXPECT_FALSE(r.epr_a_to_b);
    EXPECT_FALSE(r.entangled);
    EXPECT_TRUE(r.marginal);
}

TEST(hierarchy_report, rejects_unphysical) {
    EXPECT_THROW(hierarchy_report(CanonicalParams{0.5, 0.5, 1, -1}.to_state()), InvalidInputError);
}

TEST(hierarchy_report, invariant_under_local_symplectics) {
    std::vector<GaussianState> states = sample_physical_states(44, 300);
    for (size_t k = 0; k < states.size(); k++) {
        SteeringReport r0 = classify_all(states[k]);
        if (r0.marginal) continue;
        SteeringReport r1 = classify_all(apply_symplectic(states[k], random_local_symplectic(k)));
        EXPECT_EQ(r0.wns, r1.wns);
        EXPECT_EQ(r0.sns, r1.sns);
        EXPECT_EQ(r0.epr_b_to_a, r1.epr_b_to_a);
        EXPECT_EQ(r0.epr_a_to_b, r1.epr_a_to_b);
        EXPECT_EQ(r0.entangled, r1.entangled);
        EXPECT_NEAR(r0.lambda_wns, r1.lambda_wns, 1e-8 * std::max(1.0, std::abs(r0.lambda_wns)));
        EXPECT_NEAR(r0.lambda_sns, r1.lambda_sns, 1e-8 * std::max(1.0, std::abs(r0.lambda_sns)));
    }
}

TEST(hierarchy_report, tmst_notions_coincide) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> n(0, 5);
    std::uniform_real_distribution<double> r(0, 2);
    for (int k = 0; k < 500; k++) {
        SteeringReport rep = classify_all(tmst_state(TmstSpec{n(rng), n(rng), r(rng)}));
        if (rep.marginal) continue;
        EXPECT_EQ(rep.wns, rep.sns);
        EXPECT_EQ(rep.sns, rep.epr_b_to_a);
    }
}

TEST(hierarchy_report, low_discord_family_is_wns) {
    for (int n : {3, 5, 10, 50}) {
        SteeringReport rep = hierarchy_report(low_discord(n).to_state());
        EXPECT_TRUE(rep.wns) << n;
        EXPECT_NEAR(rep.lambda_wns, n / (2.0 * n + 1), 1e-12) << n;
    }
}
