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

#ifndef STEERLAB_SYMPLECTIC_CORE_H
#define STEERLAB_SYMPLECTIC_CORE_H

#include <cstdint>

#include <Eigen/Core>

namespace steerlab {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Vec2 = Eigen::Vector2d;
using Vec4 = Eigen::Vector4d;

/// Absolute tolerance on the least eigenvalue of cm + (i/2)Omega when deciding positivity.
inline constexpr double kPsdTolerance = 1e-9;

/// Width of the band around a classification threshold inside which a state is reported as marginal.
inline constexpr double kBoundaryTolerance = 1e-9;

/// Mean vector and covariance matrix of a one- or two-mode Gaussian state.
///
/// Quadratures are ordered (x1, p1, x2, p2) and the vacuum has variance 1/2.
/// Mode A is the first mode and mode B the second.
struct GaussianState {
    int n_modes = 2;
    Eigen::VectorXd mean;
    Eigen::MatrixXd cm;

    static GaussianState single_mode(const Mat2 &cm, const Vec2 &mean = Vec2::Zero());
    static GaussianState two_mode(const Mat4 &cm, const Vec4 &mean = Vec4::Zero());

    /// 2x2 blocks of a two-mode CM: [[A, C], [C^T, B]].
    Mat2 block_a() const;
    Mat2 block_b() const;
    Mat2 block_c() const;
    Vec2 mean_a() const;
    Vec2 mean_b() const;
};

/// (a, b, c1, c2) of the canonical form diag(a, a, b, b) with correlation block diag(c1, c2).
struct CanonicalParams {
    double a = 0.5;
    double b = 0.5;
    double c1 = 0.0;
    double c2 = 0.0;

    /// max(|c1|, |c2|)
    double c_max() const;
    /// min(|c1|, |c2|)
    double c_min() const;

    /// Reorders into the |c1| >= |c2|, c1 >= 0 convention without changing the state's
    /// local-symplectic class (the product c1*c2 keeps its sign).
    CanonicalParams normalized() const;

    Mat4 to_cm() const;
    GaussianState to_state() const;

    bool operator==(const CanonicalParams &) const = default;
};

struct SymplecticInvariants {
    double i1 = 0;  // det A
    double i2 = 0;  // det B
    double i3 = 0;  // det C
    double i4 = 0;  // det cm
};

struct PhysicalityReport {
    bool symmetric = false;
    bool ur_satisfied = false;
    double min_ur_eigenvalue = 0;

    bool physical() const {
        return symmetric && ur_satisfied;
    }
};

/// Pair of 2x2 unimodular matrices acting on modes A and B.
struct LocalSymplectic {
    Mat2 s_a = Mat2::Identity();
    Mat2 s_b = Mat2::Identity();
};

/// Single-mode symplectic form [[0, 1], [-1, 0]].
Mat2 omega();

/// Block-diagonal symplectic form for `n_modes` modes.
Eigen::MatrixXd symplectic_form(int n_modes);

/// Least eigenvalue of the Hermitian matrix `re + i * im` (`im` antisymmetric).
double min_hermitian_eigenvalue(const Eigen::MatrixXd &re, const Eigen::MatrixXd &im);

/// Checks symmetry and the uncertainty relation cm + (i/2)Omega >= 0.
///
/// Throws InvalidInputError when the dimensions do not match n_modes or the mean is not finite.
PhysicalityReport check_physical(const GaussianState &state, double tol = kPsdTolerance);

/// Throws InvalidInputError unless `state` is a physical two-mode state.
void require_physical_two_mode(const GaussianState &state, double tol = kPsdTolerance);

/// Block determinants of an arbitrary (not necessarily canonical) two-mode CM.
SymplecticInvariants symplectic_invariants(const GaussianState &state);

/// Recovers the canonical parameters from the four local invariants.
///
/// c1^2 and c2^2 are the two roots of y^2 - t*y + I3^2 with t = (I1*I2 + I3^2 - I4) / sqrt(I1*I2).
/// Throws InconsistentInvariantsError when the roots are not real and non-negative, up to a
/// tolerance relative to the scale of t^2.
CanonicalParams canonical_params(const SymplecticInvariants &inv, double tol = kPsdTolerance);

/// Canonical parameters of a two-mode state. CMs that are already in canonical form are read
/// directly; anything else goes through the invariants.
CanonicalParams canonical_params(const GaussianState &state, double tol = kPsdTolerance);

/// Least eigenvalue of a symmetric 2x2 matrix, in closed form.
double min_cm_eigenvalue(const Mat2 &cm);

/// Nonclassical depth max(0, 1/2 - lambda_min) of a single-mode Gaussian CM.
///
/// Throws InvalidInputError for an unphysical CM.
double nonclassical_depth(const Mat2 &cm);

/// True when the single-mode CM has a least eigenvalue strictly below 1/2.
bool is_nonclassical(const Mat2 &cm);

/// Applies S_A (+) S_B. Throws InvalidInputError unless det(S_A) = det(S_B) = 1 within 1e-9.
GaussianState apply_symplectic(const GaussianState &state, const Mat2 &s_a, const Mat2 &s_b);
GaussianState apply_symplectic(const GaussianState &state, const LocalSymplectic &s);

/// Deterministic rotation * squeezer * rotation per mode, with squeezing |r| <= 2.
LocalSymplectic random_local_symplectic(uint64_t seed);

}  // namespace steerlab

#endif
