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

#ifndef STEERLAB_TMST_TRIANGOLOID_H
#define STEERLAB_TMST_TRIANGOLOID_H

#include <vector>

#include "steerlab/conditioning.h"
#include "steerlab/symplectic_core.h"

namespace steerlab {

/// Two-mode squeezed thermal state: thermal photon numbers per mode and two-mode squeezing r.
struct TmstSpec {
    double n_a = 0;
    double n_b = 0;
    double r = 0;
};

/// One achievable conditional state of mode A, with the POVM that produces it.
/// The analytic quadrature vertex is stored with mu_s = 0 (and mu = 1, which is irrelevant there).
struct TriangoloidPoint {
    double mu = 1;
    double mu_s = 1;
    double mu_c = 1;
    double mu_sc = 1;
    double depth = 0;
};

struct TriangoloidOptions {
    double mu_min = 1e-3;
    double mu_s_min = 1e-3;
};

CanonicalParams tmst_params(const TmstSpec &spec);
GaussianState tmst_state(const TmstSpec &spec);

/// cosh 2r > 1 + 2 N_A (1 + 2 N_B) / (1 + N_A + N_B).
bool tmst_steerable(const TmstSpec &spec);

/// Closed-form conditional (mu_c, mu_sc) for a TMST-form state (c1 = -c2) measured with a
/// Gaussian POVM of purity mu and squeezing parameter mu_s. The measurement phase drops out.
TriangoloidPoint triangoloid_point(const CanonicalParams &canon, double mu, double mu_s);

/// The mu_s -> 0 vertex, from ideal quadrature conditioning.
TriangoloidPoint triangoloid_vertex(const CanonicalParams &canon);

/// Samples the triangoloid of `spec`:
///   1. grid_n x grid_n log-spaced (mu, mu_s) grid, row-major over mu then mu_s;
///   2. the mu = 1 side, the mu_s = 1 side and the mu_s = mu_s_min side (grid_n points each);
///   3. the exact vertex.
/// Total size is grid_n^2 + 3 grid_n + 1.
std::vector<TriangoloidPoint> triangoloid_sample(const TmstSpec &spec, int grid_n, const TriangoloidOptions &opts = {});

/// mu_sc below which a conditional state of purity mu_c is nonclassical: 2 mu_c / (1 + mu_c^2).
double nonclassical_boundary(double mu_c);

/// max(0, 1/2 - lambda_minus) for a conditional state written as (mu_c, mu_sc).
double depth_from_params(double mu_c, double mu_sc);

}  // namespace steerlab

#endif
