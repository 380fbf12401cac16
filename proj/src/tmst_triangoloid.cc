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

#include "steerlab/tmst_triangoloid.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "steerlab/errors.h"

namespace steerlab {

namespace {

void validate_spec(const TmstSpec &spec) {
    if (!(spec.n_a >= 0) || !(spec.n_b >= 0) || !(spec.r >= 0) || !std::isfinite(spec.n_a) ||
        !std::isfinite(spec.n_b) || !std::isfinite(spec.r)) {
        std::stringstream ss;
        ss << "TMST needs finite N_A, N_B, r >= 0, got (" << spec.n_a << ", " << spec.n_b << ", " << spec.r << ").";
        throw InvalidInputError(ss.str());
    }
}

void validate_unit_interval(double x, const char *name) {
    if (!(x > 0 && x <= 1)) {
        std::stringstream ss;
        ss << name << " must be in (0, 1], got " << x << ".";
        throw InvalidInputError(ss.str());
    }
}

std::vector<double> log_grid(double lo, int n) {
    std::vector<double> out(n);
    double log_lo = std::log(lo);
    for (int i = 0; i < n; i++) {
        double frac = static_cast<double>(i) / (n - 1);
        out[i] = std::exp(log_lo * (1 - frac));
    }
    return out;
}

}  // namespace

CanonicalParams tmst_params(const TmstSpec &spec) {
    validate_spec(spec);
    double total = 1 + spec.n_a + spec.n_b;
    double diff = spec.n_a - spec.n_b;
    double ch = std::cosh(2 * spec.r);
    double c = 0.5 * total * std::sinh(2 * spec.r);
    return CanonicalParams{0.5 * total * ch + 0.5 * diff, 0.5 * total * ch - 0.5 * diff, c, -c};
}

GaussianState tmst_state(const TmstSpec &spec) {
    return tmst_params(spec).to_state();
}

bool tmst_steerable(const TmstSpec &spec) {
    validate_spec(spec);
    double bound = 1 + 2 * spec.n_a * (1 + 2 * spec.n_b) / (1 + spec.n_a + spec.n_b);
    return std::cosh(2 * spec.r) > bound;
}

double depth_from_params(double mu_c, double mu_sc) {
    ConditionalParams p{mu_c, mu_sc, 0};
    return std::max(0.0, 0.5 - p.lambda_minus());
}

TriangoloidPoint triangoloid_point(const CanonicalParams &canon, double mu, double mu_s) {
    validate_unit_interval(mu, "mu");
    validate_unit_interval(mu_s, "mu_s");
    double c = std::abs(canon.c1);
    if (std::abs(canon.c1 + canon.c2) > 1e-9 * std::max(1.0, c) || !(canon.a > 0) || !(canon.b > 0)) {
        throw InvalidInputError("triangoloid_point needs TMST-form canonical parameters with c1 = -c2.");
    }
    double a = canon.a;
    double c_sq = c * c;
    double kappa = kappa_s(mu_s);
    double alpha = canon.b + 1 / (2 * mu * mu_s);
    double beta = kappa / (2 * mu * mu_s);
    // alpha - beta = b + (1 - kappa) / (2 mu mu_s), written without cancellation.
    double alpha_minus_beta = canon.b + mu_s / (2 * mu * (1 + kappa));
    double gram = alpha_minus_beta * (alpha + beta);
    double det_num = (c_sq - a * (alpha + beta)) * (c_sq - a * alpha_minus_beta);
    double denom = a * gram - alpha * c_sq;

    double tol = 1e-9 * std::max(1.0, a * a * gram);
    if (!(gram > 0) || det_num < -tol || denom < -tol) {
        std::stringstream ss;
        ss << "Degenerate triangoloid point (gram=" << gram << ", numerator=" << det_num << ", denominator=" << denom
           << ").";
        throw NumericalDegeneracyError(ss.str());
    }
    det_num = std::max(det_num, 0.0);
    if (!(det_num > 0) || !(denom > 0)) {
        throw NumericalDegeneracyError("Conditional state of the triangoloid point is singular.");
    }

    TriangoloidPoint p;
    p.mu = mu;
    p.mu_s = mu_s;
    p.mu_c = 0.5 * std::sqrt(gram / det_num);
    p.mu_sc = std::sqrt(gram * det_num) / denom;
    p.depth = depth_from_params(p.mu_c, p.mu_sc);
    return p;
}

TriangoloidPoint triangoloid_vertex(const CanonicalParams &canon) {
    ConditionalParams cond = conditional_params(condition_quadrature(canon, QuadratureBranch::kUsesC1));
    TriangoloidPoint p;
    p.mu = 1;
    p.mu_s = 0;
    p.mu_c = cond.mu_c;
    p.mu_sc = cond.mu_sc;
    p.depth = depth_from_params(cond.mu_c, cond.mu_sc);
    return p;
}

std::vector<TriangoloidPoint> triangoloid_sample(const TmstSpec &spec, int grid_n, const TriangoloidOptions &opts) {
    if (grid_n < 2) {
        throw InvalidInputError("Triangoloid grid needs at least 2 points per axis, got " + std::to_string(grid_n) + ".");
    }
    if (!(opts.mu_min > 0 && opts.mu_min < 1) || !(opts.mu_s_min > 0 && opts.mu_s_min < 1)) {
        throw InvalidInputError("Triangoloid grid minima must be in (0, 1).");
    }
    CanonicalParams canon = tmst_params(spec);
    std::vector<double> mus = log_grid(opts.mu_min, grid_n);
    std::vector<double> mu_ss = log_grid(opts.mu_s_min, grid_n);

    size_t n = static_cast<size_t>(grid_n);
    std::vector<TriangoloidPoint> out;
    out.reserve(n * n + 3 * n + 1);
    for (double mu : mus) {
        for (double mu_s : mu_ss) {
            out.push_back(triangoloid_point(canon, mu, mu_s));
        }
    }
    for (double mu_s : mu_ss) {
        out.push_back(triangoloid_point(canon, 1.0, mu_s));
    }
    for (double mu : mus) {
        out.push_back(triangoloid_point(canon, mu, 1.0));
    }
    for (double mu : mus) {
        out.push_back(triangoloid_point(canon, mu, opts.mu_s_min));
    }
    out.push_back(triangoloid_vertex(canon));
    return out;
}

double nonclassical_boundary(double mu_c) {
    validate_unit_interval(mu_c, "mu_c");
    return 2 * mu_c / (1 + mu_c * mu_c);
}

}  // namespace steerlab
