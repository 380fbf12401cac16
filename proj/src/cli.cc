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

#include "steerlab/cli.h"

#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "steerlab/errors.h"
#include "steerlab/oracle.h"
#include "steerlab/state_io.h"

#ifndef STEERLAB_VERSION
#define STEERLAB_VERSION "0.0.0"
#endif

namespace steerlab {

namespace {

struct Streams {
    std::istream &in;
    std::ostream &out;
    std::ostream &err;
};

bool read_input(const std::string &path, Streams io, std::string &text) {
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream f(path);
    if (!f) {
        io.err << "steerlab: cannot read " << path << "\n";
        return false;
    }
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    return true;
}

// Shared front half of analyze and scan: parse and require a physical state.
int load_physical_state(const std::string &path, Streams io, double tol, StateFile &file) {
    std::string text;
    if (!read_input(path, io, text)) {
        return exit_code::kBadInput;
    }
    try {
        file = parse_state_file(text);
    } catch (const StateFileError &e) {
        io.err << "steerlab: " << e.what() << "\n";
        return exit_code::kBadInput;
    }
    PhysicalityReport phys = check_physical(file.state, tol);
    if (!phys.physical()) {
        Json j;
        j["error"] = "unphysical state";
        j["physicality"] = physicality_json(phys);
        io.out << j.dump(2) << "\n";
        io.err << "steerlab: state violates the uncertainty relation (least eigenvalue "
               << phys.min_ur_eigenvalue << ")\n";
        return exit_code::kUnphysical;
    }
    return exit_code::kOk;
}

int cmd_analyze(const std::string &path, Streams io, double tol) {
    StateFile file;
    if (int rc = load_physical_state(path, io, tol, file); rc != exit_code::kOk) {
        return rc;
    }
    io.out << analysis_report(file, tol).dump(2) << "\n";
    return exit_code::kOk;
}

struct TmstArgs {
    double n_a = 0;
    double n_b = 0;
    double r = 0;
    std::string csv_path;
    int grid = 200;
    double mu_min = 1e-3;
    double mu_s_min = 1e-3;
};

int cmd_tmst(const TmstArgs &args, Streams io) {
    TmstSpec spec{args.n_a, args.n_b, args.r};
    CanonicalParams canon;
    try {
        canon = tmst_params(spec);
    } catch (const InvalidInputError &e) {
        io.err << "steerlab: " << e.what() << "\n";
        return exit_code::kBadInput;
    }
    bool steerable = tmst_steerable(spec);
    TriangoloidPoint vertex = triangoloid_vertex(canon);
    double vertex_lambda = canon.a - canon.c_max() * canon.c_max() / canon.b;

    Json j;
    j["tmst"] = {{"na", spec.n_a}, {"nb", spec.n_b}, {"r", spec.r}};
    j["canonical"] = canonical_json(canon);
    j["verdict"] = steerable ? "steerable" : "not steerable";
    j["steerable"] = steerable;
    j["vertex_lambda"] = round_sig(vertex_lambda);
    j["vertex"] = {
        {"mu_c", round_sig(vertex.mu_c)}, {"mu_sc", round_sig(vertex.mu_sc)}, {"depth", round_sig(vertex.depth)}};

    if (!args.csv_path.empty()) {
        std::vector<TriangoloidPoint> points;
        try {
            points = triangoloid_sample(spec, args.grid, TriangoloidOptions{args.mu_min, args.mu_s_min});
        } catch (const InvalidInputError &e) {
            io.err << "steerlab: " << e.what() << "\n";
            return exit_code::kBadInput;
        }
        size_t positive = 0;
        for (const TriangoloidPoint &p : points) {
            positive += p.depth > 0;
        }
        if (args.csv_path == "-") {
            write_triangoloid_csv(io.out, points);
        } else {
            std::ofstream f(args.csv_path);
            if (f) {
                write_triangoloid_csv(f, points);
                f.flush();
            }
            if (!f) {
                io.err << "steerlab: cannot write " << args.csv_path << "\n";
                return exit_code::kUnwritable;
            }
        }
        j["triangoloid"] = {
            {"path", args.csv_path}, {"grid", args.grid}, {"rows", points.size()}, {"depth_positive_rows", positive}};
    }
    if (args.csv_path != "-") {
        io.out << j.dump(2) << "\n";
    }
    return exit_code::kOk;
}

int cmd_scan(const std::string &path, const std::string &grid_text, double mu_s_min, Streams io, double tol) {
    ScanGrid grid;
    grid.mu_s_min = mu_s_min;
    {
        std::stringstream ss(grid_text);
        std::string part;
        std::vector<int> dims;
        while (std::getline(ss, part, ',')) {
            try {
                size_t used = 0;
                dims.push_back(std::stoi(part, &used));
                if (used != part.size()) {
                    dims.clear();
                    break;
                }
            } catch (const std::exception &) {
                dims.clear();
                break;
            }
        }
        if (dims.size() != 3 || dims[0] < 2 || dims[1] < 2 || dims[2] < 2) {
            io.err << "steerlab: --grid expects nmu,nmus,nphi with each >= 2, got \"" << grid_text << "\"\n";
            return exit_code::kBadInput;
        }
        grid.n_mu = dims[0];
        grid.n_mus = dims[1];
        grid.n_phi = dims[2];
    }
    if (!(grid.mu_s_min > 0 && grid.mu_s_min < 1)) {
        io.err << "steerlab: --mus-min must be in (0, 1)\n";
        return exit_code::kBadInput;
    }

    StateFile file;
    if (int rc = load_physical_state(path, io, tol, file); rc != exit_code::kOk) {
        return rc;
    }
    ScanResult scan = brute_force_min_lambda(file.state, grid);
    CanonicalParams canon = canonical_params(file.state, tol);
    double lambda_wns = classify_wns(canon).lambda;

    Json j;
    j["input"] = file.echo;
    j["best_lambda"] = round_sig(scan.best_lambda);
    j["best_measurement"] = {{"mu", round_sig(scan.best_spec.mu)},
                             {"mu_s", round_sig(scan.best_spec.mu_s)},
                             {"phi", round_sig(scan.best_spec.phi)}};
    j["lambda_wns"] = round_sig(lambda_wns);
    j["gap"] = round_sig(scan.best_lambda - lambda_wns);
    j["grid"] = {{"n_mu", grid.n_mu}, {"n_mus", grid.n_mus}, {"n_phi", grid.n_phi}, {"mu_s_min", grid.mu_s_min}};
    j["monotone_in_mus"] = scan.monotone_in_mus;
    io.out << j.dump(2) << "\n";
    return exit_code::kOk;
}

bool lambdas_agree(double x, double y) {
    return std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(y));
}

int cmd_audit(uint64_t seed, size_t count, Streams io, double tol) {
    std::vector<GaussianState> states = sample_physical_states(seed, count);
    AuditSummary audit = audit_hierarchy(states, tol);

    // Invariant-form criterion against the canonical-form one, before and after a random local
    // symplectic transformation.
    std::vector<size_t> mismatched;
    for (size_t k = 0; k < states.size(); k++) {
        bool ok = true;
        try {
            CanonicalParams canon = canonical_params(states[k], tol);
            double wns = classify_wns(canon).lambda;
            double sns = classify_sns(canon).lambda;
            GaussianState moved = apply_symplectic(states[k], random_local_symplectic(seed + k));
            for (const GaussianState *s : {&states[k], &moved}) {
                InvariantLambdas l = classify_from_invariants(symplectic_invariants(*s), tol);
                ok &= lambdas_agree(l.lambda_wns, wns) && lambdas_agree(l.lambda_sns, sns);
            }
        } catch (const std::exception &) {
            ok = false;
        }
        if (!ok) {
            mismatched.push_back(k);
        }
    }

    size_t violations = audit.violations() + mismatched.size();
    Json j;
    j["seed"] = seed;
    j["count"] = count;
    j["checked"] = audit.checked;
    j["violations"] = violations;
    j["sns_not_wns"] = audit.sns_not_wns;
    j["sns_not_epr_b_to_a"] = audit.sns_not_epr;
    j["epr_b_to_a_not_entangled"] = audit.epr_not_entangled;
    j["classifier_errors"] = audit.errors;
    j["invariant_mismatches"] = mismatched.size();
    j["summary"] = std::to_string(violations) + " violations";
    if (violations == 0) {
        io.out << j.dump(2) << "\n";
        return exit_code::kOk;
    }
    Json offending = Json::array();
    std::vector<size_t> all = audit.offending;
    all.insert(all.end(), mismatched.begin(), mismatched.end());
    for (size_t k = 0; k < all.size() && k < 20; k++) {
        Json s = state_json(states[all[k]]);
        s["index"] = all[k];
        offending.push_back(s);
    }
    j["offending"] = offending;
    io.out << j.dump(2) << "\n";
    io.err << "steerlab: audit found " << violations << " violations\n";
    return exit_code::kViolations;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err,
            const std::optional<std::string> &tol_env) {
    Streams io{in, out, err};

    CLI::App app{"Nonclassical steering, EPR steering and entanglement of two-mode Gaussian states."};
    app.name("steerlab");
    app.set_version_flag("--version", STEERLAB_VERSION);
    app.require_subcommand(1);

    std::string analyze_path = "-";
    CLI::App *analyze = app.add_subcommand("analyze", "Classify a state file (path or - for stdin).");
    analyze->add_option("input", analyze_path, "State file");

    TmstArgs tmst_args;
    CLI::App *tmst = app.add_subcommand("tmst", "Universal steerability verdict and triangoloid of a TMST.");
    tmst->add_option("na", tmst_args.n_a, "Thermal photons in mode A")->required();
    tmst->add_option("nb", tmst_args.n_b, "Thermal photons in mode B")->required();
    tmst->add_option("r", tmst_args.r, "Two-mode squeezing")->required();
    tmst->add_option("--triangoloid", tmst_args.csv_path, "Write the triangoloid CSV here (- for stdout)");
    tmst->add_option("--grid", tmst_args.grid, "Grid points per axis")->check(CLI::Range(2, 2000));
    tmst->add_option("--mu-min", tmst_args.mu_min, "Smallest measurement purity")->check(CLI::Range(1e-12, 1.0));
    tmst->add_option("--mus-min", tmst_args.mu_s_min, "Smallest measurement squeezing parameter")
        ->check(CLI::Range(1e-12, 1.0));

    std::string scan_path = "-";
    std::string scan_grid = "5,40,8";
    double scan_mus_min = 1e-4;
    CLI::App *scan = app.add_subcommand("scan", "Brute-force scan of Gaussian measurements on mode B.");
    scan->add_option("input", scan_path, "State file");
    scan->add_option("--grid", scan_grid, "nmu,nmus,nphi");
    scan->add_option("--mus-min", scan_mus_min, "Smallest mu_s in the scan");

    uint64_t audit_seed = 7;
    size_t audit_count = 10000;
    CLI::App *audit = app.add_subcommand("audit", "Sample random states and check the steering hierarchy.");
    audit->add_option("--seed", audit_seed, "Sampler seed");
    audit->add_option("--count", audit_count, "Number of states")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? exit_code::kOk : exit_code::kBadInput;
    }

    double tol = kPsdTolerance;
    if (tol_env.has_value()) {
        try {
            size_t used = 0;
            tol = std::stod(*tol_env, &used);
            if (used != tol_env->size() || !std::isfinite(tol) || tol < 0) {
                throw std::invalid_argument("bad");
            }
        } catch (const std::exception &) {
            err << "steerlab: STEERLAB_TOL must be a finite non-negative number, got \"" << *tol_env << "\"\n";
            return exit_code::kBadInput;
        }
    }

    try {
        if (*analyze) {
            return cmd_analyze(analyze_path, io, tol);
        }
        if (*tmst) {
            return cmd_tmst(tmst_args, io);
        }
        if (*scan) {
            return cmd_scan(scan_path, scan_grid, scan_mus_min, io, tol);
        }
        return cmd_audit(audit_seed, audit_count, io, tol);
    } catch (const InternalConsistencyError &e) {
        err << "steerlab: internal consistency check failed: " << e.what() << "\n";
        return exit_code::kViolations;
    } catch (const std::exception &e) {
        err << "steerlab: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace steerlab
