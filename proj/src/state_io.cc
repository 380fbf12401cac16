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

#include "steerlab/state_io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "steerlab/errors.h"

#ifndef STEERLAB_VERSION
#define STEERLAB_VERSION "0.0.0"
#endif

namespace steerlab {

namespace {

double number_at(const Json &obj, const char *key, const char *context) {
    if (!obj.contains(key)) {
        throw StateFileError(std::string(context) + " is missing \"" + key + "\".");
    }
    const Json &v = obj.at(key);
    if (!v.is_number()) {
        throw StateFileError(std::string(context) + "." + key + " must be a number.");
    }
    double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw StateFileError(std::string(context) + "." + key + " must be finite.");
    }
    return x;
}

void require_only_keys(const Json &obj, std::initializer_list<const char *> keys, const char *context) {
    for (const auto &item : obj.items()) {
        bool known = false;
        for (const char *k : keys) {
            known |= item.key() == k;
        }
        if (!known) {
            throw StateFileError(std::string(context) + " has unknown key \"" + item.key() + "\".");
        }
    }
}

std::vector<double> numbers(const Json &v, size_t expected, const char *context) {
    if (!v.is_array() || v.size() != expected) {
        throw StateFileError(std::string(context) + " must be an array of " + std::to_string(expected) + " numbers.");
    }
    std::vector<double> out;
    for (const Json &x : v) {
        if (!x.is_number() || !std::isfinite(x.get<double>())) {
            throw StateFileError(std::string(context) + " must contain only finite numbers.");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

}  // namespace

StateFile parse_state_file(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw StateFileError(std::string("Malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw StateFileError("State file must be a JSON object.");
    }
    int forms = static_cast<int>(doc.contains("cm")) + static_cast<int>(doc.contains("canonical")) +
                static_cast<int>(doc.contains("tmst"));
    if (forms != 1) {
        throw StateFileError("State file needs exactly one of \"cm\", \"canonical\", \"tmst\".");
    }

    StateFile file;
    file.echo = doc;
    if (doc.contains("cm")) {
        require_only_keys(doc, {"cm", "mean"}, "State file");
        const Json &rows = doc.at("cm");
        if (!rows.is_array() || rows.size() != 4) {
            throw StateFileError("\"cm\" must be a 4x4 array.");
        }
        Mat4 cm;
        for (int i = 0; i < 4; i++) {
            std::vector<double> row = numbers(rows[i], 4, "cm row");
            for (int j = 0; j < 4; j++) {
                cm(i, j) = row[j];
            }
        }
        Vec4 mean = Vec4::Zero();
        if (doc.contains("mean")) {
            std::vector<double> m = numbers(doc.at("mean"), 4, "\"mean\"");
            mean = Vec4(m[0], m[1], m[2], m[3]);
        }
        file.form = StateForm::kCm;
        file.state = GaussianState::two_mode(cm, mean);
    } else if (doc.contains("canonical")) {
        require_only_keys(doc, {"canonical"}, "State file");
        const Json &c = doc.at("canonical");
        if (!c.is_object()) {
            throw StateFileError("\"canonical\" must be an object.");
        }
        require_only_keys(c, {"a", "b", "c1", "c2"}, "\"canonical\"");
        CanonicalParams canon{number_at(c, "a", "canonical"), number_at(c, "b", "canonical"),
                              number_at(c, "c1", "canonical"), number_at(c, "c2", "canonical")};
        file.form = StateForm::kCanonical;
        file.canonical = canon;
        file.state = canon.to_state();
    } else {
        require_only_keys(doc, {"tmst"}, "State file");
        const Json &t = doc.at("tmst");
        if (!t.is_object()) {
            throw StateFileError("\"tmst\" must be an object.");
        }
        require_only_keys(t, {"na", "nb", "r"}, "\"tmst\"");
        TmstSpec spec{number_at(t, "na", "tmst"), number_at(t, "nb", "tmst"), number_at(t, "r", "tmst")};
        try {
            file.state = tmst_state(spec);
        } catch (const InvalidInputError &e) {
            throw StateFileError(e.what());
        }
        file.form = StateForm::kTmst;
        file.tmst = spec;
    }
    return file;
}

double round_sig(double x, int digits) {
    if (!std::isfinite(x) || x == 0) {
        return x;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

Json physicality_json(const PhysicalityReport &report) {
    Json j;
    j["symmetric"] = report.symmetric;
    j["ur_satisfied"] = report.ur_satisfied;
    j["min_ur_eigenvalue"] = round_sig(report.min_ur_eigenvalue);
    return j;
}

Json canonical_json(const CanonicalParams &canon) {
    Json j;
    j["a"] = canon.a;
    j["b"] = canon.b;
    j["c1"] = canon.c1;
    j["c2"] = canon.c2;
    return j;
}

Json state_json(const GaussianState &state) {
    Json j;
    Json rows = Json::array();
    for (int i = 0; i < state.cm.rows(); i++) {
        Json row = Json::array();
        for (int k = 0; k < state.cm.cols(); k++) {
            row.push_back(state.cm(i, k));
        }
        rows.push_back(row);
    }
    j["cm"] = rows;
    Json mean = Json::array();
    for (int i = 0; i < state.mean.size(); i++) {
        mean.push_back(state.mean(i));
    }
    j["mean"] = mean;
    return j;
}

Json analysis_report(const StateFile &file, double tol) {
    PhysicalityReport phys = check_physical(file.state, tol);
    CanonicalParams canon = canonical_params(file.state, tol);
    SymplecticInvariants inv = symplectic_invariants(file.state);
    SteeringReport report = hierarchy_report(file.state, tol);

    Json j;
    j["tool"] = "steerlab";
    j["version"] = STEERLAB_VERSION;
    j["input"] = file.echo;
    j["physicality"] = physicality_json(phys);
    j["canonical"] = canonical_json(canon);
    j["invariants"] = {
        {"I1", round_sig(inv.i1)},
        {"I2", round_sig(inv.i2)},
        {"I3", round_sig(inv.i3)},
        {"I4", round_sig(inv.i4)},
    };
    j["lambda_wns"] = round_sig(report.lambda_wns);
    j["lambda_sns"] = round_sig(report.lambda_sns);
    j["epr_product_b_to_a"] = round_sig(report.epr_product_b_to_a);
    j["flags"] = {
        {"wns", report.wns},
        {"sns", report.sns},
        {"epr_b_to_a", report.epr_b_to_a},
        {"epr_a_to_b", report.epr_a_to_b},
        {"entangled", report.entangled},
        {"marginal", report.marginal},
    };
    return j;
}

void write_triangoloid_csv(std::ostream &out, const std::vector<TriangoloidPoint> &points) {
    out << "mu,mu_s,mu_c,mu_sc,depth\n";
    char buf[256];
    for (const TriangoloidPoint &p : points) {
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%.9g,%.9g\n", p.mu, p.mu_s, p.mu_c, p.mu_sc, p.depth);
        out << buf;
    }
}

}  // namespace steerlab
