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

#include <sstream>

#include "gtest/gtest.h"

using namespace steerlab;

TEST(parse_state_file, canonical_form) {
    StateFile f = parse_state_file(R"({"canonical": {"a": 13.9, "b": 13.9, "c1": 4.6, "c2": -13.7}})");
    EXPECT_EQ(f.form, StateForm::kCanonical);
    ASSERT_TRUE(f.canonical.has_value());
    EXPECT_EQ(f.canonical->c2, -13.7);
    EXPECT_EQ(f.state.cm(1, 3), -13.7);
    EXPECT_TRUE(f.state.mean.isZero());
}

TEST(parse_state_file, cm_form_with_mean) {
    StateFile f = parse_state_file(R"({
        "cm": [[1, 0, 0.5, 0], [0, 1, 0, -0.5], [0.5, 0, 1, 0], [0, -0.5, 0, 1]],
        "mean": [1, 2, 3, 4]})");
    EXPECT_EQ(f.form, StateForm::kCm);
    EXPECT_EQ(f.state.cm(0, 2), 0.5);
    EXPECT_EQ(f.state.mean(3), 4);
    EXPECT_FALSE(f.canonical.has_value());
}

TEST(parse_state_file, tmst_form) {
    StateFile f = parse_state_file(R"({"tmst": {"na": 0.75, "nb": 0.75, "r": 1.2}})");
    EXPECT_EQ(f.form, StateForm::kTmst);
    ASSERT_TRUE(f.tmst.has_value());
    EXPECT_NEAR(f.state.cm(0, 0), 6.946184, 1e-6);
    EXPECT_EQ(f.echo["tmst"]["r"], 1.2);
}

TEST(parse_state_file, errors) {
    const char *bad[] = {
        R"({"canonical": {"a": 1, "b": 1)",
        R"([1, 2, 3])",
        R"({})",
        R"({"canonical": {"a": 1, "b": 1, "c1": 0, "c2": 0}, "tmst": {"na": 0, "nb": 0, "r": 0}})",
        R"({"canonical": {"a": 1, "b": 1, "c1": 0}})",
        R"({"canonical": {"a": 1, "b": 1, "c1": 0, "c2": 0, "d": 1}})",
        R"({"canonical": {"a": "1", "b": 1, "c1": 0, "c2": 0}})",
        R"({"cm": [[1, 0], [0, 1]]})",
        R"({"cm": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], "mean": [0, 0]})",
        R"({"canonical": {"a": 1, "b": 1, "c1": 0, "c2": 0}, "mean": [0, 0, 0, 0]})",
        R"({"tmst": {"na": -1, "nb": 0, "r": 0}})",
    };
    for (const char *text : bad) {
        EXPECT_THROW(parse_state_file(text), StateFileError) << text;
    }
}

TEST(round_sig, nine_digits) {
    EXPECT_EQ(round_sig(0.39712230215827664), 0.397122302);
    EXPECT_EQ(round_sig(12345678912.0), 12345678900.0);
    EXPECT_EQ(round_sig(0.0), 0.0);
    EXPECT_EQ(round_sig(-1.0 / 3, 3), -0.333);
}

TEST(canonical_json, round_trips_exactly) {
    CanonicalParams canon{1.0 / 3, 2.0 / 7, 0.1 / 3, -0.2 / 9};
    Json j = canonical_json(canon);
    StateFile f = parse_state_file(Json{{"canonical", j}}.dump());
    EXPECT_EQ(*f.canonical, canon);
}

TEST(analysis_report, fixture_fields) {
    StateFile f = parse_state_file(R"({"canonical": {"a": 13.9, "b": 13.9, "c1": 4.6, "c2": -13.7}})");
    Json r = analysis_report(f, kPsdTolerance);
    EXPECT_EQ(r["tool"], "steerlab");
    EXPECT_EQ(r["physicality"]["ur_satisfied"], true);
    EXPECT_EQ(r["lambda_wns"], 0.397122302);
    EXPECT_EQ(r["flags"]["wns"], true);
    EXPECT_EQ(r["flags"]["sns"], false);
    EXPECT_EQ(r["flags"]["epr_b_to_a"], false);
    EXPECT_EQ(r["flags"]["entangled"], false);
    EXPECT_EQ(r["canonical"]["c1"], 13.7);
    EXPECT_EQ(r["canonical"]["c2"], -4.6);
}

TEST(write_triangoloid_csv, header_and_rows) {
    std::vector<TriangoloidPoint> pts = triangoloid_sample(TmstSpec{0.75, 0.75, 1.2}, 4);
    std::stringstream ss;
    write_triangoloid_csv(ss, pts);
    std::string line;
    std::getline(ss, line);
    EXPECT_EQ(line, "mu,mu_s,mu_c,mu_sc,depth");
    size_t rows = 0;
    while (std::getline(ss, line)) {
        rows++;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);
    }
    EXPECT_EQ(rows, 4u * 4u + 3u * 4u + 1u);
}
