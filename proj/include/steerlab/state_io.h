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

#ifndef STEERLAB_STATE_IO_H
#define STEERLAB_STATE_IO_H

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "steerlab/steering.h"
#include "steerlab/symplectic_core.h"
#include "steerlab/tmst_triangoloid.h"

namespace steerlab {

using Json = nlohmann::ordered_json;

/// Malformed JSON or a document that does not follow the state file schema.
class StateFileError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class StateForm { kCm, kCanonical, kTmst };

/// A parsed state file. Exactly one of the three input forms is present:
///   {"cm": [[...4 rows of 4...]], "mean": [4 numbers, optional]}
///   {"canonical": {"a": .., "b": .., "c1": .., "c2": ..}}
///   {"tmst": {"na": .., "nb": .., "r": ..}}
struct StateFile {
    StateForm form = StateForm::kCm;
    GaussianState state;
    std::optional<CanonicalParams> canonical;
    std::optional<TmstSpec> tmst;
    Json echo;
};

StateFile parse_state_file(std::string_view text);

/// Rounds to `digits` significant decimal digits, so that JSON output prints at most that many.
double round_sig(double x, int digits = 9);

Json physicality_json(const PhysicalityReport &report);

/// Canonical parameters at full round-trip precision.
Json canonical_json(const CanonicalParams &canon);

Json state_json(const GaussianState &state);

/// Full classification report for a physical state.
Json analysis_report(const StateFile &file, double tol);

/// Writes "mu,mu_s,mu_c,mu_sc,depth" and one row per point at 9 significant digits.
void write_triangoloid_csv(std::ostream &out, const std::vector<TriangoloidPoint> &points);

}  // namespace steerlab

#endif
