# Copyright 2026 The steerlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Steering classifiers for two-mode Gaussian states."""

from steerlab._steerlab import (
    CanonicalParams,
    ConditionalParams,
    InconsistentInvariantsError,
    InternalConsistencyError,
    InvalidInputError,
    NumericalDegeneracyError,
    PhysicalityReport,
    SteeringReport,
    SymplecticInvariants,
    UnsupportedVariantError,
    __version__,
    canonical_params,
    check_physical,
    classify_from_invariants,
    condition_on_b,
    condition_on_quadrature,
    conditional_params,
    hierarchy_report,
    measurement_cm,
    scan_min_lambda,
    symplectic_invariants,
    tmst_params,
    tmst_steerable,
    triangoloid,
)
