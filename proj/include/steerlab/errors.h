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

#ifndef STEERLAB_ERRORS_H
#define STEERLAB_ERRORS_H

#include <stdexcept>
#include <string>

namespace steerlab {

/// Bad dimensions, out-of-range parameters, or an unphysical state where a physical one is required.
class InvalidInputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A measurement variant was passed to an operation that cannot represent it.
class UnsupportedVariantError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Symplectic invariants that no physical two-mode state can have.
class InconsistentInvariantsError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A matrix that should be well conditioned turned out (numerically) singular.
class NumericalDegeneracyError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Two independent routes to the same answer disagreed, or a proven implication failed.
class InternalConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace steerlab

#endif
