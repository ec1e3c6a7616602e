// Copyright 2026 The qparadox Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qparadox {

inline constexpr const char *kVersion = "0.1.0";

/// Operands disagree on qubit count.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed Pauli text or amplitude text.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A value that must be a +/-1-valued observable (or eigen-operator) is not.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Group closure produced an operator that is simultaneously required to
/// have two different eigenvalues, or generators that fail to commute.
struct ClosureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A bounded search ran out of its node budget before finishing.
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qparadox
