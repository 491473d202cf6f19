// Copyright 2026 The qra Authors
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

#ifndef QRA_ERRORS_H
#define QRA_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qra {

/// Operand shapes do not line up (operator vs. slots, layout vs. vector, ...).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A value violates a documented precondition (non-normalized state, bad density operator, ...).
struct InvalidValueError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A word contains a symbol outside the automaton's alphabet.
struct UnknownSymbolError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The full tensor simulation would exceed the configured amplitude cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The post-step state is entangled between the internal register and the tape cell,
/// so the internal state cannot be extracted as a pure vector.
struct FactorizationError : std::runtime_error {
    FactorizationError(const std::string &msg, double purity);
    double purity;
};

/// Malformed text input. `line` is 1-based; 0 means "no specific line".
struct ParseError : std::runtime_error {
    ParseError(size_t line, const std::string &msg);
    size_t line;
};

}  // namespace qra

#endif
