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

#include "qra/errors.h"

using namespace qra;

FactorizationError::FactorizationError(const std::string &msg, double purity)
    : std::runtime_error(msg), purity(purity) {
}

static std::string with_line(size_t line, const std::string &msg) {
    if (line == 0) {
        return msg;
    }
    return "line " + std::to_string(line) + ": " + msg;
}

ParseError::ParseError(size_t line, const std::string &msg) : std::runtime_error(with_line(line, msg)), line(line) {
}
