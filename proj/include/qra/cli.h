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

#ifndef QRA_CLI_H
#define QRA_CLI_H

#include <ostream>
#include <span>
#include <string>

namespace qra::cli {

/// Process exit codes.
enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_INVALID = 1,
    EXIT_USAGE = 2,
    EXIT_SYMBOL = 3,
    EXIT_RESOURCE = 4,
    EXIT_DIVERGENCE = 5,
};

/// Runs `qra` with `args` (program name excluded). Never throws.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

/// Probability formatting shared by every output mode: %.12g.
std::string format_probability(double p);

}  // namespace qra::cli

#endif
