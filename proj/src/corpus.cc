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

#include "qra/corpus.h"

using namespace qra;

namespace {

const std::vector<std::string> AB{"a", "b"};

}  // namespace

// delta rows below are (on a, on b) per state.

Dfa corpus::parity_of_a() {
    return Dfa({"q0", "q1"}, AB, 0, {0}, {1, 0, 0, 1});
}

Dfa corpus::ends_with_a() {
    return Dfa({"q0", "q1"}, AB, 0, {1}, {1, 0, 1, 0});
}

Dfa corpus::a_count_mod3() {
    return Dfa({"q0", "q1", "q2"}, AB, 0, {0}, {1, 0, 2, 1, 0, 2});
}

Dfa corpus::contains_ab() {
    return Dfa({"q0", "q1", "q2"}, AB, 0, {2}, {1, 0, 1, 2, 2, 2});
}

Dfa corpus::accept_all() {
    return Dfa({"q0"}, AB, 0, {0}, {0, 0});
}

std::vector<corpus::Entry> corpus::all() {
    return {
        {"parity_of_a", parity_of_a()},
        {"ends_with_a", ends_with_a()},
        {"a_count_mod3", a_count_mod3()},
        {"contains_ab", contains_ab()},
        {"accept_all", accept_all()},
    };
}

McQfa corpus::parity_mcqfa() {
    return McQfa(
        ComplexVector::basis(2, 0),
        {0},
        AB,
        {ComplexOperator::permutation({1, 0}), ComplexOperator::identity(2)});
}

TruthTable corpus::and_table() {
    return TruthTable(2, 1, {0, 0, 0, 1});
}

TruthTable corpus::xor_table() {
    return TruthTable(2, 1, {0, 1, 1, 0});
}

TruthTable corpus::identity_table() {
    return TruthTable(1, 1, {0, 1});
}
