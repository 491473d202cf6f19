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

// Reference machines over the alphabet {a, b}, shared by tests, demos and the CLI.

#ifndef QRA_CORPUS_H
#define QRA_CORPUS_H

#include <string>
#include <vector>

#include "qra/automata.h"
#include "qra/mc_qfa.h"
#include "qra/reversible.h"

namespace qra::corpus {

/// Even number of a's; b is a self-loop.
Dfa parity_of_a();
Dfa ends_with_a();
/// Number of a's divisible by 3.
Dfa a_count_mod3();
Dfa contains_ab();
Dfa accept_all();

struct Entry {
    std::string name;
    Dfa dfa;
};

/// The five machines above, in declaration order.
std::vector<Entry> all();

/// dim 2, U_a = bit flip, U_b = identity, accept span{|0>}, s_init = |0>.
McQfa parity_mcqfa();

TruthTable and_table();
TruthTable xor_table();
/// One input, one output, f(x) = x.
TruthTable identity_table();

}  // namespace qra::corpus

#endif
