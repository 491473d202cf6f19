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

#include "qra/mc_qfa.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qra/errors.h"

using namespace qra;

McQfa::McQfa(
    ComplexVector s_init,
    std::vector<size_t> accept,
    std::vector<std::string> alphabet,
    std::vector<ComplexOperator> unitaries)
    : s_init_(std::move(s_init)),
      accept_(std::move(accept)),
      alphabet_(std::move(alphabet)),
      unitaries_(std::move(unitaries)) {
    if (s_init_.dim() == 0) {
        throw DimensionError("MC-QFA needs a positive dimension");
    }
    std::sort(accept_.begin(), accept_.end());
    accept_.erase(std::unique(accept_.begin(), accept_.end()), accept_.end());
    for (size_t a : accept_) {
        if (a >= dim()) {
            throw DimensionError("accept index " + std::to_string(a) + " out of range");
        }
    }
    if (alphabet_.size() != unitaries_.size()) {
        throw DimensionError("need exactly one unitary per alphabet symbol");
    }
    for (size_t k = 0; k < unitaries_.size(); k++) {
        if (unitaries_[k].rows() != dim() || unitaries_[k].cols() != dim()) {
            throw DimensionError("unitary for symbol '" + alphabet_[k] + "' has the wrong shape");
        }
    }
}

ComplexVector qra::mc_final_state(const McQfa &q, std::span<const size_t> w) {
    ComplexVector state = q.s_init();
    for (size_t x : w) {
        if (x >= q.alphabet().size()) {
            throw UnknownSymbolError("symbol index " + std::to_string(x) + " is not in the alphabet");
        }
        state = q.unitary(x) * state;
    }
    return state;
}

double qra::mc_accept_prob(const McQfa &q, std::span<const size_t> w) {
    ComplexVector state = mc_final_state(q, w);
    double p = 0;
    for (size_t a : q.accept()) {
        p += std::norm(state[a]);
    }
    return p;
}

double qra::mc_reject_prob(const McQfa &q, std::span<const size_t> w) {
    ComplexVector state = mc_final_state(q, w);
    double p = 0;
    size_t next = 0;
    for (size_t k = 0; k < state.dim(); k++) {
        if (next < q.accept().size() && q.accept()[next] == k) {
            next++;
            continue;
        }
        p += std::norm(state[k]);
    }
    return p;
}

std::vector<std::string> qra::validate(const McQfa &q) {
    std::vector<std::string> out;
    if (!q.s_init().is_normalized()) {
        std::ostringstream ss;
        ss << "initial vector is not normalized (<s|s> = " << q.s_init().norm_squared() << ")";
        out.push_back(ss.str());
    }
    for (size_t k = 0; k < q.unitaries().size(); k++) {
        if (!is_unitary(q.unitary(k))) {
            out.push_back("operator for symbol '" + q.alphabet()[k] + "' is not unitary");
        }
    }
    return out;
}

McQfa qra::mcqfa_from_permutation_dfa(const Dfa &d) {
    std::vector<ComplexOperator> unitaries;
    for (size_t x = 0; x < d.num_symbols(); x++) {
        std::vector<size_t> images(d.num_states());
        for (size_t q = 0; q < d.num_states(); q++) {
            images[q] = d.next(q, x);
        }
        try {
            unitaries.push_back(ComplexOperator::permutation(std::move(images)));
        } catch (const InvalidValueError &) {
            throw InvalidValueError("symbol '" + d.alphabet()[x] + "' does not permute the states");
        }
    }
    return McQfa(ComplexVector::basis(d.num_states(), d.start()), d.accept(), d.alphabet(), std::move(unitaries));
}
