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

#ifndef QRA_MC_QFA_H
#define QRA_MC_QFA_H

#include <span>
#include <string>
#include <vector>

#include "qra/automata.h"
#include "qra/tensor.h"

namespace qra {

/// Measure-once quantum finite automaton: classical symbols select unitaries on
/// a fixed space, followed by one projective measurement onto H_accept.
///
/// Construction only checks shapes; numeric invariants are reported by `validate`.
class McQfa {
   public:
    McQfa() = default;
    McQfa(ComplexVector s_init,
          std::vector<size_t> accept,
          std::vector<std::string> alphabet,
          std::vector<ComplexOperator> unitaries);

    size_t dim() const {
        return s_init_.dim();
    }
    const ComplexVector &s_init() const {
        return s_init_;
    }
    /// Basis indices spanning H_accept, ascending and unique.
    const std::vector<size_t> &accept() const {
        return accept_;
    }
    ComplexOperator accept_projector() const {
        return projector_onto(accept_, dim());
    }
    const std::vector<std::string> &alphabet() const {
        return alphabet_;
    }
    const ComplexOperator &unitary(size_t symbol) const {
        return unitaries_[symbol];
    }
    const std::vector<ComplexOperator> &unitaries() const {
        return unitaries_;
    }

    bool operator==(const McQfa &other) const = default;

   private:
    ComplexVector s_init_;
    std::vector<size_t> accept_;
    std::vector<std::string> alphabet_;
    std::vector<ComplexOperator> unitaries_;
};

/// Final state U_{w_k} ... U_{w_1} |s_init>: symbols act in reading order.
ComplexVector mc_final_state(const McQfa &q, std::span<const size_t> w);
/// |P_accept U_{w_k} ... U_{w_1} |s_init>|^2. Throws UnknownSymbolError.
double mc_accept_prob(const McQfa &q, std::span<const size_t> w);
/// Same measurement with the complementary projector.
double mc_reject_prob(const McQfa &q, std::span<const size_t> w);
/// Empty iff s_init is normalized and every U_a is unitary (tolerance ALGEBRAIC_TOL).
std::vector<std::string> validate(const McQfa &q);

/// The MC-QFA whose unitaries are the permutation matrices of a permutation DFA.
/// Throws InvalidValueError if some symbol does not permute the states.
McQfa mcqfa_from_permutation_dfa(const Dfa &d);

}  // namespace qra

#endif
