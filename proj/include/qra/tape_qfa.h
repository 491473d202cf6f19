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

// Two-tape reversible quantum finite automaton.
//
// The machine owns an internal register H_in, a quantum input tape whose cells
// live in I, and a source-garbage tape whose cells live in SG and start blank.
// At step k one unitary U acts on H_in (x) I_k (x) SG_k; the head only moves
// right and written cells are never touched again. A single measurement with
// P_accept on H_in happens at the end.
//
// Global slot order is H_in, I_1, SG_1, I_2, SG_2, ... . The full path grows
// SG_k lazily right before step k.

#ifndef QRA_TAPE_QFA_H
#define QRA_TAPE_QFA_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qra/automata.h"
#include "qra/tensor.h"

namespace qra {

/// Default cap on the number of amplitudes the full simulation may allocate.
inline constexpr size_t DEFAULT_MAX_AMPLITUDES = size_t{1} << 24;

/// DEFAULT_MAX_AMPLITUDES unless QRA_MAX_AMPLITUDES holds a positive integer.
size_t max_amplitudes_from_env();

class TapeQfa {
   public:
    TapeQfa() = default;
    /// Checks shapes only; see `validate` for the numeric invariants.
    /// An empty alphabet means symbols are named "0", "1", ... .
    TapeQfa(size_t internal_dim,
            size_t input_dim,
            size_t sg_dim,
            size_t blank,
            ComplexVector s0,
            std::vector<size_t> accept,
            ComplexOperator u,
            std::vector<std::string> alphabet = {});

    size_t internal_dim() const {
        return h_in_;
    }
    size_t input_dim() const {
        return i_dim_;
    }
    size_t sg_dim() const {
        return sg_dim_;
    }
    size_t blank() const {
        return blank_;
    }
    const ComplexVector &s0() const {
        return s0_;
    }
    const std::vector<size_t> &accept() const {
        return accept_;
    }
    ComplexOperator accept_projector() const {
        return projector_onto(accept_, h_in_);
    }
    const ComplexOperator &u() const {
        return u_;
    }
    const std::vector<std::string> &alphabet() const {
        return alphabet_;
    }
    size_t step_dim() const {
        return h_in_ * i_dim_ * sg_dim_;
    }

    bool operator==(const TapeQfa &other) const = default;

   private:
    size_t h_in_ = 0;
    size_t i_dim_ = 0;
    size_t sg_dim_ = 0;
    size_t blank_ = 0;
    ComplexVector s0_;
    std::vector<size_t> accept_;
    ComplexOperator u_;
    std::vector<std::string> alphabet_;
};

/// Empty iff s0 is normalized and U is unitary (tolerance ALGEBRAIC_TOL).
std::vector<std::string> validate(const TapeQfa &q);

/// U is the permutation matrix of r's step; s0 = |r.start>.
TapeQfa from_reversible_dfa(const ReversibleStep &r, std::span<const size_t> accept);

/// |w_1> (x) ... (x) |w_n> on I^n. Throws UnknownSymbolError.
ComplexVector basis_word_state(const TapeQfa &q, std::span<const size_t> w);
/// Tensor product of per-cell states, first cell most significant.
ComplexVector product_word_state(std::span<const ComplexVector> cells);

struct SimulationOptions {
    size_t max_amplitudes = DEFAULT_MAX_AMPLITUDES;
};

/// Full state-vector simulation, one step at a time.
class TapeSimulation {
   public:
    /// Throws InvalidValueError for a non-normalized word state, DimensionError
    /// when word_state is not on I^n, ResourceError when the final state would
    /// exceed options.max_amplitudes.
    TapeSimulation(const TapeQfa &q, const ComplexVector &word_state, size_t n, SimulationOptions options = {});

    size_t length() const {
        return n_;
    }
    size_t steps_taken() const {
        return k_;
    }
    bool done() const {
        return k_ == n_;
    }
    /// Materializes SG_{k+1} in the blank state and applies U to (H_in, I_{k+1}, SG_{k+1}).
    void step();
    void run();

    const ComplexVector &state() const {
        return state_;
    }
    const SlotLayout &layout() const {
        return layout_;
    }
    static constexpr size_t internal_slot() {
        return 0;
    }
    /// Slot of input cell k (1-based) in the current layout.
    size_t input_slot(size_t k) const;
    /// Slot of SG cell k (1-based), or nullopt if it is not materialized yet.
    std::optional<size_t> sg_slot(size_t k) const;

    /// |(P_accept (x) identity) state|^2.
    double accept_probability() const;
    DensityOperator internal_state() const;
    DensityOperator input_cell_state(size_t k) const;
    /// Reduced state of SG cell k; |blank><blank| for cells not materialized yet.
    DensityOperator sg_cell_state(size_t k) const;
    /// Number of SG cells whose blank population dropped below 1 - ALGEBRAIC_TOL.
    size_t garbage_cells_used() const;

   private:
    TapeQfa q_;
    size_t n_;
    size_t k_ = 0;
    SlotLayout layout_;
    ComplexVector state_;
};

/// P(|w>) = |P_accept U~_n ... U~_1 |s0> (x) |w> (x) |0>^n|^2.
double accept_prob_full(const TapeQfa &q, const ComplexVector &word_state, size_t n, SimulationOptions options = {});
double accept_prob_full(const TapeQfa &q, std::span<const size_t> basis_word, SimulationOptions options = {});

struct TracedResult {
    double probability = 0;
    size_t garbage_cells = 0;
    DensityOperator internal;
};

/// Channel form: rho <- Tr_cell[U (rho (x) w_k (x) |blank><blank|) U^dagger], then Tr(P_accept rho).
///
/// Throws InvalidValueError unless every cell is a valid density operator on I.
TracedResult run_traced(const TapeQfa &q, std::span<const DensityOperator> cells);
double accept_prob_traced(const TapeQfa &q, std::span<const DensityOperator> cells);
double accept_prob_traced(const TapeQfa &q, std::span<const size_t> basis_word);

/// One step of the factorized special case: returns s' with
/// U(s (x) |symbol> (x) |blank>) = s' (x) (cell state).
///
/// Throws FactorizationError when the internal reduced state has purity below
/// 1 - SPECTRAL_TOL.
ComplexVector step_factorized(const TapeQfa &q, const ComplexVector &s, size_t symbol);

struct TraceEntry {
    DensityOperator internal;
    double purity = 1;
    bool factorized = true;
    /// Reduced state of the SG cell written at this step (absent for the initial entry).
    std::optional<DensityOperator> garbage;
};

struct SimulationTrace {
    /// Initial entry plus one per step.
    std::vector<TraceEntry> entries;
    double accept_probability = 0;
    size_t garbage_cells = 0;
};

SimulationTrace trace_run(const TapeQfa &q, const ComplexVector &word_state, size_t n, SimulationOptions options = {});

}  // namespace qra

#endif
