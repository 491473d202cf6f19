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

#ifndef QRA_AUTOMATA_H
#define QRA_AUTOMATA_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qra {

/// A word as a sequence of symbol indices into an alphabet.
using Word = std::vector<size_t>;

/// Deterministic finite automaton with a total transition function.
class Dfa {
   public:
    Dfa() = default;
    /// `delta[q * alphabet.size() + x]` is the successor of state q on symbol x.
    /// Throws InvalidValueError on duplicate names, out-of-range indices or a partial delta.
    Dfa(std::vector<std::string> states,
        std::vector<std::string> alphabet,
        size_t start,
        std::vector<size_t> accept,
        std::vector<size_t> delta);

    size_t num_states() const {
        return states_.size();
    }
    size_t num_symbols() const {
        return alphabet_.size();
    }
    const std::vector<std::string> &states() const {
        return states_;
    }
    const std::vector<std::string> &alphabet() const {
        return alphabet_;
    }
    size_t start() const {
        return start_;
    }
    /// Accepting states, ascending.
    const std::vector<size_t> &accept() const {
        return accept_;
    }
    bool is_accepting(size_t q) const {
        return accepting_[q];
    }
    size_t next(size_t q, size_t x) const {
        return delta_[q * alphabet_.size() + x];
    }
    const std::vector<size_t> &delta() const {
        return delta_;
    }

    bool operator==(const Dfa &other) const = default;

   private:
    std::vector<std::string> states_;
    std::vector<std::string> alphabet_;
    size_t start_ = 0;
    std::vector<size_t> accept_;
    std::vector<bool> accepting_;
    std::vector<size_t> delta_;
};

/// delta*(start, w). Throws UnknownSymbolError for symbol indices outside the alphabet.
size_t dfa_run(const Dfa &d, std::span<const size_t> w);
bool dfa_accepts(const Dfa &d, std::span<const size_t> w);

/// A basis triple of H_in (x) I (x) SG.
struct StepTriple {
    size_t state;
    size_t input;
    size_t sg;
    bool operator==(const StepTriple &other) const = default;
};

/// Reversible per-symbol step of a DFA: (q, x, blank) -> (delta(q, x), x, gamma(q, x)).
///
/// SG holds a blank (index 0) plus one garbage symbol per transition:
/// gamma(q, x) = 1 + q * input_dim + x. The step is completed to a bijection on
/// the whole triple space with the ascending pairing rule of
/// complete_partial_map.
struct ReversibleStep {
    size_t state_dim = 0;
    size_t input_dim = 0;
    size_t sg_dim = 0;
    size_t blank = 0;
    size_t start = 0;
    std::vector<size_t> accept;
    std::vector<std::string> state_names;
    std::vector<std::string> symbol_names;
    /// Bijection on flat triple indices (state * input_dim + input) * sg_dim + sg.
    std::vector<size_t> forward;
    std::vector<size_t> backward;

    size_t gamma(size_t q, size_t x) const {
        return 1 + q * input_dim + x;
    }
    size_t encode(const StepTriple &t) const {
        return (t.state * input_dim + t.input) * sg_dim + t.sg;
    }
    StepTriple decode(size_t index) const {
        return {index / (input_dim * sg_dim), (index / sg_dim) % input_dim, index % sg_dim};
    }
    StepTriple step(const StepTriple &t) const {
        return decode(forward[encode(t)]);
    }
    StepTriple unstep(const StepTriple &t) const {
        return decode(backward[encode(t)]);
    }
    size_t triple_count() const {
        return state_dim * input_dim * sg_dim;
    }
};

ReversibleStep reversibilize_dfa(const Dfa &d);

/// Final contents of one (input cell, source-garbage cell) pair.
struct GarbageCell {
    size_t input;
    size_t sg;
    bool operator==(const GarbageCell &other) const = default;
};

struct ReversibleRun {
    size_t q_end = 0;
    std::vector<GarbageCell> record;
};

/// Runs the step left to right from r.start over w with blank sources.
ReversibleRun run_reversible(const ReversibleStep &r, std::span<const size_t> w);

/// What the backward run reconstructs: internal state, input tape and source tape.
struct UnrunResult {
    size_t state = 0;
    Word word;
    std::vector<size_t> sources;
};

/// Applies the inverse step right to left, starting from (q_end, record).
UnrunResult unrun_reversible(const ReversibleStep &r, const ReversibleRun &run);

/// A fixed-length chain of reversible steps sharing one state line; each stage
/// has its own input and source line.
class DefiniteEventCircuit {
   public:
    DefiniteEventCircuit(ReversibleStep step, size_t n);

    struct Output {
        /// Per stage: (g1, g2) = (preserved input, garbage symbol).
        std::vector<GarbageCell> garbage;
        size_t q_end = 0;
    };

    size_t length() const {
        return n_;
    }
    const ReversibleStep &step() const {
        return step_;
    }
    /// Evaluates the circuit on basis values of every line.
    Output evaluate(size_t q, std::span<const size_t> inputs, std::span<const size_t> sources) const;
    /// Inverse of evaluate: returns (q, inputs, sources) packed as an UnrunResult.
    UnrunResult evaluate_inverse(const Output &out) const;
    /// q_end in accept when started at step().start with blank sources. Needs |w| == length().
    bool accepts(std::span<const size_t> w) const;

   private:
    ReversibleStep step_;
    size_t n_;
};

/// Throws InvalidValueError for negative n.
DefiniteEventCircuit definite_event_circuit(const ReversibleStep &r, int64_t n);

}  // namespace qra

#endif
