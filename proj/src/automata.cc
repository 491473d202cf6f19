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

#include "qra/automata.h"

#include <algorithm>
#include <optional>
#include <set>

#include "qra/errors.h"
#include "qra/reversible.h"

using namespace qra;

static void check_unique(const std::vector<std::string> &names, const char *what) {
    std::set<std::string> seen;
    for (const auto &n : names) {
        if (n.empty()) {
            throw InvalidValueError(std::string("empty ") + what + " name");
        }
        if (!seen.insert(n).second) {
            throw InvalidValueError(std::string("duplicate ") + what + " '" + n + "'");
        }
    }
}

Dfa::Dfa(std::vector<std::string> states,
         std::vector<std::string> alphabet,
         size_t start,
         std::vector<size_t> accept,
         std::vector<size_t> delta)
    : states_(std::move(states)), alphabet_(std::move(alphabet)), start_(start), delta_(std::move(delta)) {
    if (states_.empty()) {
        throw InvalidValueError("a DFA needs at least one state");
    }
    if (alphabet_.empty()) {
        throw InvalidValueError("a DFA needs at least one symbol");
    }
    check_unique(states_, "state");
    check_unique(alphabet_, "symbol");
    if (start_ >= states_.size()) {
        throw InvalidValueError("start state out of range");
    }
    accepting_.assign(states_.size(), false);
    for (size_t q : accept) {
        if (q >= states_.size()) {
            throw InvalidValueError("accepting state out of range");
        }
        accepting_[q] = true;
    }
    for (size_t q = 0; q < states_.size(); q++) {
        if (accepting_[q]) {
            accept_.push_back(q);
        }
    }
    if (delta_.size() != states_.size() * alphabet_.size()) {
        throw InvalidValueError("transition function is not total");
    }
    for (size_t t : delta_) {
        if (t >= states_.size()) {
            throw InvalidValueError("transition target out of range");
        }
    }
}

size_t qra::dfa_run(const Dfa &d, std::span<const size_t> w) {
    size_t q = d.start();
    for (size_t x : w) {
        if (x >= d.num_symbols()) {
            throw UnknownSymbolError("symbol index " + std::to_string(x) + " is not in the alphabet");
        }
        q = d.next(q, x);
    }
    return q;
}

bool qra::dfa_accepts(const Dfa &d, std::span<const size_t> w) {
    return d.is_accepting(dfa_run(d, w));
}

ReversibleStep qra::reversibilize_dfa(const Dfa &d) {
    ReversibleStep r;
    r.state_dim = d.num_states();
    r.input_dim = d.num_symbols();
    r.sg_dim = d.num_states() * d.num_symbols() + 1;
    r.blank = 0;
    r.start = d.start();
    r.accept = d.accept();
    r.state_names = d.states();
    r.symbol_names = d.alphabet();

    std::vector<std::optional<size_t>> partial(r.triple_count());
    for (size_t q = 0; q < r.state_dim; q++) {
        for (size_t x = 0; x < r.input_dim; x++) {
            partial[r.encode({q, x, r.blank})] = r.encode({d.next(q, x), x, r.gamma(q, x)});
        }
    }
    r.forward = complete_partial_map(r.triple_count(), partial);
    r.backward.resize(r.forward.size());
    for (size_t k = 0; k < r.forward.size(); k++) {
        r.backward[r.forward[k]] = k;
    }
    return r;
}

ReversibleRun qra::run_reversible(const ReversibleStep &r, std::span<const size_t> w) {
    ReversibleRun run;
    run.q_end = r.start;
    run.record.reserve(w.size());
    for (size_t x : w) {
        if (x >= r.input_dim) {
            throw UnknownSymbolError("symbol index " + std::to_string(x) + " is not in the alphabet");
        }
        auto t = r.step({run.q_end, x, r.blank});
        run.q_end = t.state;
        run.record.push_back({t.input, t.sg});
    }
    return run;
}

UnrunResult qra::unrun_reversible(const ReversibleStep &r, const ReversibleRun &run) {
    UnrunResult out;
    out.word.resize(run.record.size());
    out.sources.resize(run.record.size());
    size_t q = run.q_end;
    for (size_t k = run.record.size(); k-- > 0;) {
        auto t = r.unstep({q, run.record[k].input, run.record[k].sg});
        q = t.state;
        out.word[k] = t.input;
        out.sources[k] = t.sg;
    }
    out.state = q;
    return out;
}

DefiniteEventCircuit::DefiniteEventCircuit(ReversibleStep step, size_t n) : step_(std::move(step)), n_(n) {
}

DefiniteEventCircuit::Output DefiniteEventCircuit::evaluate(
    size_t q, std::span<const size_t> inputs, std::span<const size_t> sources) const {
    if (inputs.size() != n_ || sources.size() != n_) {
        throw DimensionError(
            "circuit of length " + std::to_string(n_) + " needs " + std::to_string(n_) + " inputs and sources");
    }
    if (q >= step_.state_dim) {
        throw InvalidValueError("state out of range");
    }
    Output out;
    out.garbage.reserve(n_);
    for (size_t k = 0; k < n_; k++) {
        if (inputs[k] >= step_.input_dim) {
            throw UnknownSymbolError("symbol index " + std::to_string(inputs[k]) + " is not in the alphabet");
        }
        if (sources[k] >= step_.sg_dim) {
            throw InvalidValueError("source value out of range");
        }
        auto t = step_.step({q, inputs[k], sources[k]});
        q = t.state;
        out.garbage.push_back({t.input, t.sg});
    }
    out.q_end = q;
    return out;
}

UnrunResult DefiniteEventCircuit::evaluate_inverse(const Output &out) const {
    if (out.garbage.size() != n_) {
        throw DimensionError("garbage record length does not match the circuit length");
    }
    ReversibleRun run{out.q_end, out.garbage};
    return unrun_reversible(step_, run);
}

bool DefiniteEventCircuit::accepts(std::span<const size_t> w) const {
    std::vector<size_t> blanks(n_, step_.blank);
    auto out = evaluate(step_.start, w, blanks);
    return std::binary_search(step_.accept.begin(), step_.accept.end(), out.q_end);
}

DefiniteEventCircuit qra::definite_event_circuit(const ReversibleStep &r, int64_t n) {
    if (n < 0) {
        throw InvalidValueError("definite event length must be non-negative");
    }
    return DefiniteEventCircuit(r, static_cast<size_t>(n));
}
