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

#include "qra/tape_qfa.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "qra/errors.h"
#include "qra/kernels.h"

using namespace qra;

size_t qra::max_amplitudes_from_env() {
    const char *env = std::getenv("QRA_MAX_AMPLITUDES");
    if (env == nullptr || *env == '\0') {
        return DEFAULT_MAX_AMPLITUDES;
    }
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        return DEFAULT_MAX_AMPLITUDES;
    }
    return static_cast<size_t>(v);
}

TapeQfa::TapeQfa(
    size_t internal_dim,
    size_t input_dim,
    size_t sg_dim,
    size_t blank,
    ComplexVector s0,
    std::vector<size_t> accept,
    ComplexOperator u,
    std::vector<std::string> alphabet)
    : h_in_(internal_dim),
      i_dim_(input_dim),
      sg_dim_(sg_dim),
      blank_(blank),
      s0_(std::move(s0)),
      accept_(std::move(accept)),
      u_(std::move(u)),
      alphabet_(std::move(alphabet)) {
    if (h_in_ == 0 || i_dim_ == 0 || sg_dim_ == 0) {
        throw DimensionError("tape automaton dimensions must be positive");
    }
    if (blank_ >= sg_dim_) {
        throw DimensionError("blank index " + std::to_string(blank_) + " out of range for SG dim " + std::to_string(sg_dim_));
    }
    if (s0_.dim() != h_in_) {
        throw DimensionError("initial vector does not live on H_in");
    }
    std::sort(accept_.begin(), accept_.end());
    accept_.erase(std::unique(accept_.begin(), accept_.end()), accept_.end());
    for (size_t a : accept_) {
        if (a >= h_in_) {
            throw DimensionError("accept index " + std::to_string(a) + " out of range");
        }
    }
    if (u_.rows() != step_dim() || u_.cols() != step_dim()) {
        throw DimensionError(
            "U must act on H_in (x) I (x) SG of dimension " + std::to_string(step_dim()));
    }
    if (alphabet_.empty()) {
        for (size_t k = 0; k < i_dim_; k++) {
            alphabet_.push_back(std::to_string(k));
        }
    }
    if (alphabet_.size() != i_dim_) {
        throw DimensionError("alphabet must name every basis vector of I");
    }
}

std::vector<std::string> qra::validate(const TapeQfa &q) {
    std::vector<std::string> out;
    if (!q.s0().is_normalized()) {
        std::ostringstream ss;
        ss << "initial vector is not normalized (<s0|s0> = " << q.s0().norm_squared() << ")";
        out.push_back(ss.str());
    }
    if (!is_unitary(q.u())) {
        out.push_back("evolution operator U is not unitary");
    }
    return out;
}

TapeQfa qra::from_reversible_dfa(const ReversibleStep &r, std::span<const size_t> accept) {
    return TapeQfa(
        r.state_dim,
        r.input_dim,
        r.sg_dim,
        r.blank,
        ComplexVector::basis(r.state_dim, r.start),
        std::vector<size_t>(accept.begin(), accept.end()),
        ComplexOperator::permutation(r.forward),
        r.symbol_names);
}

ComplexVector qra::basis_word_state(const TapeQfa &q, std::span<const size_t> w) {
    ComplexVector state(std::vector<cplx>{1});
    for (size_t x : w) {
        if (x >= q.input_dim()) {
            throw UnknownSymbolError("symbol index " + std::to_string(x) + " is not in the alphabet");
        }
        state = kron(state, ComplexVector::basis(q.input_dim(), x));
    }
    return state;
}

ComplexVector qra::product_word_state(std::span<const ComplexVector> cells) {
    ComplexVector state(std::vector<cplx>{1});
    for (const auto &c : cells) {
        state = kron(state, c);
    }
    return state;
}

// --------------------------------------------------------------- full path

namespace {

size_t checked_mul(size_t a, size_t b, size_t cap) {
    if (a != 0 && b > cap / a) {
        return std::numeric_limits<size_t>::max();
    }
    return a * b;
}

}  // namespace

TapeSimulation::TapeSimulation(const TapeQfa &q, const ComplexVector &word_state, size_t n, SimulationOptions options)
    : q_(q), n_(n) {
    size_t cap = options.max_amplitudes;
    size_t word_dim = 1;
    size_t final_dim = q.internal_dim();
    for (size_t k = 0; k < n; k++) {
        word_dim = checked_mul(word_dim, q.input_dim(), std::numeric_limits<size_t>::max());
        final_dim = checked_mul(final_dim, q.input_dim() * q.sg_dim(), std::numeric_limits<size_t>::max());
    }
    if (final_dim > cap) {
        std::ostringstream ss;
        ss << "full simulation of " << n << " cells needs more than " << cap << " amplitudes";
        throw ResourceError(ss.str());
    }
    if (word_state.dim() != word_dim) {
        throw DimensionError(
            "word state has dimension " + std::to_string(word_state.dim()) + ", expected " + std::to_string(word_dim) +
            " for " + std::to_string(n) + " cells");
    }
    if (!word_state.is_normalized()) {
        throw InvalidValueError("word state is not normalized");
    }

    std::vector<size_t> dims{q.internal_dim()};
    dims.insert(dims.end(), n, q.input_dim());
    layout_ = SlotLayout(std::move(dims));
    state_ = kron(q.s0(), word_state);
}

size_t TapeSimulation::input_slot(size_t k) const {
    if (k == 0 || k > n_) {
        throw DimensionError("input cell index out of range");
    }
    return k <= k_ ? 2 * k - 1 : 2 * k_ + (k - k_);
}

std::optional<size_t> TapeSimulation::sg_slot(size_t k) const {
    if (k == 0 || k > n_) {
        throw DimensionError("SG cell index out of range");
    }
    if (k > k_) {
        return std::nullopt;
    }
    return 2 * k;
}

void TapeSimulation::step() {
    if (done()) {
        throw InvalidValueError("simulation already consumed every cell");
    }
    size_t in_slot = 2 * k_ + 1;
    size_t sg_pos = in_slot + 1;
    SlotLayout grown = layout_.with_slot_inserted(sg_pos, q_.sg_dim());

    // Everything after I_{k+1} forms the inner block that the new slot is inserted above.
    size_t inner = layout_.stride(in_slot);
    ComplexVector expanded(grown.total_dim());
    kernels::parallel::insert_slot(state_.amplitudes(), inner, q_.sg_dim(), q_.blank(), expanded.amplitudes());

    std::array<size_t, 3> slots{internal_slot(), in_slot, sg_pos};
    state_ = apply_local(q_.u(), expanded, grown, slots);
    layout_ = std::move(grown);
    k_++;
}

void TapeSimulation::run() {
    while (!done()) {
        step();
    }
}

double TapeSimulation::accept_probability() const {
    size_t block = layout_.stride(internal_slot());
    double p = 0;
    for (size_t a : q_.accept()) {
        auto amps = state_.amplitudes().subspan(a * block, block);
        for (const auto &z : amps) {
            p += std::norm(z);
        }
    }
    return p;
}

DensityOperator TapeSimulation::internal_state() const {
    std::array<size_t, 1> keep{internal_slot()};
    return reduced_state(state_, layout_, keep);
}

DensityOperator TapeSimulation::input_cell_state(size_t k) const {
    std::array<size_t, 1> keep{input_slot(k)};
    return reduced_state(state_, layout_, keep);
}

DensityOperator TapeSimulation::sg_cell_state(size_t k) const {
    auto slot = sg_slot(k);
    if (!slot.has_value()) {
        return DensityOperator::pure(ComplexVector::basis(q_.sg_dim(), q_.blank()));
    }
    std::array<size_t, 1> keep{*slot};
    return reduced_state(state_, layout_, keep);
}

size_t TapeSimulation::garbage_cells_used() const {
    size_t used = 0;
    for (size_t k = 1; k <= k_; k++) {
        size_t slot = 2 * k;
        double blank_population = 0;
        for (size_t idx = 0; idx < state_.dim(); idx++) {
            if (layout_.digit(idx, slot) == q_.blank()) {
                blank_population += std::norm(state_[idx]);
            }
        }
        if (blank_population < 1 - ALGEBRAIC_TOL) {
            used++;
        }
    }
    return used;
}

double qra::accept_prob_full(const TapeQfa &q, const ComplexVector &word_state, size_t n, SimulationOptions options) {
    TapeSimulation sim(q, word_state, n, options);
    sim.run();
    return sim.accept_probability();
}

double qra::accept_prob_full(const TapeQfa &q, std::span<const size_t> basis_word, SimulationOptions options) {
    return accept_prob_full(q, basis_word_state(q, basis_word), basis_word.size(), options);
}

// ------------------------------------------------------------- traced path

namespace {

/// U M U^dagger, moving entries when U is a permutation.
ComplexOperator conjugate(const ComplexOperator &u, const ComplexOperator &m) {
    if (u.is_permutation()) {
        const auto &p = *u.permutation_map();
        size_t n = p.size();
        std::vector<cplx> out(n * n);
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                out[p[r] * n + p[c]] = m(r, c);
            }
        }
        return ComplexOperator(n, n, std::move(out));
    }
    return u * m * u.adjoint();
}

}  // namespace

TracedResult qra::run_traced(const TapeQfa &q, std::span<const DensityOperator> cells) {
    ComplexOperator blank_proj = projector_onto(std::array<size_t, 1>{q.blank()}, q.sg_dim());
    SlotLayout step_layout({q.internal_dim(), q.input_dim(), q.sg_dim()});
    std::array<size_t, 1> keep_internal{0};
    std::array<size_t, 1> keep_sg{2};

    TracedResult result;
    DensityOperator rho = DensityOperator::pure(q.s0());
    for (size_t k = 0; k < cells.size(); k++) {
        const auto &cell = cells[k];
        if (cell.dim() != q.input_dim()) {
            throw DimensionError("cell " + std::to_string(k + 1) + " does not live on I");
        }
        auto problems = cell.violations();
        if (!problems.empty()) {
            throw InvalidValueError("cell " + std::to_string(k + 1) + " is not a density operator: " + problems.front());
        }
        ComplexOperator joint = kron(rho.matrix(), kron(cell.matrix(), blank_proj));
        DensityOperator evolved(conjugate(q.u(), joint));
        rho = partial_trace(evolved, step_layout, keep_internal);
        DensityOperator garbage = partial_trace(evolved, step_layout, keep_sg);
        if (garbage(q.blank(), q.blank()).real() < 1 - ALGEBRAIC_TOL) {
            result.garbage_cells++;
        }
    }
    for (size_t a : q.accept()) {
        result.probability += rho(a, a).real();
    }
    result.internal = std::move(rho);
    return result;
}

double qra::accept_prob_traced(const TapeQfa &q, std::span<const DensityOperator> cells) {
    return run_traced(q, cells).probability;
}

double qra::accept_prob_traced(const TapeQfa &q, std::span<const size_t> basis_word) {
    std::vector<DensityOperator> cells;
    cells.reserve(basis_word.size());
    for (size_t x : basis_word) {
        if (x >= q.input_dim()) {
            throw UnknownSymbolError("symbol index " + std::to_string(x) + " is not in the alphabet");
        }
        cells.push_back(DensityOperator::pure(ComplexVector::basis(q.input_dim(), x)));
    }
    return accept_prob_traced(q, cells);
}

// ------------------------------------------------------- factorized special case

ComplexVector qra::step_factorized(const TapeQfa &q, const ComplexVector &s, size_t symbol) {
    if (s.dim() != q.internal_dim()) {
        throw DimensionError("internal state does not live on H_in");
    }
    if (symbol >= q.input_dim()) {
        throw UnknownSymbolError("symbol index " + std::to_string(symbol) + " is not in the alphabet");
    }
    ComplexVector cell = kron(ComplexVector::basis(q.input_dim(), symbol), ComplexVector::basis(q.sg_dim(), q.blank()));
    ComplexVector post = q.u() * kron(s.normalized(), cell);

    SlotLayout layout({q.internal_dim(), q.input_dim() * q.sg_dim()});
    std::array<size_t, 1> keep{0};
    double purity = reduced_state(post, layout, keep).purity();
    if (purity < 1 - SPECTRAL_TOL) {
        std::ostringstream ss;
        ss << "internal state is entangled with the tape cell (purity " << purity << ")";
        throw FactorizationError(ss.str(), purity);
    }

    // The internal factor is the heaviest column slice of the post-state.
    size_t cell_dim = q.input_dim() * q.sg_dim();
    size_t best = 0;
    double best_weight = -1;
    for (size_t c = 0; c < cell_dim; c++) {
        double w = 0;
        for (size_t a = 0; a < q.internal_dim(); a++) {
            w += std::norm(post[a * cell_dim + c]);
        }
        if (w > best_weight) {
            best_weight = w;
            best = c;
        }
    }
    ComplexVector out(q.internal_dim());
    for (size_t a = 0; a < q.internal_dim(); a++) {
        out[a] = post[a * cell_dim + best];
    }
    return out.normalized();
}

SimulationTrace qra::trace_run(const TapeQfa &q, const ComplexVector &word_state, size_t n, SimulationOptions options) {
    TapeSimulation sim(q, word_state, n, options);
    SimulationTrace trace;
    auto record = [&](std::optional<DensityOperator> garbage) {
        TraceEntry e;
        e.internal = sim.internal_state();
        e.purity = e.internal.purity();
        e.factorized = e.purity >= 1 - SPECTRAL_TOL;
        e.garbage = std::move(garbage);
        trace.entries.push_back(std::move(e));
    };
    record(std::nullopt);
    while (!sim.done()) {
        sim.step();
        record(sim.sg_cell_state(sim.steps_taken()));
    }
    trace.accept_probability = sim.accept_probability();
    trace.garbage_cells = sim.garbage_cells_used();
    return trace;
}
