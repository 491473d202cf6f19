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

// Embedding boolean functions into bijections on bit words.
//
// Bit order: line 0 is the most significant bit of a word's integer value,
// so the word written "011" over lines (s, i1, i2) has s = 0.

#ifndef QRA_REVERSIBLE_H
#define QRA_REVERSIBLE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qra/tensor.h"

namespace qra {

using BitWord = uint64_t;

/// Widest permutation we are willing to tabulate.
inline constexpr size_t MAX_PERMUTATION_WIDTH = 24;

/// Total boolean function {0,1}^n_in -> {0,1}^n_out, stored as rows[x] = f(x).
struct TruthTable {
    size_t n_in = 0;
    size_t n_out = 0;
    std::vector<BitWord> rows;

    TruthTable() = default;
    /// Validates that rows has 2^n_in entries, each below 2^n_out.
    TruthTable(size_t n_in, size_t n_out, std::vector<BitWord> rows);
    static TruthTable from_function(size_t n_in, size_t n_out, const std::function<BitWord(BitWord)> &f);

    BitWord operator()(BitWord x) const {
        return rows[x];
    }
    /// True when n_in == n_out and f permutes {0,1}^n.
    bool is_bijection() const;
    bool operator==(const TruthTable &other) const = default;
};

enum class LineRole : uint8_t {
    source,    // input prepared in 0
    data_in,   // input carrying the argument
    result,    // output carrying f(x)
    garbage,   // output needed only to invert the computation
    restored,  // output that gives back its input line's value
};

const char *role_name(LineRole role);

/// Per-line roles on both sides of a reversible device.
///
/// Input roles are source or data_in; output roles are result, garbage or restored.
struct LineLayout {
    std::vector<LineRole> inputs;
    std::vector<LineRole> outputs;

    size_t count_inputs(LineRole role) const;
    size_t count_outputs(LineRole role) const;
    /// Line indices with the given role, ascending.
    std::vector<size_t> input_lines(LineRole role) const;
    std::vector<size_t> output_lines(LineRole role) const;
    bool operator==(const LineLayout &other) const = default;
};

/// A bijection on {0,1}^width, optionally annotated with line roles.
class ReversiblePermutation {
   public:
    ReversiblePermutation() = default;
    /// Throws InvalidValueError if `mapping` is not a bijection on 2^width points
    /// or the layout does not describe `width` lines on each side.
    ReversiblePermutation(
        size_t width, std::vector<BitWord> mapping, std::optional<LineLayout> layout = {}, size_t gate_count = 1);

    size_t width() const {
        return width_;
    }
    std::span<const BitWord> mapping() const {
        return mapping_;
    }
    BitWord operator()(BitWord in) const {
        return mapping_[in];
    }
    const std::optional<LineLayout> &layout() const {
        return layout_;
    }
    /// Number of primitive devices this permutation was composed from.
    size_t gate_count() const {
        return gates_;
    }

    bool operator==(const ReversiblePermutation &other) const = default;

   private:
    size_t width_ = 0;
    std::vector<BitWord> mapping_;
    std::optional<LineLayout> layout_;
    size_t gates_ = 1;
};

/// Embeds f as (source = 0, x) -> (f(x), x); a table that is already a bijection is kept as is.
ReversiblePermutation reversibilize_table(const TruthTable &f);

/// Extends an injective partial map on [0, n) to a bijection.
///
/// Unused inputs are paired with unused outputs, both taken in ascending order.
/// Throws InvalidValueError if the partial map is not injective or out of range.
std::vector<size_t> complete_partial_map(size_t n, std::span<const std::optional<size_t>> partial);

/// Bit-word form of complete_partial_map.
ReversiblePermutation permutation_completion(
    size_t width, const std::map<BitWord, BitWord> &partial, std::optional<LineLayout> layout = {});

/// The inverse bijection. Line roles do not survive inversion.
ReversiblePermutation inverse(const ReversiblePermutation &p);

/// (x, y) -> (x, y XOR x) on 2*width lines.
ReversiblePermutation copy_circuit(size_t width);

/// Compute, copy the result lines to fresh ancillas, uncompute.
///
/// Needs a layout whose inputs are source/data_in lines and whose outputs are
/// result/garbage lines (as produced by reversibilize_table). The composite's
/// lines are ordered (data_in lines, source lines, ancilla lines) and it maps
/// (x, 0, 0) -> (x, 0, f(x)).
ReversiblePermutation bennett_compose(const ReversiblePermutation &p);

/// One snapshot of the three line groups during compute-copy-uncompute.
struct BennettPhase {
    std::string label;                // e.g. "garbage-result-source"
    std::array<std::string, 3> groups;  // bit strings of the three line groups
};

/// The four states visited by bennett_compose on input x with blank sources.
std::array<BennettPhase, 4> bennett_phases(const ReversiblePermutation &p, BitWord x);

/// |<psi psi| C |psi 0>|^2 with C the one-line copy circuit and psi = alpha|0> + beta|1>.
///
/// Throws InvalidValueError unless |alpha|^2 + |beta|^2 = 1 within ALGEBRAIC_TOL.
double no_cloning_demo(cplx alpha, cplx beta);

struct GarbageStats {
    size_t source_lines = 0;
    size_t garbage_lines = 0;
    size_t result_lines = 0;
    size_t gate_count = 0;
    size_t steps = 0;

    bool operator==(const GarbageStats &other) const = default;
};

GarbageStats garbage_stats(const ReversiblePermutation &p);
/// A chain of devices applied one after another, each with its own sources.
GarbageStats garbage_stats(std::span<const ReversiblePermutation> chain);

/// The 2^width x 2^width permutation matrix of p.
ComplexOperator to_operator(const ReversiblePermutation &p);

/// Renders the low `width` bits of `word`, line 0 (most significant) first.
std::string bits_string(BitWord word, size_t width);

}  // namespace qra

#endif
