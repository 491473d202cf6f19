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

#include "qra/reversible.h"

#include <cmath>

#include "qra/errors.h"

using namespace qra;

namespace {

void check_width(size_t width) {
    if (width > MAX_PERMUTATION_WIDTH) {
        throw DimensionError(
            "width " + std::to_string(width) + " exceeds the tabulation limit of " +
            std::to_string(MAX_PERMUTATION_WIDTH) + " lines");
    }
}

BitWord get_bit(BitWord word, size_t line, size_t width) {
    return (word >> (width - 1 - line)) & 1;
}

BitWord set_bit(BitWord word, size_t line, size_t width, BitWord bit) {
    BitWord mask = BitWord{1} << (width - 1 - line);
    return bit ? (word | mask) : (word & ~mask);
}

/// Reads the bits at `lines` (in order) into a packed word, first listed line most significant.
BitWord gather(BitWord word, size_t width, std::span<const size_t> lines) {
    BitWord out = 0;
    for (size_t line : lines) {
        out = (out << 1) | get_bit(word, line, width);
    }
    return out;
}

BitWord scatter(BitWord word, size_t width, std::span<const size_t> lines, BitWord packed) {
    for (size_t k = 0; k < lines.size(); k++) {
        word = set_bit(word, lines[k], width, (packed >> (lines.size() - 1 - k)) & 1);
    }
    return word;
}

std::vector<BitWord> inverse_mapping(std::span<const BitWord> mapping) {
    std::vector<BitWord> inv(mapping.size());
    for (size_t k = 0; k < mapping.size(); k++) {
        inv[mapping[k]] = k;
    }
    return inv;
}

}  // namespace

// ------------------------------------------------------------------ TruthTable

TruthTable::TruthTable(size_t n_in, size_t n_out, std::vector<BitWord> rows) : n_in(n_in), n_out(n_out), rows(std::move(rows)) {
    check_width(n_in);
    check_width(n_out);
    if (this->rows.size() != (size_t{1} << n_in)) {
        throw InvalidValueError(
            "truth table with " + std::to_string(n_in) + " inputs needs " + std::to_string(size_t{1} << n_in) +
            " rows, got " + std::to_string(this->rows.size()));
    }
    for (BitWord r : this->rows) {
        if (r >> n_out) {
            throw InvalidValueError("truth table row value does not fit in " + std::to_string(n_out) + " output bits");
        }
    }
}

TruthTable TruthTable::from_function(size_t n_in, size_t n_out, const std::function<BitWord(BitWord)> &f) {
    check_width(n_in);
    std::vector<BitWord> rows(size_t{1} << n_in);
    for (BitWord x = 0; x < rows.size(); x++) {
        rows[x] = f(x);
    }
    return TruthTable(n_in, n_out, std::move(rows));
}

bool TruthTable::is_bijection() const {
    if (n_in != n_out) {
        return false;
    }
    std::vector<bool> hit(rows.size(), false);
    for (BitWord r : rows) {
        if (hit[r]) {
            return false;
        }
        hit[r] = true;
    }
    return true;
}

// ------------------------------------------------------------------ LineLayout

const char *qra::role_name(LineRole role) {
    switch (role) {
        case LineRole::source:
            return "source";
        case LineRole::data_in:
            return "data_in";
        case LineRole::result:
            return "result";
        case LineRole::garbage:
            return "garbage";
        case LineRole::restored:
            return "restored";
    }
    return "?";
}

size_t LineLayout::count_inputs(LineRole role) const {
    return input_lines(role).size();
}

size_t LineLayout::count_outputs(LineRole role) const {
    return output_lines(role).size();
}

std::vector<size_t> LineLayout::input_lines(LineRole role) const {
    std::vector<size_t> out;
    for (size_t k = 0; k < inputs.size(); k++) {
        if (inputs[k] == role) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<size_t> LineLayout::output_lines(LineRole role) const {
    std::vector<size_t> out;
    for (size_t k = 0; k < outputs.size(); k++) {
        if (outputs[k] == role) {
            out.push_back(k);
        }
    }
    return out;
}

// ------------------------------------------------------- ReversiblePermutation

ReversiblePermutation::ReversiblePermutation(
    size_t width, std::vector<BitWord> mapping, std::optional<LineLayout> layout, size_t gate_count)
    : width_(width), mapping_(std::move(mapping)), layout_(std::move(layout)), gates_(gate_count) {
    check_width(width);
    size_t n = size_t{1} << width;
    if (mapping_.size() != n) {
        throw InvalidValueError(
            "mapping on " + std::to_string(width) + " lines needs " + std::to_string(n) + " entries, got " +
            std::to_string(mapping_.size()));
    }
    std::vector<bool> hit(n, false);
    for (BitWord img : mapping_) {
        if (img >= n || hit[img]) {
            throw InvalidValueError("mapping is not a bijection");
        }
        hit[img] = true;
    }
    if (layout_.has_value()) {
        if (layout_->inputs.size() != width || layout_->outputs.size() != width) {
            throw InvalidValueError("line layout does not describe " + std::to_string(width) + " lines on each side");
        }
        for (LineRole r : layout_->inputs) {
            if (r != LineRole::source && r != LineRole::data_in) {
                throw InvalidValueError(std::string("input line cannot have role ") + role_name(r));
            }
        }
        for (LineRole r : layout_->outputs) {
            if (r == LineRole::source || r == LineRole::data_in) {
                throw InvalidValueError(std::string("output line cannot have role ") + role_name(r));
            }
        }
    }
}

std::vector<size_t> qra::complete_partial_map(size_t n, std::span<const std::optional<size_t>> partial) {
    if (partial.size() != n) {
        throw DimensionError("partial map must have one slot per domain point");
    }
    std::vector<bool> used(n, false);
    for (const auto &img : partial) {
        if (!img.has_value()) {
            continue;
        }
        if (*img >= n) {
            throw InvalidValueError("partial map image " + std::to_string(*img) + " out of range");
        }
        if (used[*img]) {
            throw InvalidValueError("partial map is not injective: image " + std::to_string(*img) + " repeated");
        }
        used[*img] = true;
    }
    std::vector<size_t> out(n);
    size_t next_free = 0;
    for (size_t k = 0; k < n; k++) {
        if (partial[k].has_value()) {
            out[k] = *partial[k];
            continue;
        }
        while (used[next_free]) {
            next_free++;
        }
        used[next_free] = true;
        out[k] = next_free;
    }
    return out;
}

ReversiblePermutation qra::permutation_completion(
    size_t width, const std::map<BitWord, BitWord> &partial, std::optional<LineLayout> layout) {
    check_width(width);
    size_t n = size_t{1} << width;
    std::vector<std::optional<size_t>> slots(n);
    for (const auto &[in, out] : partial) {
        if (in >= n) {
            throw InvalidValueError("partial map input " + std::to_string(in) + " out of range");
        }
        slots[in] = out;
    }
    auto full = complete_partial_map(n, slots);
    return ReversiblePermutation(width, std::vector<BitWord>(full.begin(), full.end()), std::move(layout));
}

ReversiblePermutation qra::reversibilize_table(const TruthTable &f) {
    if (f.is_bijection()) {
        LineLayout layout{
            std::vector<LineRole>(f.n_in, LineRole::data_in),
            std::vector<LineRole>(f.n_out, LineRole::result),
        };
        return ReversiblePermutation(f.n_in, f.rows, std::move(layout));
    }

    // Inputs (source^n_out, x); outputs (f(x), x).
    size_t width = f.n_in + f.n_out;
    check_width(width);
    LineLayout layout;
    layout.inputs.assign(f.n_out, LineRole::source);
    layout.inputs.insert(layout.inputs.end(), f.n_in, LineRole::data_in);
    layout.outputs.assign(f.n_out, LineRole::result);
    layout.outputs.insert(layout.outputs.end(), f.n_in, LineRole::garbage);

    std::map<BitWord, BitWord> partial;
    for (BitWord x = 0; x < f.rows.size(); x++) {
        partial[x] = (f.rows[x] << f.n_in) | x;
    }
    return permutation_completion(width, partial, std::move(layout));
}

ReversiblePermutation qra::inverse(const ReversiblePermutation &p) {
    return ReversiblePermutation(p.width(), inverse_mapping(p.mapping()), std::nullopt, p.gate_count());
}

ReversiblePermutation qra::copy_circuit(size_t width) {
    if (width == 0) {
        throw InvalidValueError("copy circuit needs at least one line");
    }
    check_width(2 * width);
    size_t n = size_t{1} << (2 * width);
    BitWord low_mask = (BitWord{1} << width) - 1;
    std::vector<BitWord> mapping(n);
    for (BitWord w = 0; w < n; w++) {
        BitWord x = w >> width;
        BitWord y = w & low_mask;
        mapping[w] = (x << width) | (y ^ x);
    }
    LineLayout layout;
    layout.inputs.assign(width, LineRole::data_in);
    layout.inputs.insert(layout.inputs.end(), width, LineRole::source);
    layout.outputs.assign(width, LineRole::restored);
    layout.outputs.insert(layout.outputs.end(), width, LineRole::result);
    return ReversiblePermutation(2 * width, std::move(mapping), std::move(layout));
}

namespace {

struct BennettLines {
    std::vector<size_t> data;     // p input lines holding x
    std::vector<size_t> source;   // p input lines prepared in 0
    std::vector<size_t> result;   // p output lines holding f(x)
    std::vector<size_t> garbage;  // p output lines holding garbage
};

BennettLines bennett_lines(const ReversiblePermutation &p) {
    if (!p.layout().has_value()) {
        throw InvalidValueError("compute-copy-uncompute needs a permutation with a line layout");
    }
    const auto &layout = *p.layout();
    if (layout.count_outputs(LineRole::restored) != 0) {
        throw InvalidValueError("compute-copy-uncompute needs outputs split into result and garbage lines");
    }
    BennettLines lines{
        layout.input_lines(LineRole::data_in),
        layout.input_lines(LineRole::source),
        layout.output_lines(LineRole::result),
        layout.output_lines(LineRole::garbage),
    };
    if (lines.result.empty()) {
        throw InvalidValueError("compute-copy-uncompute needs at least one result line");
    }
    return lines;
}

}  // namespace

ReversiblePermutation qra::bennett_compose(const ReversiblePermutation &p) {
    auto lines = bennett_lines(p);
    size_t pw = p.width();
    size_t ni = lines.data.size();
    size_t ns = lines.source.size();
    size_t nr = lines.result.size();
    size_t width = ni + ns + nr;
    check_width(width);

    auto p_inv = inverse_mapping(p.mapping());
    size_t n = size_t{1} << width;
    std::vector<BitWord> mapping(n);
    for (BitWord z = 0; z < n; z++) {
        BitWord x = z >> (ns + nr);
        BitWord src = (z >> nr) & ((BitWord{1} << ns) - 1);
        BitWord anc = z & ((BitWord{1} << nr) - 1);

        BitWord w = scatter(0, pw, lines.data, x);
        w = scatter(w, pw, lines.source, src);
        BitWord y = p(w);
        anc ^= gather(y, pw, lines.result);
        BitWord back = p_inv[y];

        BitWord x2 = gather(back, pw, lines.data);
        BitWord src2 = gather(back, pw, lines.source);
        mapping[z] = (((x2 << ns) | src2) << nr) | anc;
    }

    LineLayout layout;
    layout.inputs.assign(ni, LineRole::data_in);
    layout.inputs.insert(layout.inputs.end(), ns + nr, LineRole::source);
    layout.outputs.assign(ni + ns, LineRole::restored);
    layout.outputs.insert(layout.outputs.end(), nr, LineRole::result);
    return ReversiblePermutation(width, std::move(mapping), std::move(layout), 2 * p.gate_count() + 1);
}

std::array<BennettPhase, 4> qra::bennett_phases(const ReversiblePermutation &p, BitWord x) {
    auto lines = bennett_lines(p);
    size_t pw = p.width();
    size_t ni = lines.data.size();
    size_t ns = lines.source.size();
    size_t nr = lines.result.size();
    size_t ng = lines.garbage.size();
    if (x >> ni) {
        throw InvalidValueError("input does not fit in " + std::to_string(ni) + " data lines");
    }

    BitWord y = p(scatter(0, pw, lines.data, x));
    BitWord result = gather(y, pw, lines.result);
    BitWord garbage = gather(y, pw, lines.garbage);
    auto composite = bennett_compose(p);
    BitWord z = composite(x << (ns + nr));

    std::string zeros_src = bits_string(0, ns);
    std::string zeros_anc = bits_string(0, nr);
    return {{
        {"input-source-source", {bits_string(x, ni), zeros_src, zeros_anc}},
        {"garbage-result-source", {bits_string(garbage, ng), bits_string(result, nr), zeros_anc}},
        {"garbage-result-result", {bits_string(garbage, ng), bits_string(result, nr), bits_string(result, nr)}},
        {"input-source-result",
         {bits_string(z >> (ns + nr), ni), bits_string((z >> nr) & ((BitWord{1} << ns) - 1), ns),
          bits_string(z & ((BitWord{1} << nr) - 1), nr)}},
    }};
}

double qra::no_cloning_demo(cplx alpha, cplx beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1) > ALGEBRAIC_TOL) {
        throw InvalidValueError("|alpha|^2 + |beta|^2 must equal 1");
    }
    ComplexVector psi(std::vector<cplx>{alpha, beta});
    ComplexOperator copy = to_operator(copy_circuit(1));
    ComplexVector out = copy * kron(psi, ComplexVector::basis(2, 0));
    return std::norm(kron(psi, psi).inner(out));
}

GarbageStats qra::garbage_stats(const ReversiblePermutation &p) {
    GarbageStats s;
    if (p.layout().has_value()) {
        s.source_lines = p.layout()->count_inputs(LineRole::source);
        s.garbage_lines = p.layout()->count_outputs(LineRole::garbage);
        s.result_lines = p.layout()->count_outputs(LineRole::result);
    }
    s.gate_count = p.gate_count();
    s.steps = 1;
    return s;
}

GarbageStats qra::garbage_stats(std::span<const ReversiblePermutation> chain) {
    GarbageStats total;
    for (const auto &p : chain) {
        auto s = garbage_stats(p);
        total.source_lines += s.source_lines;
        total.garbage_lines += s.garbage_lines;
        total.result_lines += s.result_lines;
        total.gate_count += s.gate_count;
        total.steps += 1;
    }
    return total;
}

ComplexOperator qra::to_operator(const ReversiblePermutation &p) {
    return ComplexOperator::permutation(std::vector<size_t>(p.mapping().begin(), p.mapping().end()));
}

std::string qra::bits_string(BitWord word, size_t width) {
    std::string out(width, '0');
    for (size_t k = 0; k < width; k++) {
        if (get_bit(word, k, width)) {
            out[k] = '1';
        }
    }
    return out;
}
