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

#include "qra/text_format.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "qra/errors.h"

using namespace qra;

namespace {

struct Line {
    size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> lex(std::string_view text) {
    std::vector<Line> lines;
    size_t number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        number++;
        std::string_view raw = text.substr(pos, end - pos);
        size_t hash = raw.find('#');
        if (hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{number, {}};
        size_t k = 0;
        while (k < raw.size()) {
            while (k < raw.size() && std::isspace(static_cast<unsigned char>(raw[k]))) {
                k++;
            }
            size_t start = k;
            while (k < raw.size() && !std::isspace(static_cast<unsigned char>(raw[k]))) {
                k++;
            }
            if (k > start) {
                line.tokens.emplace_back(raw.substr(start, k - start));
            }
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
        pos = end + 1;
    }
    return lines;
}

std::optional<double> to_double(std::string_view s) {
    if (s.empty()) {
        return std::nullopt;
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

std::optional<cplx> to_complex(std::string_view s) {
    size_t comma = s.find(',');
    if (comma == std::string_view::npos) {
        auto re = to_double(s);
        if (!re) {
            return std::nullopt;
        }
        return cplx{*re, 0};
    }
    auto re = to_double(s.substr(0, comma));
    auto im = to_double(s.substr(comma + 1));
    if (!re || !im) {
        return std::nullopt;
    }
    return cplx{*re, *im};
}

size_t to_index(const std::string &s, size_t line, const char *what) {
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + s + "'");
    }
    return v;
}

bool is_keyword(const Line &line) {
    return line.tokens.front().back() == ':';
}

size_t resolve(const std::vector<std::string> &names, const std::string &token, size_t line, const char *what) {
    auto it = std::find(names.begin(), names.end(), token);
    if (it == names.end()) {
        throw ParseError(line, std::string("unknown ") + what + " '" + token + "'");
    }
    return static_cast<size_t>(it - names.begin());
}

std::string join(const std::vector<std::string> &parts) {
    std::string out;
    for (size_t k = 0; k < parts.size(); k++) {
        if (k) {
            out += ' ';
        }
        out += parts[k];
    }
    return out;
}

void check_unique_names(const std::vector<std::string> &names, size_t line, const char *what) {
    for (size_t a = 0; a < names.size(); a++) {
        for (size_t b = a + 1; b < names.size(); b++) {
            if (names[a] == names[b]) {
                throw ParseError(line, std::string("duplicate ") + what + " '" + names[a] + "'");
            }
        }
    }
}

class Parser {
   public:
    Parser(std::string_view text, const char *header) : lines_(lex(text)) {
        if (lines_.empty()) {
            throw ParseError(0, std::string("empty input, expected '") + header + "'");
        }
        const auto &first = lines_.front();
        if (first.tokens.front() != header) {
            throw ParseError(first.number, std::string("expected '") + header + "', got '" + first.tokens.front() + "'");
        }
        header_tokens_ = first.tokens;
        pos_ = 1;
    }

    const std::vector<std::string> &header_tokens() const {
        return header_tokens_;
    }
    size_t header_line() const {
        return lines_.front().number;
    }
    bool done() const {
        return pos_ >= lines_.size();
    }
    const Line &peek() const {
        return lines_[pos_];
    }
    const Line &next() {
        return lines_[pos_++];
    }

    /// Reads `count` complex values, starting after token `skip` of `line`
    /// and continuing over following value-only lines.
    std::vector<cplx> values(const Line &line, size_t skip, size_t count, const std::string &what) {
        std::vector<cplx> out;
        auto take = [&](const Line &l, size_t from) {
            for (size_t k = from; k < l.tokens.size(); k++) {
                if (out.size() == count) {
                    throw ParseError(l.number, "too many values for " + what);
                }
                auto z = to_complex(l.tokens[k]);
                if (!z) {
                    throw ParseError(l.number, "expected a complex value for " + what + ", got '" + l.tokens[k] + "'");
                }
                out.push_back(*z);
            }
        };
        take(line, skip);
        while (out.size() < count) {
            if (done() || !to_complex(peek().tokens.front())) {
                throw ParseError(
                    line.number, "expected " + std::to_string(count) + " values for " + what + ", got " + std::to_string(out.size()));
            }
            take(next(), 0);
        }
        return out;
    }

   private:
    std::vector<Line> lines_;
    std::vector<std::string> header_tokens_;
    size_t pos_ = 0;
};

void require_header_alone(const Parser &p, const char *header) {
    if (p.header_tokens().size() != 1) {
        throw ParseError(p.header_line(), std::string("unexpected tokens after '") + header + "'");
    }
}

template <typename T>
void once(std::optional<T> &slot, size_t line, const std::string &key) {
    if (slot.has_value()) {
        throw ParseError(line, "duplicate '" + key + "' line");
    }
}

std::vector<size_t> parse_indices(const Line &line, size_t bound, const char *what) {
    std::vector<size_t> out;
    for (size_t k = 1; k < line.tokens.size(); k++) {
        size_t v = to_index(line.tokens[k], line.number, what);
        if (v >= bound) {
            throw ParseError(line.number, std::string(what) + " " + std::to_string(v) + " out of range");
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

const char *qra::kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::truth_table:
            return "table";
        case ModelKind::dfa:
            return "dfa";
        case ModelKind::mcqfa:
            return "mcqfa";
        case ModelKind::tapeqfa:
            return "tapeqfa";
    }
    return "?";
}

ModelKind qra::detect_kind(std::string_view text) {
    auto lines = lex(text);
    if (lines.empty()) {
        throw ParseError(0, "empty input");
    }
    const auto &t = lines.front().tokens.front();
    if (t == "table") {
        return ModelKind::truth_table;
    }
    if (t == "dfa") {
        return ModelKind::dfa;
    }
    if (t == "mcqfa") {
        return ModelKind::mcqfa;
    }
    if (t == "tapeqfa") {
        return ModelKind::tapeqfa;
    }
    throw ParseError(lines.front().number, "unknown format '" + t + "' (expected table, dfa, mcqfa or tapeqfa)");
}

// ----------------------------------------------------------------- truth table

TruthTable qra::parse_truth_table(std::string_view text) {
    Parser p(text, "table");
    if (p.header_tokens().size() != 3) {
        throw ParseError(p.header_line(), "expected 'table <n_in> <n_out>'");
    }
    size_t n_in = to_index(p.header_tokens()[1], p.header_line(), "n_in");
    size_t n_out = to_index(p.header_tokens()[2], p.header_line(), "n_out");
    if (n_in == 0 || n_out == 0 || n_in > MAX_PERMUTATION_WIDTH || n_out > MAX_PERMUTATION_WIDTH) {
        throw ParseError(p.header_line(), "bit counts must be between 1 and " + std::to_string(MAX_PERMUTATION_WIDTH));
    }
    auto bits = [](const std::string &s, size_t width, size_t line) {
        if (s.size() != width) {
            throw ParseError(line, "expected " + std::to_string(width) + " bits, got '" + s + "'");
        }
        BitWord v = 0;
        for (char c : s) {
            if (c != '0' && c != '1') {
                throw ParseError(line, "expected bits, got '" + s + "'");
            }
            v = (v << 1) | static_cast<BitWord>(c - '0');
        }
        return v;
    };
    std::vector<std::optional<BitWord>> rows(size_t{1} << n_in);
    while (!p.done()) {
        const auto &line = p.next();
        if (line.tokens.size() != 3 || line.tokens[1] != "->") {
            throw ParseError(line.number, "expected 'IN_BITS -> OUT_BITS'");
        }
        BitWord in = bits(line.tokens[0], n_in, line.number);
        BitWord out = bits(line.tokens[2], n_out, line.number);
        if (rows[in].has_value()) {
            throw ParseError(line.number, "duplicate row for input " + line.tokens[0]);
        }
        rows[in] = out;
    }
    std::vector<BitWord> total(rows.size());
    for (size_t x = 0; x < rows.size(); x++) {
        if (!rows[x].has_value()) {
            throw ParseError(0, "missing row for input " + bits_string(x, n_in));
        }
        total[x] = *rows[x];
    }
    return TruthTable(n_in, n_out, std::move(total));
}

std::string qra::to_text(const TruthTable &t) {
    std::string out = "table " + std::to_string(t.n_in) + " " + std::to_string(t.n_out) + "\n";
    for (size_t x = 0; x < t.rows.size(); x++) {
        out += bits_string(x, t.n_in) + " -> " + bits_string(t.rows[x], t.n_out) + "\n";
    }
    return out;
}

// ------------------------------------------------------------------------- DFA

Dfa qra::parse_dfa(std::string_view text) {
    Parser p(text, "dfa");
    require_header_alone(p, "dfa");

    std::optional<std::vector<std::string>> states;
    std::optional<std::vector<std::string>> alphabet;
    std::optional<std::pair<std::string, size_t>> start;
    std::optional<std::pair<std::vector<std::string>, size_t>> accept;
    std::map<std::pair<size_t, size_t>, size_t> delta;

    while (!p.done()) {
        const auto &line = p.next();
        const auto &key = line.tokens.front();
        std::vector<std::string> rest(line.tokens.begin() + 1, line.tokens.end());
        if (key == "states:") {
            once(states, line.number, key);
            if (rest.empty()) {
                throw ParseError(line.number, "a DFA needs at least one state");
            }
            check_unique_names(rest, line.number, "state");
            states = rest;
        } else if (key == "alphabet:") {
            once(alphabet, line.number, key);
            if (rest.empty()) {
                throw ParseError(line.number, "a DFA needs at least one symbol");
            }
            check_unique_names(rest, line.number, "symbol");
            alphabet = rest;
        } else if (key == "start:") {
            once(start, line.number, key);
            if (rest.size() != 1) {
                throw ParseError(line.number, "expected exactly one start state");
            }
            start = std::make_pair(rest[0], line.number);
        } else if (key == "accept:") {
            once(accept, line.number, key);
            accept = std::make_pair(rest, line.number);
        } else if (key == "delta:") {
            if (rest.size() != 4 || rest[2] != "->") {
                throw ParseError(line.number, "expected 'delta: <state> <symbol> -> <state>'");
            }
            if (!states || !alphabet) {
                throw ParseError(line.number, "'delta:' lines must follow 'states:' and 'alphabet:'");
            }
            size_t q = resolve(*states, rest[0], line.number, "state");
            size_t x = resolve(*alphabet, rest[1], line.number, "symbol");
            size_t t = resolve(*states, rest[3], line.number, "state");
            if (!delta.emplace(std::make_pair(q, x), t).second) {
                throw ParseError(line.number, "duplicate transition for (" + rest[0] + ", " + rest[1] + ")");
            }
        } else {
            throw ParseError(line.number, "unexpected '" + key + "' in dfa");
        }
    }

    if (!states) {
        throw ParseError(0, "missing 'states:' line");
    }
    if (!alphabet) {
        throw ParseError(0, "missing 'alphabet:' line");
    }
    if (!start) {
        throw ParseError(0, "missing 'start:' line");
    }
    size_t start_index = resolve(*states, start->first, start->second, "state");
    std::vector<size_t> accept_indices;
    if (accept) {
        for (const auto &name : accept->first) {
            accept_indices.push_back(resolve(*states, name, accept->second, "state"));
        }
    }
    std::vector<size_t> table(states->size() * alphabet->size());
    for (size_t q = 0; q < states->size(); q++) {
        for (size_t x = 0; x < alphabet->size(); x++) {
            auto it = delta.find({q, x});
            if (it == delta.end()) {
                throw ParseError(
                    0, "transition function is not total: no delta for (" + (*states)[q] + ", " + (*alphabet)[x] + ")");
            }
            table[q * alphabet->size() + x] = it->second;
        }
    }
    return Dfa(*states, *alphabet, start_index, std::move(accept_indices), std::move(table));
}

std::string qra::to_text(const Dfa &d) {
    std::ostringstream out;
    out << "dfa\n";
    out << "states: " << join(d.states()) << "\n";
    out << "alphabet: " << join(d.alphabet()) << "\n";
    out << "start: " << d.states()[d.start()] << "\n";
    out << "accept:";
    for (size_t q : d.accept()) {
        out << " " << d.states()[q];
    }
    out << "\n";
    for (size_t q = 0; q < d.num_states(); q++) {
        for (size_t x = 0; x < d.num_symbols(); x++) {
            out << "delta: " << d.states()[q] << " " << d.alphabet()[x] << " -> " << d.states()[d.next(q, x)] << "\n";
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------- MC-QFA

McQfa qra::parse_mcqfa(std::string_view text) {
    Parser p(text, "mcqfa");
    require_header_alone(p, "mcqfa");

    std::optional<size_t> dim;
    std::optional<std::vector<std::string>> alphabet;
    std::optional<std::vector<cplx>> init;
    std::optional<std::vector<size_t>> accept;
    std::map<size_t, ComplexOperator> unitaries;

    while (!p.done()) {
        const auto &line = p.next();
        const auto &key = line.tokens.front();
        if (key == "dim:") {
            once(dim, line.number, key);
            if (line.tokens.size() != 2) {
                throw ParseError(line.number, "expected 'dim: <n>'");
            }
            dim = to_index(line.tokens[1], line.number, "dim");
            if (*dim == 0) {
                throw ParseError(line.number, "dim must be positive");
            }
        } else if (key == "alphabet:") {
            once(alphabet, line.number, key);
            std::vector<std::string> rest(line.tokens.begin() + 1, line.tokens.end());
            if (rest.empty()) {
                throw ParseError(line.number, "alphabet must not be empty");
            }
            check_unique_names(rest, line.number, "symbol");
            alphabet = rest;
        } else if (key == "init:") {
            once(init, line.number, key);
            if (!dim) {
                throw ParseError(line.number, "'init:' must follow 'dim:'");
            }
            init = p.values(line, 1, *dim, "init");
        } else if (key == "accept:") {
            once(accept, line.number, key);
            if (!dim) {
                throw ParseError(line.number, "'accept:' must follow 'dim:'");
            }
            accept = parse_indices(line, *dim, "accept index");
        } else if (key == "unitary" && line.tokens.size() == 2 && line.tokens[1].size() > 1 && line.tokens[1].back() == ':') {
            if (!dim || !alphabet) {
                throw ParseError(line.number, "'unitary' blocks must follow 'dim:' and 'alphabet:'");
            }
            std::string symbol = line.tokens[1].substr(0, line.tokens[1].size() - 1);
            size_t x = resolve(*alphabet, symbol, line.number, "symbol");
            if (unitaries.count(x)) {
                throw ParseError(line.number, "duplicate unitary for symbol '" + symbol + "'");
            }
            auto entries = p.values(line, 2, *dim * *dim, "unitary " + symbol);
            unitaries.emplace(x, ComplexOperator(*dim, *dim, std::move(entries)));
        } else {
            throw ParseError(line.number, "unexpected '" + key + "' in mcqfa");
        }
    }

    if (!dim) {
        throw ParseError(0, "missing 'dim:' line");
    }
    if (!alphabet) {
        throw ParseError(0, "missing 'alphabet:' line");
    }
    if (!init) {
        throw ParseError(0, "missing 'init:' line");
    }
    std::vector<ComplexOperator> ops;
    for (size_t x = 0; x < alphabet->size(); x++) {
        auto it = unitaries.find(x);
        if (it == unitaries.end()) {
            throw ParseError(0, "missing unitary for symbol '" + (*alphabet)[x] + "'");
        }
        ops.push_back(it->second);
    }
    return McQfa(ComplexVector(*init), accept.value_or(std::vector<size_t>{}), *alphabet, std::move(ops));
}

static void write_values(std::ostream &out, std::span<const cplx> values, size_t per_line) {
    for (size_t k = 0; k < values.size(); k++) {
        out << format_complex(values[k]) << ((k + 1) % per_line == 0 ? "\n" : " ");
    }
}

static void write_accept(std::ostream &out, const std::vector<size_t> &accept) {
    out << "accept:";
    for (size_t a : accept) {
        out << " " << a;
    }
    out << "\n";
}

std::string qra::to_text(const McQfa &q) {
    std::ostringstream out;
    out << "mcqfa\n";
    out << "dim: " << q.dim() << "\n";
    out << "alphabet: " << join(q.alphabet()) << "\n";
    out << "init:";
    for (const auto &z : q.s_init().amplitudes()) {
        out << " " << format_complex(z);
    }
    out << "\n";
    write_accept(out, q.accept());
    for (size_t x = 0; x < q.alphabet().size(); x++) {
        out << "unitary " << q.alphabet()[x] << ":\n";
        write_values(out, q.unitary(x).entries(), q.dim());
    }
    return out.str();
}

// ------------------------------------------------------------------- tape QFA

TapeQfa qra::parse_tapeqfa(std::string_view text) {
    Parser p(text, "tapeqfa");
    require_header_alone(p, "tapeqfa");

    struct Dims {
        size_t h, i, sg;
    };
    std::optional<Dims> dims;
    std::optional<std::vector<std::string>> alphabet;
    std::optional<size_t> blank;
    std::optional<std::vector<cplx>> init;
    std::optional<std::vector<size_t>> accept;
    std::optional<ComplexOperator> u;

    while (!p.done()) {
        const auto &line = p.next();
        const auto &key = line.tokens.front();
        if (key == "dims:") {
            once(dims, line.number, key);
            if (line.tokens.size() != 4) {
                throw ParseError(line.number, "expected 'dims: <h_in> <i> <sg>'");
            }
            Dims d{
                to_index(line.tokens[1], line.number, "h_in"),
                to_index(line.tokens[2], line.number, "i"),
                to_index(line.tokens[3], line.number, "sg"),
            };
            if (d.h == 0 || d.i == 0 || d.sg == 0) {
                throw ParseError(line.number, "dimensions must be positive");
            }
            if (d.h * d.i * d.sg > 4096) {
                throw ParseError(line.number, "step space larger than 4096 is not supported");
            }
            dims = d;
        } else if (key == "alphabet:") {
            once(alphabet, line.number, key);
            std::vector<std::string> rest(line.tokens.begin() + 1, line.tokens.end());
            check_unique_names(rest, line.number, "symbol");
            alphabet = rest;
        } else if (key == "blank:") {
            once(blank, line.number, key);
            if (line.tokens.size() != 2) {
                throw ParseError(line.number, "expected 'blank: <index>'");
            }
            blank = to_index(line.tokens[1], line.number, "blank");
        } else if (key == "init:") {
            once(init, line.number, key);
            if (!dims) {
                throw ParseError(line.number, "'init:' must follow 'dims:'");
            }
            init = p.values(line, 1, dims->h, "init");
        } else if (key == "accept:") {
            once(accept, line.number, key);
            if (!dims) {
                throw ParseError(line.number, "'accept:' must follow 'dims:'");
            }
            accept = parse_indices(line, dims->h, "accept index");
        } else if (key == "unitary:") {
            once(u, line.number, "unitary:' or 'permutation:");
            if (!dims) {
                throw ParseError(line.number, "'unitary:' must follow 'dims:'");
            }
            size_t n = dims->h * dims->i * dims->sg;
            u = ComplexOperator(n, n, p.values(line, 1, n * n, "unitary"));
        } else if (key == "permutation:") {
            once(u, line.number, "unitary:' or 'permutation:");
            if (!dims) {
                throw ParseError(line.number, "'permutation:' must follow 'dims:'");
            }
            if (line.tokens.size() != 1) {
                throw ParseError(line.number, "rows of 'permutation:' start on the next line");
            }
            size_t n = dims->h * dims->i * dims->sg;
            std::vector<std::optional<size_t>> images(n);
            auto triple = [&](const Line &l, size_t from) {
                size_t q = to_index(l.tokens[from], l.number, "state");
                size_t x = to_index(l.tokens[from + 1], l.number, "input");
                size_t g = to_index(l.tokens[from + 2], l.number, "sg");
                if (q >= dims->h || x >= dims->i || g >= dims->sg) {
                    throw ParseError(l.number, "triple out of range for dims");
                }
                return (q * dims->i + x) * dims->sg + g;
            };
            while (!p.done() && !is_keyword(p.peek())) {
                const auto &row = p.next();
                if (row.tokens.size() != 7 || row.tokens[3] != "->") {
                    throw ParseError(row.number, "expected '<q> <x> <sg> -> <q> <x> <sg>'");
                }
                size_t in = triple(row, 0);
                size_t out = triple(row, 4);
                if (images[in].has_value()) {
                    throw ParseError(row.number, "duplicate permutation row");
                }
                images[in] = out;
            }
            std::vector<size_t> total(n);
            for (size_t k = 0; k < n; k++) {
                if (!images[k].has_value()) {
                    throw ParseError(line.number, "permutation has no row for input index " + std::to_string(k));
                }
                total[k] = *images[k];
            }
            try {
                u = ComplexOperator::permutation(std::move(total));
            } catch (const InvalidValueError &) {
                throw ParseError(line.number, "permutation rows are not a bijection");
            }
        } else {
            throw ParseError(line.number, "unexpected '" + key + "' in tapeqfa");
        }
    }

    if (!dims) {
        throw ParseError(0, "missing 'dims:' line");
    }
    if (!blank) {
        throw ParseError(0, "missing 'blank:' line");
    }
    if (!init) {
        throw ParseError(0, "missing 'init:' line");
    }
    if (!u) {
        throw ParseError(0, "missing 'unitary:' or 'permutation:' block");
    }
    if (*blank >= dims->sg) {
        throw ParseError(0, "blank index out of range");
    }
    if (alphabet && alphabet->size() != dims->i) {
        throw ParseError(0, "alphabet must name exactly " + std::to_string(dims->i) + " symbols");
    }
    return TapeQfa(
        dims->h,
        dims->i,
        dims->sg,
        *blank,
        ComplexVector(*init),
        accept.value_or(std::vector<size_t>{}),
        std::move(*u),
        alphabet.value_or(std::vector<std::string>{}));
}

std::string qra::to_text(const TapeQfa &q) {
    std::ostringstream out;
    out << "tapeqfa\n";
    out << "dims: " << q.internal_dim() << " " << q.input_dim() << " " << q.sg_dim() << "\n";
    out << "alphabet: " << join(q.alphabet()) << "\n";
    out << "blank: " << q.blank() << "\n";
    out << "init:";
    for (const auto &z : q.s0().amplitudes()) {
        out << " " << format_complex(z);
    }
    out << "\n";
    write_accept(out, q.accept());
    if (q.u().is_permutation()) {
        out << "permutation:\n";
        const auto &images = *q.u().permutation_map();
        size_t i = q.input_dim();
        size_t sg = q.sg_dim();
        for (size_t k = 0; k < images.size(); k++) {
            size_t t = images[k];
            out << k / (i * sg) << " " << (k / sg) % i << " " << k % sg << " -> " << t / (i * sg) << " " << (t / sg) % i
                << " " << t % sg << "\n";
        }
    } else {
        out << "unitary:\n";
        write_values(out, q.u().entries(), q.step_dim());
    }
    return out.str();
}

// ---------------------------------------------------------------------- misc

AnyModel qra::parse_any(std::string_view text) {
    switch (detect_kind(text)) {
        case ModelKind::truth_table:
            return parse_truth_table(text);
        case ModelKind::dfa:
            return parse_dfa(text);
        case ModelKind::mcqfa:
            return parse_mcqfa(text);
        case ModelKind::tapeqfa:
            return parse_tapeqfa(text);
    }
    throw ParseError(0, "unknown format");
}

std::string qra::format_complex(cplx z) {
    char buf[64];
    auto r1 = std::to_chars(buf, buf + sizeof(buf), z.real());
    std::string out(buf, r1.ptr);
    auto r2 = std::to_chars(buf, buf + sizeof(buf), z.imag());
    out += ',';
    out.append(buf, r2.ptr);
    return out;
}

std::string qra::read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
