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

#include "qra/cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qra/corpus.h"
#include "qra/errors.h"
#include "qra/text_format.h"
#include "qra/words.h"

using namespace qra;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AlphabetMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    double prob = 0;
    size_t steps = 0;
    size_t garbage_cells = 0;
};

/// Anything `run` and `compare` can evaluate on a word.
struct Evaluator {
    std::string kind;
    std::vector<std::string> alphabet;
    bool parallel_safe = true;
    std::function<Outcome(const Word &)> eval;
};

Evaluator make_evaluator(const AnyModel &model, const std::string &path) {
    if (path != "full" && path != "traced") {
        throw UsageError("--path must be 'full' or 'traced'");
    }
    if (const auto *d = std::get_if<Dfa>(&model)) {
        return {"dfa", d->alphabet(), true, [d = *d](const Word &w) {
                    return Outcome{dfa_accepts(d, w) ? 1.0 : 0.0, w.size(), 0};
                }};
    }
    if (const auto *m = std::get_if<McQfa>(&model)) {
        auto problems = validate(*m);
        if (!problems.empty()) {
            throw ValidationFailure("invalid mcqfa: " + problems.front());
        }
        return {"mcqfa", m->alphabet(), true, [m = *m](const Word &w) {
                    return Outcome{mc_accept_prob(m, w), w.size(), 0};
                }};
    }
    if (const auto *t = std::get_if<TapeQfa>(&model)) {
        auto problems = validate(*t);
        if (!problems.empty()) {
            throw ValidationFailure("invalid tapeqfa: " + problems.front());
        }
        if (path == "full") {
            SimulationOptions options{max_amplitudes_from_env()};
            return {"tape-full", t->alphabet(), false, [t = *t, options](const Word &w) {
                        TapeSimulation sim(t, basis_word_state(t, w), w.size(), options);
                        sim.run();
                        return Outcome{sim.accept_probability(), w.size(), sim.garbage_cells_used()};
                    }};
        }
        return {"tape-traced", t->alphabet(), true, [t = *t](const Word &w) {
                    std::vector<DensityOperator> cells;
                    cells.reserve(w.size());
                    for (size_t x : w) {
                        if (x >= t.input_dim()) {
                            throw UnknownSymbolError("symbol index " + std::to_string(x) + " is not in the alphabet");
                        }
                        cells.push_back(DensityOperator::pure(ComplexVector::basis(t.input_dim(), x)));
                    }
                    auto r = run_traced(t, cells);
                    return Outcome{r.probability, w.size(), r.garbage_cells};
                }};
    }
    throw UsageError("truth tables cannot be run; use 'qra reversibilize' or 'qra demo bennett'");
}

/// Evaluates every word, in parallel when the evaluator allows it. Results keep input order.
std::vector<Outcome> evaluate_all(const Evaluator &e, const std::vector<Word> &words, std::vector<double> *wall_ms) {
    std::vector<Outcome> out(words.size());
    std::vector<std::exception_ptr> failures(words.size());
    if (wall_ms) {
        wall_ms->assign(words.size(), 0);
    }
    auto one = [&](size_t k) {
        try {
            auto t0 = std::chrono::steady_clock::now();
            out[k] = e.eval(words[k]);
            if (wall_ms) {
                (*wall_ms)[k] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            }
        } catch (...) {
            failures[k] = std::current_exception();
        }
    };
    const auto n = static_cast<std::ptrdiff_t>(words.size());
    if (e.parallel_safe) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t k = 0; k < n; k++) {
            one(static_cast<size_t>(k));
        }
    } else {
        for (std::ptrdiff_t k = 0; k < n; k++) {
            one(static_cast<size_t>(k));
            if (failures[k]) {
                break;
            }
        }
    }
    for (const auto &f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    return out;
}

AnyModel load_model(const std::string &path) {
    return parse_any(read_text_file(path));
}

std::string trim(std::string_view s) {
    size_t a = 0;
    size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        a++;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        b--;
    }
    return std::string(s.substr(a, b - a));
}

/// One word per line; blank lines are skipped and `""` stands for the empty word.
std::vector<std::string> read_words_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read words file '" + path + "'");
    }
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        std::string w = trim(line);
        if (w.empty()) {
            continue;
        }
        words.push_back(w == "\"\"" ? "" : w);
    }
    return words;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string display_word(const std::string &s) {
    return s.empty() ? "\"\"" : s;
}

std::string join_names(const std::vector<std::string> &names) {
    std::string out;
    for (size_t k = 0; k < names.size(); k++) {
        out += (k ? " " : "") + names[k];
    }
    return out;
}

void pad(std::ostream &out, const std::string &s, size_t width) {
    out << s;
    for (size_t k = s.size(); k < width; k++) {
        out << ' ';
    }
}

// ------------------------------------------------------------------ commands

int cmd_reversibilize(const std::string &in_path, const std::string &out_path, std::ostream &out) {
    AnyModel model = load_model(in_path);
    std::string text;
    std::string summary;
    if (const auto *d = std::get_if<Dfa>(&model)) {
        auto r = reversibilize_dfa(*d);
        auto q = from_reversible_dfa(r, d->accept());
        text = to_text(q);
        summary = "tapeqfa dims " + std::to_string(q.internal_dim()) + " " + std::to_string(q.input_dim()) + " " +
                  std::to_string(q.sg_dim());
    } else if (const auto *t = std::get_if<TruthTable>(&model)) {
        auto p = reversibilize_table(*t);
        TruthTable bijection(p.width(), p.width(), std::vector<BitWord>(p.mapping().begin(), p.mapping().end()));
        text = to_text(bijection);
        summary = "table width " + std::to_string(p.width());
    } else {
        throw UsageError("reversibilize expects a dfa or table file");
    }
    if (out_path.empty() || out_path == "-") {
        out << text;
        return cli::EXIT_OK;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << text)) {
        throw UsageError("cannot write '" + out_path + "'");
    }
    out << "wrote " << summary << " to " << out_path << "\n";
    return cli::EXIT_OK;
}

int cmd_run(
    const std::string &model_path,
    const std::optional<std::string> &word,
    const std::string &words_path,
    const std::string &path,
    bool json,
    bool csv,
    std::ostream &out) {
    if (word.has_value() == !words_path.empty()) {
        throw UsageError("run needs exactly one of --word or --words");
    }
    if (json && csv) {
        throw UsageError("--json and --csv are mutually exclusive");
    }
    Evaluator e = make_evaluator(load_model(model_path), path);
    std::vector<std::string> texts = word ? std::vector<std::string>{*word} : read_words_file(words_path);
    std::vector<Word> words;
    words.reserve(texts.size());
    for (const auto &t : texts) {
        words.push_back(parse_word(e.alphabet, t));
    }
    std::vector<double> wall_ms;
    auto outcomes = evaluate_all(e, words, &wall_ms);

    if (csv) {
        out << "word,prob,steps,garbage_cells\n";
        for (size_t k = 0; k < words.size(); k++) {
            out << csv_field(texts[k]) << "," << cli::format_probability(outcomes[k].prob) << "," << outcomes[k].steps
                << "," << outcomes[k].garbage_cells << "\n";
        }
    } else if (json) {
        out << "[\n";
        for (size_t k = 0; k < words.size(); k++) {
            char ms[32];
            std::snprintf(ms, sizeof(ms), "%.3f", wall_ms[k]);
            out << "  {\"kind\": " << nlohmann::json(e.kind).dump() << ", \"word\": " << nlohmann::json(texts[k]).dump()
                << ", \"prob\": " << cli::format_probability(outcomes[k].prob) << ", \"steps\": " << outcomes[k].steps
                << ", \"garbage_cells\": " << outcomes[k].garbage_cells << ", \"wall_time_ms\": " << ms << "}"
                << (k + 1 < words.size() ? ",\n" : "\n");
        }
        out << "]\n";
    } else {
        size_t width = 4;
        for (const auto &t : texts) {
            width = std::max(width, display_word(t).size());
        }
        out << "model: " << e.kind << "\n";
        pad(out, "word", width + 2);
        pad(out, "prob", 16);
        pad(out, "steps", 7);
        out << "garbage_cells\n";
        for (size_t k = 0; k < words.size(); k++) {
            pad(out, display_word(texts[k]), width + 2);
            pad(out, cli::format_probability(outcomes[k].prob), 16);
            pad(out, std::to_string(outcomes[k].steps), 7);
            out << outcomes[k].garbage_cells << "\n";
        }
    }
    return cli::EXIT_OK;
}

constexpr double COMPARE_TOL = 1e-9;

int cmd_compare(const std::string &a_path, const std::string &b_path, size_t maxlen, const std::string &path, std::ostream &out) {
    Evaluator a = make_evaluator(load_model(a_path), path);
    Evaluator b = make_evaluator(load_model(b_path), path);
    auto sa = a.alphabet;
    auto sb = b.alphabet;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
        throw AlphabetMismatch("alphabets differ: {" + join_names(a.alphabet) + "} vs {" + join_names(b.alphabet) + "}");
    }
    std::vector<size_t> to_b(a.alphabet.size());
    for (size_t x = 0; x < a.alphabet.size(); x++) {
        to_b[x] = static_cast<size_t>(std::find(b.alphabet.begin(), b.alphabet.end(), a.alphabet[x]) - b.alphabet.begin());
    }

    auto words = words_up_to(a.alphabet.size(), maxlen);
    std::vector<Word> words_b;
    words_b.reserve(words.size());
    for (const auto &w : words) {
        Word t(w.size());
        for (size_t k = 0; k < w.size(); k++) {
            t[k] = to_b[w[k]];
        }
        words_b.push_back(std::move(t));
    }
    auto pa = evaluate_all(a, words, nullptr);
    auto pb = evaluate_all(b, words_b, nullptr);

    out << "A: " << a_path << " (" << a.kind << ")\n";
    out << "B: " << b_path << " (" << b.kind << ")\n";
    pad(out, "length", 8);
    pad(out, "words", 10);
    out << "max_divergence\n";
    double overall = 0;
    std::optional<size_t> first;
    size_t k = 0;
    for (size_t len = 0; len <= maxlen; len++) {
        double worst = 0;
        size_t count = 0;
        for (; k < words.size() && words[k].size() == len; k++, count++) {
            double d = std::abs(pa[k].prob - pb[k].prob);
            worst = std::max(worst, d);
            if (d > COMPARE_TOL && !first) {
                first = k;
            }
        }
        overall = std::max(overall, worst);
        pad(out, std::to_string(len), 8);
        pad(out, std::to_string(count), 10);
        out << cli::format_probability(worst) << "\n";
    }
    out << "max divergence: " << cli::format_probability(overall) << "\n";
    if (first) {
        out << "first diverging word: " << display_word(format_word(a.alphabet, words[*first]))
            << " (A " << cli::format_probability(pa[*first].prob) << ", B " << cli::format_probability(pb[*first].prob)
            << ")\n";
    } else {
        out << "first diverging word: none\n";
    }
    return overall <= COMPARE_TOL ? cli::EXIT_OK : cli::EXIT_DIVERGENCE;
}

int demo_no_cloning(std::ostream &out) {
    out << "copy circuit C: (x, y) -> (x, y xor x), input psi (x) |0>, psi = cos(t)|0> + sin(t)|1>\n";
    pad(out, "t/pi", 8);
    pad(out, "alpha", 18);
    pad(out, "beta", 18);
    out << "fidelity |<psi psi|C|psi 0>|^2\n";
    for (int k = 0; k <= 8; k++) {
        double t = k * std::numbers::pi / 16;
        double alpha = std::cos(t);
        double beta = std::sin(t);
        if (k == 8) {
            alpha = 0;
            beta = 1;
        }
        pad(out, std::to_string(k) + "/16", 8);
        pad(out, cli::format_probability(alpha), 18);
        pad(out, cli::format_probability(beta), 18);
        out << cli::format_probability(no_cloning_demo(alpha, beta)) << "\n";
    }
    double h = 1 / std::sqrt(2.0);
    out << "alpha = beta = 1/sqrt(2): fidelity " << cli::format_probability(no_cloning_demo(h, h)) << "\n";
    out << "basis states copy perfectly; superpositions come out entangled instead\n";
    return cli::EXIT_OK;
}

int demo_bennett(const std::string &table_path, const std::string &input, std::ostream &out) {
    TruthTable t = table_path.empty() ? corpus::and_table() : parse_truth_table(read_text_file(table_path));
    std::string bits = input.empty() ? std::string(t.n_in, '1') : input;
    if (bits.size() != t.n_in || bits.find_first_not_of("01") != std::string::npos) {
        throw UsageError("--input must be " + std::to_string(t.n_in) + " bits");
    }
    BitWord x = std::stoull(bits, nullptr, 2);
    auto p = reversibilize_table(t);
    auto composite = bennett_compose(p);
    auto phases = bennett_phases(p, x);
    out << "f: " << t.n_in << " -> " << t.n_out << " bits, reversible width " << p.width() << ", composite width "
        << composite.width() << ", " << composite.gate_count() << " devices (compute, copy, uncompute)\n";
    out << "input x = " << bits << ", f(x) = " << bits_string(t(x), t.n_out) << "\n";
    size_t width = 0;
    for (const auto &ph : phases) {
        width = std::max(width, ph.label.size());
    }
    for (const auto &ph : phases) {
        pad(out, ph.label, width + 2);
        out << "(" << ph.groups[0] << ", " << ph.groups[1] << ", " << ph.groups[2] << ")\n";
    }
    const auto &last = phases.back().groups;
    out << "final layout: (" << last[0] << ", " << last[1] << ", " << last[2] << ")\n";
    auto stats = garbage_stats(composite);
    out << "net garbage lines: " << stats.garbage_lines << "\n";
    return cli::EXIT_OK;
}

int demo_garbage_growth(const std::string &dfa_path, std::ostream &out) {
    Dfa d = dfa_path.empty() ? corpus::parity_of_a() : parse_dfa(read_text_file(dfa_path));
    auto q = from_reversible_dfa(reversibilize_dfa(d), d.accept());
    out << "garbage cells written by the reversible tape machine (sg dim " << q.sg_dim() << ")\n";
    pad(out, "length", 8);
    pad(out, "word", 12);
    out << "garbage_cells\n";
    std::vector<double> xs;
    std::vector<double> ys;
    for (size_t n = 1; n <= 8; n++) {
        Word w(n);
        for (size_t k = 0; k < n; k++) {
            w[k] = k % d.num_symbols();
        }
        std::vector<DensityOperator> cells;
        for (size_t x : w) {
            cells.push_back(DensityOperator::pure(ComplexVector::basis(q.input_dim(), x)));
        }
        auto r = run_traced(q, cells);
        pad(out, std::to_string(n), 8);
        pad(out, format_word(d.alphabet(), w), 12);
        out << r.garbage_cells << "\n";
        xs.push_back(static_cast<double>(n));
        ys.push_back(static_cast<double>(r.garbage_cells));
    }
    double mx = 0;
    double my = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        mx += xs[k];
        my += ys[k];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(ys.size());
    double sxy = 0;
    double sxx = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        sxy += (xs[k] - mx) * (ys[k] - my);
        sxx += (xs[k] - mx) * (xs[k] - mx);
    }
    out << "slope: " << cli::format_probability(sxy / sxx) << "\n";
    return cli::EXIT_OK;
}

int cmd_validate(const std::string &path, std::ostream &out) {
    AnyModel model = load_model(path);
    std::vector<std::string> problems;
    std::string kind;
    std::visit(
        [&](const auto &m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, TruthTable>) {
                kind = "table";
            } else if constexpr (std::is_same_v<T, Dfa>) {
                kind = "dfa";
            } else {
                kind = std::is_same_v<T, McQfa> ? "mcqfa" : "tapeqfa";
                problems = validate(m);
            }
        },
        model);
    if (problems.empty()) {
        out << "valid " << kind << "\n";
        return cli::EXIT_OK;
    }
    out << "invalid " << kind << "\n";
    for (const auto &p : problems) {
        out << "  " << p << "\n";
    }
    return cli::EXIT_INVALID;
}

}  // namespace

std::string cli::format_probability(double p) {
    if (p < 0 && p > -ALGEBRAIC_TOL) {
        p = 0;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", p);
    return buf;
}

int cli::run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Reversible and quantum automata toolkit", "qra"};
    app.require_subcommand(1);

    auto *rev = app.add_subcommand("reversibilize", "Embed a DFA (or truth table) into a reversible machine");
    std::string rev_in;
    std::string rev_out;
    rev->add_option("input", rev_in, "dfa or table file")->required();
    rev->add_option("output", rev_out, "output path (default: standard output)");

    auto *run_cmd = app.add_subcommand("run", "Acceptance probabilities of words");
    std::string run_model;
    std::optional<std::string> run_word;
    std::string run_words;
    std::string run_path = "traced";
    bool run_json = false;
    bool run_csv = false;
    run_cmd->add_option("model", run_model, "dfa, mcqfa or tapeqfa file")->required();
    run_cmd->add_option("--word", run_word, "a single word");
    run_cmd->add_option("--words", run_words, "file with one word per line");
    run_cmd->add_option("--path", run_path, "tape simulation: full or traced")->capture_default_str();
    run_cmd->add_flag("--json", run_json, "JSON output");
    run_cmd->add_flag("--csv", run_csv, "CSV output");

    auto *cmp = app.add_subcommand("compare", "Compare two models on all words up to a length");
    std::string cmp_a;
    std::string cmp_b;
    size_t cmp_maxlen = 8;
    std::string cmp_path = "traced";
    cmp->add_option("model_a", cmp_a)->required();
    cmp->add_option("model_b", cmp_b)->required();
    cmp->add_option("--maxlen", cmp_maxlen, "longest word length")->capture_default_str();
    cmp->add_option("--path", cmp_path, "tape simulation: full or traced")->capture_default_str();

    auto *demo = app.add_subcommand("demo", "no-cloning, bennett or garbage-growth");
    std::string demo_name;
    std::string demo_table;
    std::string demo_input;
    std::string demo_dfa;
    demo->add_option("name", demo_name)->required();
    demo->add_option("--table", demo_table, "truth table for bennett (default: AND)");
    demo->add_option("--input", demo_input, "input bits for bennett (default: all ones)");
    demo->add_option("--dfa", demo_dfa, "machine for garbage-growth (default: parity of a)");

    auto *val = app.add_subcommand("validate", "Check a model file");
    std::string val_path;
    val->add_option("file", val_path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return EXIT_OK;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }

    try {
        if (rev->parsed()) {
            return cmd_reversibilize(rev_in, rev_out, out);
        }
        if (run_cmd->parsed()) {
            return cmd_run(run_model, run_word, run_words, run_path, run_json, run_csv, out);
        }
        if (cmp->parsed()) {
            return cmd_compare(cmp_a, cmp_b, cmp_maxlen, cmp_path, out);
        }
        if (demo->parsed()) {
            if (demo_name == "no-cloning") {
                return demo_no_cloning(out);
            }
            if (demo_name == "bennett") {
                return demo_bennett(demo_table, demo_input, out);
            }
            if (demo_name == "garbage-growth") {
                return demo_garbage_growth(demo_dfa, out);
            }
            throw UsageError("unknown demo '" + demo_name + "' (expected no-cloning, bennett or garbage-growth)");
        }
        if (val->parsed()) {
            return cmd_validate(val_path, out);
        }
    } catch (const qra::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const UnknownSymbolError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_SYMBOL;
    } catch (const AlphabetMismatch &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_SYMBOL;
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << "; rerun with --path traced\n";
        return EXIT_RESOURCE;
    } catch (const ValidationFailure &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
