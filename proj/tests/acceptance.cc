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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "qra/automata.h"
#include "qra/corpus.h"
#include "qra/mc_qfa.h"
#include "qra/reversible.h"
#include "qra/tape_qfa.h"
#include "qra/words.h"

using namespace qra;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string &what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char *name, double time_limit_s, const std::function<void(Check &)> &body) {
    Check check;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception &e) {
        check.require(false, std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit_s > 0) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "took %.2f s, limit %.0f s", elapsed, time_limit_s);
        check.require(elapsed < time_limit_s, buf);
    }
    std::printf("%s  %2d  %-28s %8.3f s%s%s\n", check.ok ? "PASS" : "FAIL", id, name, elapsed,
                check.ok ? "" : "  ", check.detail.c_str());
    failures += !check.ok;
}

TapeQfa tape_of(const Dfa &d) {
    return from_reversible_dfa(reversibilize_dfa(d), d.accept());
}

std::vector<DensityOperator> basis_cells(size_t dim, std::span<const size_t> w) {
    std::vector<DensityOperator> cells;
    for (size_t x : w) {
        cells.push_back(DensityOperator::pure(ComplexVector::basis(dim, x)));
    }
    return cells;
}

std::string word_text(std::span<const size_t> w) {
    std::vector<std::string> ab{"a", "b"};
    return "\"" + format_word(ab, w) + "\"";
}

TapeQfa random_tape(std::mt19937_64 &rng) {
    size_t h = 1 + rng() % 3;
    size_t i = 1 + rng() % 2;
    size_t sg = 1 + rng() % 3;
    std::vector<size_t> accept;
    for (size_t q = 0; q < h; q++) {
        if (rng() % 2) {
            accept.push_back(q);
        }
    }
    return TapeQfa(h, i, sg, rng() % sg, random_state(h, rng), accept, random_unitary(h * i * sg, rng));
}

}  // namespace

int main() {
    criterion(1, "reversible-and-rows", 1, [](Check &c) {
        auto p = reversibilize_table(corpus::and_table());
        c.require(p.width() == 3, "width is not 3");
        // (s, i1, i2) -> (AND, g1, g2)
        const BitWord rows[4][2] = {{0b000, 0b000}, {0b001, 0b001}, {0b010, 0b010}, {0b011, 0b111}};
        for (const auto &r : rows) {
            c.require(p(r[0]) == r[1], "row " + bits_string(r[0], 3) + " -> " + bits_string(p(r[0]), 3));
        }
    });

    criterion(2, "classical-embedding", 30, [](Check &c) {
        auto words = words_up_to(2, 8);
        c.require(words.size() == 511, "expected 511 words");
        for (const auto &entry : corpus::all()) {
            auto q = tape_of(entry.dfa);
            for (const auto &w : words) {
                double expected = dfa_accepts(entry.dfa, w) ? 1.0 : 0.0;
                double traced = accept_prob_traced(q, basis_cells(q.input_dim(), w));
                c.require(traced == expected, entry.name + " traced " + word_text(w));
                if (w.size() <= 5) {
                    double full = accept_prob_full(q, w);
                    c.require(full == expected, entry.name + " full " + word_text(w));
                }
            }
        }
    });

    criterion(3, "path-equivalence", 60, [](Check &c) {
        std::mt19937_64 rng(20260301);
        double worst = 0;
        for (int trial = 0; trial < 100; trial++) {
            auto q = random_tape(rng);
            size_t n = rng() % 5;
            std::vector<ComplexVector> cells;
            std::vector<DensityOperator> rho;
            for (size_t k = 0; k < n; k++) {
                cells.push_back(random_state(q.input_dim(), rng));
                rho.push_back(DensityOperator::pure(cells.back()));
            }
            double full = accept_prob_full(q, product_word_state(cells), n);
            double traced = accept_prob_traced(q, rho);
            worst = std::max(worst, std::abs(full - traced));
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "max |full - traced| = %.3g", worst);
        c.require(worst <= 1e-10, buf);
    });

    criterion(4, "reversibility", 10, [](Check &c) {
        auto machines = corpus::all();
        std::mt19937_64 rng(20260302);
        for (int trial = 0; trial < 1000; trial++) {
            const auto &entry = machines[rng() % machines.size()];
            auto r = reversibilize_dfa(entry.dfa);
            Word w(rng() % 11);
            for (auto &x : w) {
                x = rng() % 2;
            }
            auto back = unrun_reversible(r, run_reversible(r, w));
            bool exact = back.state == r.start && back.word == w &&
                         back.sources == std::vector<size_t>(w.size(), r.blank);
            c.require(exact, entry.name + " " + word_text(w));
        }
    });

    criterion(5, "bennett-composition", 5, [](Check &c) {
        std::mt19937_64 rng(20260303);
        for (int trial = 0; trial < 50; trial++) {
            size_t n_out = 1 + rng() % 3;
            std::vector<BitWord> rows(8);
            for (auto &r : rows) {
                r = rng() & ((BitWord{1} << n_out) - 1);
            }
            TruthTable t(3, n_out, rows);
            auto p = reversibilize_table(t);
            auto composite = bennett_compose(p);
            size_t ns = p.layout()->count_inputs(LineRole::source);
            for (BitWord x = 0; x < 8; x++) {
                BitWord z = composite(x << (ns + n_out));
                bool ok = (z >> (ns + n_out)) == x && ((z >> n_out) & ((BitWord{1} << ns) - 1)) == 0 &&
                          (z & ((BitWord{1} << n_out) - 1)) == t(x);
                c.require(ok, "table " + std::to_string(trial) + " input " + bits_string(x, 3));
            }
        }
    });

    criterion(6, "no-cloning", 0, [](Check &c) {
        double h = 1 / std::sqrt(2.0);
        double f = no_cloning_demo(h, h);
        c.require(std::abs(f - 0.5) <= 1e-12, "superposition fidelity " + std::to_string(f));
        c.require(std::abs(no_cloning_demo(1, 0) - 1) <= 1e-12, "basis |0> not copied");
        c.require(std::abs(no_cloning_demo(0, 1) - 1) <= 1e-12, "basis |1> not copied");
    });

    criterion(7, "definite-events", 10, [](Check &c) {
        for (const auto &entry : corpus::all()) {
            auto r = reversibilize_dfa(entry.dfa);
            for (int64_t n = 0; n <= 6; n++) {
                auto circuit = definite_event_circuit(r, n);
                for (const auto &w : words_of_length(2, static_cast<size_t>(n))) {
                    c.require(circuit.accepts(w) == dfa_accepts(entry.dfa, w), entry.name + " " + word_text(w));
                }
            }
        }
    });

    criterion(8, "garbage-time-tie", 0, [](Check &c) {
        for (const auto &entry : corpus::all()) {
            auto q = tape_of(entry.dfa);
            for (size_t n = 1; n <= 8; n++) {
                for (const auto &w : {Word(n, 0), Word(n, 1)}) {
                    auto r = run_traced(q, basis_cells(q.input_dim(), w));
                    c.require(r.garbage_cells == n, entry.name + " length " + std::to_string(n));
                }
            }
        }
        auto stats = garbage_stats(bennett_compose(reversibilize_table(corpus::and_table())));
        c.require(stats.garbage_lines == 0, "bennett leaves garbage lines");
        c.require(stats.result_lines == 1, "bennett result lines != 1");
    });

    criterion(9, "mc-qfa-sanity", 0, [](Check &c) {
        auto q = corpus::parity_mcqfa();
        for (const auto &w : words_up_to(2, 8)) {
            size_t as = std::count(w.begin(), w.end(), size_t{0});
            c.require(mc_accept_prob(q, w) == (as % 2 == 0 ? 1.0 : 0.0), "parity " + word_text(w));
        }
        std::mt19937_64 rng(20260309);
        std::vector<std::string> ab{"a", "b"};
        for (int trial = 0; trial < 100; trial++) {
            size_t dim = 1 + rng() % 4;
            std::vector<size_t> accept;
            for (size_t k = 0; k < dim; k++) {
                if (rng() % 2) {
                    accept.push_back(k);
                }
            }
            McQfa m(random_state(dim, rng), accept, ab, {random_unitary(dim, rng), random_unitary(dim, rng)});
            for (const auto &w : words_up_to(2, 6)) {
                double p = mc_accept_prob(m, w);
                c.require(p >= 0 && p <= 1 + 1e-12, "random instance " + std::to_string(trial));
            }
        }
    });

    criterion(10, "locality", 0, [](Check &c) {
        std::mt19937_64 rng(20260310);
        double worst = 0;
        for (int trial = 0; trial < 20; trial++) {
            auto q = random_tape(rng);
            const size_t n = 4;
            std::vector<ComplexVector> cells;
            for (size_t k = 0; k < n; k++) {
                cells.push_back(random_state(q.input_dim(), rng));
            }
            TapeSimulation sim(q, product_word_state(cells), n);
            for (size_t k = 1; k <= n; k++) {
                std::vector<DensityOperator> in_before;
                std::vector<DensityOperator> sg_before;
                for (size_t j = k + 1; j <= n; j++) {
                    in_before.push_back(sim.input_cell_state(j));
                    sg_before.push_back(sim.sg_cell_state(j));
                }
                sim.step();
                for (size_t j = k + 1; j <= n; j++) {
                    worst = std::max(worst, max_abs_diff(sim.input_cell_state(j).matrix(), in_before[j - k - 1].matrix()));
                    worst = std::max(worst, max_abs_diff(sim.sg_cell_state(j).matrix(), sg_before[j - k - 1].matrix()));
                }
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "max change = %.3g", worst);
        c.require(worst <= 1e-12, buf);
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
