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

#include <random>

#include "gtest/gtest.h"
#include "qra/corpus.h"
#include "qra/errors.h"
#include "qra/words.h"

using namespace qra;

namespace {

constexpr size_t A = 0;
constexpr size_t B = 1;

Word w(std::string_view text) {
    std::vector<std::string> ab{"a", "b"};
    return parse_word(ab, text);
}

}  // namespace

TEST(dfa, construction_validates) {
    std::vector<std::string> ab{"a", "b"};
    EXPECT_THROW(Dfa({"q0", "q0"}, ab, 0, {}, {0, 0, 0, 0}), InvalidValueError);
    EXPECT_THROW(Dfa({"q0"}, ab, 1, {}, {0, 0}), InvalidValueError);
    EXPECT_THROW(Dfa({"q0"}, ab, 0, {1}, {0, 0}), InvalidValueError);
    EXPECT_THROW(Dfa({"q0"}, ab, 0, {}, {0}), InvalidValueError);
    EXPECT_THROW(Dfa({"q0"}, ab, 0, {}, {0, 1}), InvalidValueError);
    EXPECT_THROW(Dfa({}, ab, 0, {}, {}), InvalidValueError);
    Dfa d({"q0", "q1"}, ab, 0, {1, 0, 1}, {1, 0, 0, 1});
    EXPECT_EQ(d.accept(), (std::vector<size_t>{0, 1}));
}

TEST(dfa_accepts, parity_examples) {
    auto d = corpus::parity_of_a();
    EXPECT_TRUE(dfa_accepts(d, w("")));
    EXPECT_TRUE(dfa_accepts(d, w("aa")));
    EXPECT_FALSE(dfa_accepts(d, w("a")));
    // q0 -a-> q1 -b-> q1 -a-> q0: two a's, accepted.
    EXPECT_TRUE(dfa_accepts(d, w("aba")));
    EXPECT_EQ(dfa_run(d, w("ab")), 1);
    std::vector<size_t> bad{2};
    EXPECT_THROW(dfa_accepts(d, bad), UnknownSymbolError);
}

TEST(dfa_accepts, corpus_languages) {
    for (const auto &word : words_up_to(2, 8)) {
        size_t as = std::count(word.begin(), word.end(), A);
        bool has_ab = false;
        for (size_t k = 0; k + 1 < word.size(); k++) {
            has_ab |= word[k] == A && word[k + 1] == B;
        }
        EXPECT_EQ(dfa_accepts(corpus::parity_of_a(), word), as % 2 == 0);
        EXPECT_EQ(dfa_accepts(corpus::ends_with_a(), word), !word.empty() && word.back() == A);
        EXPECT_EQ(dfa_accepts(corpus::a_count_mod3(), word), as % 3 == 0);
        EXPECT_EQ(dfa_accepts(corpus::contains_ab(), word), has_ab);
        EXPECT_TRUE(dfa_accepts(corpus::accept_all(), word));
    }
}

TEST(reversibilize_dfa, parity_step) {
    auto r = reversibilize_dfa(corpus::parity_of_a());
    EXPECT_EQ(r.state_dim, 2);
    EXPECT_EQ(r.input_dim, 2);
    EXPECT_EQ(r.sg_dim, 5);
    EXPECT_EQ(r.blank, 0);
    EXPECT_EQ(r.gamma(0, A), 1);
    StepTriple t{0, A, r.blank};
    EXPECT_EQ(r.step(t), (StepTriple{1, A, r.gamma(0, A)}));
    EXPECT_EQ(r.unstep(StepTriple{1, A, r.gamma(0, A)}), t);
}

TEST(reversibilize_dfa, step_is_total_bijection_for_corpus) {
    for (const auto &entry : corpus::all()) {
        auto r = reversibilize_dfa(entry.dfa);
        const auto &d = entry.dfa;
        ASSERT_EQ(r.sg_dim, d.num_states() * d.num_symbols() + 1) << entry.name;
        ASSERT_EQ(r.forward.size(), r.triple_count());
        std::vector<bool> hit(r.triple_count());
        for (size_t k = 0; k < r.triple_count(); k++) {
            ASSERT_LT(r.forward[k], r.triple_count());
            EXPECT_FALSE(hit[r.forward[k]]);
            hit[r.forward[k]] = true;
            EXPECT_EQ(r.backward[r.forward[k]], k);
        }
        for (size_t q = 0; q < d.num_states(); q++) {
            for (size_t x = 0; x < d.num_symbols(); x++) {
                EXPECT_EQ(r.step({q, x, r.blank}), (StepTriple{d.next(q, x), x, r.gamma(q, x)}));
            }
        }
    }
}

TEST(run_reversible, examples) {
    auto r = reversibilize_dfa(corpus::parity_of_a());
    auto one = run_reversible(r, w("a"));
    EXPECT_EQ(one.q_end, 1);
    ASSERT_EQ(one.record.size(), 1);
    EXPECT_EQ(one.record[0], (GarbageCell{A, r.gamma(0, A)}));
    auto empty = run_reversible(r, w(""));
    EXPECT_EQ(empty.q_end, r.start);
    EXPECT_TRUE(empty.record.empty());
    std::vector<size_t> bad{5};
    EXPECT_THROW(run_reversible(r, bad), UnknownSymbolError);
}

TEST(run_reversible, agrees_with_dfa_on_corpus) {
    for (const auto &entry : corpus::all()) {
        auto r = reversibilize_dfa(entry.dfa);
        for (const auto &word : words_up_to(2, 8)) {
            auto run = run_reversible(r, word);
            EXPECT_EQ(run.q_end, dfa_run(entry.dfa, word));
            bool accepted = std::binary_search(r.accept.begin(), r.accept.end(), run.q_end);
            EXPECT_EQ(accepted, dfa_accepts(entry.dfa, word));
            EXPECT_EQ(run.record.size(), word.size());
        }
    }
}

TEST(run_reversible, backward_run_reconstructs_input) {
    auto machines = corpus::all();
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 1000; trial++) {
        const auto &entry = machines[rng() % machines.size()];
        auto r = reversibilize_dfa(entry.dfa);
        Word word(rng() % 11);
        for (auto &x : word) {
            x = rng() % 2;
        }
        auto back = unrun_reversible(r, run_reversible(r, word));
        EXPECT_EQ(back.state, r.start);
        EXPECT_EQ(back.word, word);
        EXPECT_EQ(back.sources, std::vector<size_t>(word.size(), r.blank));
    }
}

TEST(run_reversible, garbage_is_write_once) {
    for (const auto &entry : corpus::all()) {
        auto r = reversibilize_dfa(entry.dfa);
        for (const auto &word : words_up_to(2, 6)) {
            auto full = run_reversible(r, word);
            for (size_t k = 0; k <= word.size(); k++) {
                Word prefix(word.begin(), word.begin() + k);
                auto part = run_reversible(r, prefix);
                EXPECT_TRUE(std::equal(part.record.begin(), part.record.end(), full.record.begin()));
            }
        }
    }
}

TEST(definite_event_circuit, examples) {
    auto r = reversibilize_dfa(corpus::parity_of_a());
    auto empty = definite_event_circuit(r, 0);
    EXPECT_EQ(empty.length(), 0);
    auto out = empty.evaluate(r.start, {}, {});
    EXPECT_EQ(out.q_end, r.start);
    EXPECT_TRUE(empty.accepts(Word{}));
    auto two = definite_event_circuit(r, 2);
    EXPECT_TRUE(two.accepts(w("aa")));
    std::vector<size_t> blanks(2, r.blank);
    EXPECT_EQ(two.evaluate(r.start, w("aa"), blanks).q_end, 0);
    EXPECT_THROW(definite_event_circuit(r, -1), InvalidValueError);
    EXPECT_THROW(two.accepts(w("a")), DimensionError);
}

TEST(definite_event_circuit, parity_length_three) {
    auto d = corpus::parity_of_a();
    auto c = definite_event_circuit(reversibilize_dfa(d), 3);
    size_t accepted = 0;
    for (const auto &word : words_of_length(2, 3)) {
        EXPECT_EQ(c.accepts(word), dfa_accepts(d, word));
        accepted += c.accepts(word);
    }
    EXPECT_EQ(accepted, 4);
}

TEST(definite_event_circuit, inverse_restores_every_basis_input) {
    auto r = reversibilize_dfa(corpus::contains_ab());
    auto c = definite_event_circuit(r, 2);
    for (size_t q = 0; q < r.state_dim; q++) {
        for (size_t x0 = 0; x0 < r.input_dim; x0++) {
            for (size_t x1 = 0; x1 < r.input_dim; x1++) {
                for (size_t s0 = 0; s0 < r.sg_dim; s0 += 3) {
                    for (size_t s1 = 0; s1 < r.sg_dim; s1 += 2) {
                        std::vector<size_t> in{x0, x1};
                        std::vector<size_t> src{s0, s1};
                        auto back = c.evaluate_inverse(c.evaluate(q, in, src));
                        EXPECT_EQ(back.state, q);
                        EXPECT_EQ(back.word, in);
                        EXPECT_EQ(back.sources, src);
                    }
                }
            }
        }
    }
}
