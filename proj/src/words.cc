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

#include "qra/words.h"

#include <algorithm>

#include "qra/errors.h"

using namespace qra;

static size_t lookup(std::span<const std::string> alphabet, std::string_view symbol) {
    auto it = std::find(alphabet.begin(), alphabet.end(), symbol);
    if (it == alphabet.end()) {
        throw UnknownSymbolError("unknown symbol '" + std::string(symbol) + "'");
    }
    return static_cast<size_t>(it - alphabet.begin());
}

static bool all_single_char(std::span<const std::string> alphabet) {
    return std::all_of(alphabet.begin(), alphabet.end(), [](const std::string &s) {
        return s.size() == 1;
    });
}

Word qra::parse_word(std::span<const std::string> alphabet, std::string_view text) {
    Word w;
    if (text.empty()) {
        return w;
    }
    if (text.find(',') != std::string_view::npos || !all_single_char(alphabet)) {
        size_t pos = 0;
        while (true) {
            size_t comma = text.find(',', pos);
            std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            w.push_back(lookup(alphabet, part));
            if (comma == std::string_view::npos) {
                break;
            }
            pos = comma + 1;
        }
        return w;
    }
    for (char c : text) {
        w.push_back(lookup(alphabet, std::string_view(&c, 1)));
    }
    return w;
}

std::string qra::format_word(std::span<const std::string> alphabet, std::span<const size_t> w) {
    bool compact = all_single_char(alphabet);
    std::string out;
    for (size_t k = 0; k < w.size(); k++) {
        if (w[k] >= alphabet.size()) {
            throw UnknownSymbolError("symbol index " + std::to_string(w[k]) + " is not in the alphabet");
        }
        if (!compact && k > 0) {
            out += ',';
        }
        out += alphabet[w[k]];
    }
    return out;
}

std::vector<Word> qra::words_of_length(size_t num_symbols, size_t len) {
    std::vector<Word> out;
    if (num_symbols == 0) {
        if (len == 0) {
            out.emplace_back();
        }
        return out;
    }
    Word w(len, 0);
    while (true) {
        out.push_back(w);
        size_t k = len;
        while (k > 0 && w[k - 1] + 1 == num_symbols) {
            w[k - 1] = 0;
            k--;
        }
        if (k == 0) {
            break;
        }
        w[k - 1]++;
    }
    return out;
}

std::vector<Word> qra::words_up_to(size_t num_symbols, size_t max_len) {
    std::vector<Word> out;
    for (size_t len = 0; len <= max_len; len++) {
        auto batch = words_of_length(num_symbols, len);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}
