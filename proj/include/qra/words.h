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

#ifndef QRA_WORDS_H
#define QRA_WORDS_H

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qra/automata.h"

namespace qra {

/// Parses a word written either as concatenated single-character symbols
/// ("aab") or as comma-separated symbol names ("left,right"). Text containing
/// a comma is always split on commas. Throws UnknownSymbolError.
Word parse_word(std::span<const std::string> alphabet, std::string_view text);

/// Inverse of parse_word: concatenation when every symbol is one character, comma-joined otherwise.
std::string format_word(std::span<const std::string> alphabet, std::span<const size_t> w);

/// All |alphabet|^len words of the given length in lexicographic order.
std::vector<Word> words_of_length(size_t num_symbols, size_t len);
/// All words of length 0..max_len, shortest first.
std::vector<Word> words_up_to(size_t num_symbols, size_t max_len);

}  // namespace qra

#endif
