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

// Line-oriented text formats for truth tables and automata.
//
// All formats are whitespace separated, ignore blank lines and treat `#` as
// the start of a comment. The first significant token names the format
// (`table`, `dfa`, `mcqfa`, `tapeqfa`). Complex numbers are written `re,im`
// (a bare `re` means im = 0). Every `to_text` output is canonical: parsing it
// and printing again reproduces the same bytes.
//
//   table 2 1              dfa                     mcqfa
//   00 -> 0                states: q0 q1           dim: 2
//   01 -> 0                alphabet: a b           alphabet: a b
//   10 -> 0                start: q0               init: 1,0 0,0
//   11 -> 1                accept: q0              accept: 0
//                          delta: q0 a -> q1       unitary a:
//                          ...                     0,0 1,0
//                                                  1,0 0,0
//   tapeqfa                                        unitary b:
//   dims: 2 2 5                                    ...
//   alphabet: a b
//   blank: 0
//   init: 1,0 0,0
//   accept: 0
//   permutation:           (or `unitary:` followed by the full matrix)
//   0 0 0 -> 1 0 1
//   ...

#ifndef QRA_TEXT_FORMAT_H
#define QRA_TEXT_FORMAT_H

#include <string>
#include <string_view>
#include <variant>

#include "qra/automata.h"
#include "qra/mc_qfa.h"
#include "qra/reversible.h"
#include "qra/tape_qfa.h"

namespace qra {

enum class ModelKind { truth_table, dfa, mcqfa, tapeqfa };

const char *kind_name(ModelKind kind);

/// Reads the header keyword. Throws ParseError for anything else.
ModelKind detect_kind(std::string_view text);

TruthTable parse_truth_table(std::string_view text);
Dfa parse_dfa(std::string_view text);
McQfa parse_mcqfa(std::string_view text);
TapeQfa parse_tapeqfa(std::string_view text);

using AnyModel = std::variant<TruthTable, Dfa, McQfa, TapeQfa>;
AnyModel parse_any(std::string_view text);

std::string to_text(const TruthTable &t);
std::string to_text(const Dfa &d);
std::string to_text(const McQfa &q);
/// Uses the `permutation:` form whenever U carries a permutation map.
std::string to_text(const TapeQfa &q);

/// Shortest round-tripping `re,im` representation.
std::string format_complex(cplx z);

/// Whole file contents. Throws ParseError (line 0) when the file cannot be read.
std::string read_text_file(const std::string &path);

}  // namespace qra

#endif
