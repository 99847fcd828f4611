// Copyright 2026 The qsc Authors
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

#ifndef QSC_TESTS_HELPERS_HPP
#define QSC_TESTS_HELPERS_HPP

#include <string>
#include <string_view>

#include "qsc/script.hpp"

namespace qsc::testing {

inline const std::vector<std::string> kAtoms{"A", "B", "C", "D"};

inline Formula fm(std::string_view text) { return parse_formula(text, kAtoms); }
inline Sequent sq(std::string_view text) { return parse_sequent(text, kAtoms); }

/// Parses `text` and returns the tree of theorem `name` (or the first one).
inline Derivation tree_of(std::string_view text, std::string_view name = {}) {
    ProofScript s = parse_script(text);
    const Theorem *t = name.empty() ? &s.theorems.front() : s.find(name);
    return t->tree;
}

}  // namespace qsc::testing

#endif
