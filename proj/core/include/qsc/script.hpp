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

#ifndef QSC_SCRIPT_HPP
#define QSC_SCRIPT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qsc/derivation.hpp"
#include "qsc/syntax.hpp"

namespace qsc {

/// One numbered line of a theorem: `id: sequent by rule[params](premises)` or
/// `id: sequent premise`.
struct Step {
    std::string id;
    Sequent sequent;
    Rule rule = Rule::premise;
    RuleParams params;
    std::vector<std::string> premise_ids;
    SourceSpan span;
};

struct Theorem {
    std::string name;
    std::vector<Step> steps;
    /// Tree rooted at the last step; node labels are step ids.
    Derivation tree;
    SourceSpan span;

    /// The last step's sequent.
    const Sequent &goal() const { return steps.back().sequent; }
};

struct ProofScript {
    std::vector<std::string> atoms;
    std::vector<Theorem> theorems;

    /// Theorem by name, or nullptr.
    const Theorem *find(std::string_view name) const;
};

/// Parses one formula over the declared atoms. Errors (SyntaxError,
/// UnknownAtom, NonAtomicNegation) carry a span into `text`.
Formula parse_formula(std::string_view text, const std::vector<std::string> &atoms);

/// Parses a degree literal: a real, `x+yi`, `yi`, or alpha / beta.
Degree parse_degree(std::string_view text);

/// Parses `antecedent |-{degree} consequent`.
Sequent parse_sequent(std::string_view text, const std::vector<std::string> &atoms);

/// Parses a whole script: `atoms ...` then one or more theorems. Besides
/// syntax errors, rejects unknown rules, duplicate step ids, references to
/// steps not defined earlier, and steps no later step uses.
ProofScript parse_script(std::string_view text);

enum class RenderStyle { ascii, linear };

/// ascii draws premises over a labeled inference bar; linear writes a script
/// (one theorem named `name`) that parses back to an equal tree.
std::string render(const Derivation &tree, RenderStyle style, std::string_view name = "main");

}  // namespace qsc

#endif
