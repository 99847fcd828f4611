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

#ifndef QSC_DERIVATION_HPP
#define QSC_DERIVATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/syntax.hpp"

namespace qsc {

/// Every rule the kernel knows. There is deliberately no tag for contraction,
/// weakening or permutation.
enum class Rule {
    premise,
    axiom,
    and_form,
    and_refl,
    par_form,
    neg_form,
    neg_refl,
    cut,
    at_form,
    at_impl_refl,
    at_expl_refl,
    at_axiom,
    semi_distrib,
    q_split,
    h_rule,
    h_inverse,
    cnot,
    epr,
    parallel_join,
};

/// Which Bell shape an @-rule fired with: (X,Y)/(X^,Y^) or (X^,Y)/(X,Y^).
enum class BellConvention { phi, psi };

/// CNOT clauses, control first: a = B,A => B,A^; b = B^,A => B^,A;
/// a' = B,A^ => B,A; b' = B^,A^ => B^,A^.
enum class CnotClause { a, b, a_prime, b_prime };

struct RuleParams {
    /// Cut formulas, or the active atoms of a negation rule.
    std::vector<Formula> formulas;
    std::optional<BellConvention> convention;
    std::optional<CnotClause> clause;
    /// Join connective of a parallel_join: and_form or at_form.
    std::optional<Rule> join;

    friend bool operator==(const RuleParams &a, const RuleParams &b) = default;
};

/// Script keyword of a rule ("cut", "atform", "parallel", ...).
std::string_view rule_keyword(Rule rule);
/// Looks a keyword up; nullopt for anything else, including "contraction".
std::optional<Rule> rule_from_keyword(std::string_view word);
/// Label drawn next to an inference bar ("cut", "&R", "@-form", ...).
std::string rule_label(Rule rule, const RuleParams &params);
std::string_view convention_name(BellConvention c);
std::string_view clause_name(CnotClause c);

enum class LogicMode { basic, intuitionistic_left };
std::string_view mode_name(LogicMode mode);

/// A derivation tree node. Leaves carry premise, axiom or at_axiom.
struct Derivation {
    Rule rule = Rule::premise;
    RuleParams params;
    std::vector<Derivation> premises;
    Sequent conclusion;
    /// Step id from the script, used in node paths. Not part of equality.
    std::string label;
    SourceSpan span;

    /// Structural equality: rule, parameters, premises and conclusion.
    friend bool operator==(const Derivation &a, const Derivation &b);
};

/// Report path of a tree's root: its label, or "0" when unlabeled.
std::string root_path(const Derivation &root);
/// Report path of the `index`-th premise of the node at `parent_path`.
std::string child_path(const std::string &parent_path, const Derivation &child, std::size_t index);

}  // namespace qsc

#endif
