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

#ifndef QSC_KERNEL_HPP
#define QSC_KERNEL_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsc/derivation.hpp"
#include "qsc/syntax.hpp"

namespace qsc {

/// Outcome of one rule check: the first failing sub-condition, if any.
struct Verdict {
    ErrorCode code = ErrorCode::ok;
    std::string message;

    bool ok() const { return code == ErrorCode::ok; }
    static Verdict pass() { return {}; }
    static Verdict fail(ErrorCode code, std::string message) { return {code, std::move(message)}; }
};

struct NodeVerdict {
    /// Step labels from the root down, joined by '/'.
    std::string path;
    Rule rule = Rule::premise;
    Verdict verdict;
};

struct CheckReport {
    bool ok = true;
    /// Post-order, one entry per node occurrence.
    std::vector<NodeVerdict> per_node;
    LogicMode mode = LogicMode::basic;

    /// First failing node, or nullptr.
    const NodeVerdict *first_failure() const;
};

// Individual rule checks. Premises are the conclusions of the premise
// subtrees, in order.

Verdict check_cut(const Sequent &left_premise, const Sequent &right_premise, const Sequent &conclusion,
                  std::span<const Formula> cut_formulas, LogicMode mode);

/// and_form or and_refl.
Verdict check_and(Rule rule, std::span<const Sequent> premises, const Sequent &conclusion, LogicMode mode);

/// at_form, at_impl_refl, at_expl_refl or at_axiom. `fired` receives the Bell
/// convention the rule matched with, when it passes.
Verdict check_at(Rule rule, std::span<const Sequent> premises, const Sequent &conclusion, LogicMode mode,
                 std::optional<BellConvention> convention = std::nullopt, BellConvention *fired = nullptr);

/// semi_distrib or q_split.
Verdict check_rewrite(Rule rule, std::span<const Sequent> premises, const Sequent &conclusion,
                      std::optional<BellConvention> convention = std::nullopt);

/// h_rule, h_inverse or cnot.
Verdict check_structural(Rule rule, const Sequent &premise, const Sequent &conclusion,
                         std::optional<CnotClause> clause = std::nullopt);

/// neg_form or neg_refl. `active` lists the atoms whose polarity flips as they
/// cross the turnstile; when empty, the atom nearest the turnstile is active.
Verdict check_neg(Rule rule, const Sequent &premise, const Sequent &conclusion, std::span<const Formula> active = {});

Verdict check_par_form(const Sequent &premise, const Sequent &conclusion);

/// axiom: X |- X, or the &-reflection axioms Q_X |- X and Q_X |- X^.
Verdict check_axiom(const Sequent &conclusion);

/// EPR macro: checks the @-implicit reflection, semi-distributivity and
/// #-formation steps it abbreviates, attributing failures to the macro.
Verdict check_epr(std::span<const Sequent> premises, const Sequent &conclusion, LogicMode mode);

/// The sub-derivation an EPR node abbreviates. The result's premises hold the
/// EPR node's premises at the leaves. Throws SchemaMismatch when the premises
/// do not have the EPR shape.
Derivation expand_epr(const Derivation &epr_node);

/// Checks both branches, then the join (and_form or at_form) of their
/// conclusions against `conclusion` after normalization.
Verdict check_parallel(const Derivation &branch_left, const Derivation &branch_right, Rule join,
                       const Sequent &conclusion, LogicMode mode, std::optional<BellConvention> convention = {});

/// Checks `node` against its immediate premises only.
Verdict check_node(const Derivation &node, LogicMode mode);

/// Checks every node, post-order. Never throws on bad input; failures are
/// recorded in the report.
CheckReport check_derivation(const Derivation &tree, LogicMode mode);

/// Convention an @-formation node (at_form or parallel_join of at_form)
/// matches with; nullopt for other nodes or malformed premises.
std::optional<BellConvention> fired_convention(const Derivation &node);

}  // namespace qsc

#endif
