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

#include "qsc/derivation.hpp"

#include <array>
#include <utility>

namespace qsc {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 19> kKeywords{{
    {Rule::premise, "premise"},
    {Rule::axiom, "axiom"},
    {Rule::and_form, "andform"},
    {Rule::and_refl, "andrefl"},
    {Rule::par_form, "parform"},
    {Rule::neg_form, "negform"},
    {Rule::neg_refl, "negrefl"},
    {Rule::cut, "cut"},
    {Rule::at_form, "atform"},
    {Rule::at_impl_refl, "atimplrefl"},
    {Rule::at_expl_refl, "atexplrefl"},
    {Rule::at_axiom, "ataxiom"},
    {Rule::semi_distrib, "semidistrib"},
    {Rule::q_split, "qsplit"},
    {Rule::h_rule, "hrule"},
    {Rule::h_inverse, "hinverse"},
    {Rule::cnot, "cnot"},
    {Rule::epr, "epr"},
    {Rule::parallel_join, "parallel"},
}};

}  // namespace

std::string_view rule_keyword(Rule rule) {
    for (const auto &[r, word] : kKeywords) {
        if (r == rule) {
            return word;
        }
    }
    return "?";
}

std::optional<Rule> rule_from_keyword(std::string_view word) {
    for (const auto &[r, w] : kKeywords) {
        // "premise" is a step form, not something a step can be "by".
        if (w == word && r != Rule::premise) {
            return r;
        }
    }
    return std::nullopt;
}

std::string rule_label(Rule rule, const RuleParams &params) {
    switch (rule) {
        case Rule::premise:
            return "premise";
        case Rule::axiom:
            return "axiom";
        case Rule::and_form:
            return "&R";
        case Rule::and_refl:
            return "&-refl";
        case Rule::par_form:
            return "#-form";
        case Rule::neg_form:
            return "neg-form";
        case Rule::neg_refl:
            return "neg-refl";
        case Rule::cut:
            return "cut";
        case Rule::at_form:
            return "@-form";
        case Rule::at_impl_refl:
            return "@-impl-refl";
        case Rule::at_expl_refl:
            return "@-expl-refl";
        case Rule::at_axiom:
            return "@-axiom";
        case Rule::semi_distrib:
            return "semi-distrib";
        case Rule::q_split:
            return "&-refl-axioms";
        case Rule::h_rule:
            return "H";
        case Rule::h_inverse:
            return "H^-1";
        case Rule::cnot:
            return "CNOT";
        case Rule::epr:
            return "EPR";
        case Rule::parallel_join:
            return params.join == Rule::at_form ? "@-form" : "&R";
    }
    return "?";
}

std::string_view convention_name(BellConvention c) { return c == BellConvention::phi ? "phi" : "psi"; }

std::string_view clause_name(CnotClause c) {
    switch (c) {
        case CnotClause::a:
            return "a";
        case CnotClause::b:
            return "b";
        case CnotClause::a_prime:
            return "a'";
        case CnotClause::b_prime:
            return "b'";
    }
    return "?";
}

std::string_view mode_name(LogicMode mode) { return mode == LogicMode::basic ? "basic" : "intuitionistic"; }

bool operator==(const Derivation &a, const Derivation &b) {
    return a.rule == b.rule && a.params == b.params && a.conclusion == b.conclusion && a.premises == b.premises;
}

std::string root_path(const Derivation &root) { return root.label.empty() ? "0" : root.label; }

std::string child_path(const std::string &parent_path, const Derivation &child, std::size_t index) {
    return parent_path + "/" + (child.label.empty() ? std::to_string(index) : child.label);
}

}  // namespace qsc
