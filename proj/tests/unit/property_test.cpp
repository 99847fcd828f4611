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

// Fixed-seed property tests. Each test draws its cases from its own engine so
// failures reproduce exactly.

#include <cmath>
#include <functional>

#include "generators.hpp"
#include "gtest/gtest.h"
#include "helpers.hpp"
#include "qsc/kernel.hpp"
#include "qsc/script.hpp"
#include "qsc/semantics.hpp"

using namespace qsc;
using namespace qsc::testing;

namespace {

constexpr int kCases = 500;

std::vector<std::string> wires_for(Rng &rng) {
    static const std::vector<std::string> names{"A", "B", "C"};
    const std::size_t n = 1 + std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    return {names.begin(), names.begin() + static_cast<std::ptrdiff_t>(n)};
}

void visit(const Derivation &d, const std::function<void(const Derivation &)> &f) {
    f(d);
    for (const auto &p : d.premises) {
        visit(p, f);
    }
}

}  // namespace

TEST(property, negation_is_involutive) {
    for (const auto &a : kGenAtoms) {
        for (bool neg : {false, true}) {
            const Formula f = Formula::atom(a, neg);
            EXPECT_EQ(negate(negate(f)), f);
            EXPECT_NE(negate(f), f);
        }
    }
}

TEST(property, normalize_is_idempotent) {
    Rng rng(101);
    for (int i = 0; i < kCases; ++i) {
        const Formula f = random_formula(rng, 3);
        const Formula n = normalize(f);
        EXPECT_EQ(normalize(n), n) << to_string(f);
    }
}

TEST(property, equivalence_relation) {
    Rng rng(102);
    std::vector<Formula> pop;
    for (int i = 0; i < 60; ++i) {
        const Formula f = random_formula(rng, 1);
        pop.push_back(f);
        if (f.is_ent() || f.is_conj()) {
            pop.push_back(f.is_ent() ? Formula::ent(f.right(), f.left())
                                     : Formula::conj(f.right(), f.left(), std::nullopt));
        }
    }
    for (const auto &f : pop) {
        EXPECT_TRUE(equivalent(f, f));
        for (const auto &g : pop) {
            EXPECT_EQ(equivalent(f, g), equivalent(g, f));
            if (!equivalent(f, g)) {
                continue;
            }
            for (const auto &h : pop) {
                if (equivalent(g, h)) {
                    EXPECT_TRUE(equivalent(f, h)) << to_string(f) << " ~ " << to_string(h);
                }
            }
        }
    }
}

TEST(property, formula_text_round_trips) {
    Rng rng(103);
    for (int i = 0; i < kCases; ++i) {
        const Formula f = random_formula(rng, 3);
        EXPECT_EQ(parse_formula(to_string(f), kGenAtoms), f) << to_string(f);
        const Sequent s = random_sequent(rng);
        EXPECT_EQ(parse_sequent(to_string(s), kGenAtoms), s) << to_string(s);
    }
}

TEST(property, linear_render_round_trips) {
    Rng rng(104);
    for (int i = 0; i < kCases; ++i) {
        const Derivation d = random_derivation(rng, 3);
        const std::string text = render(d, RenderStyle::linear, "gen");
        ProofScript back;
        ASSERT_NO_THROW(back = parse_script(text)) << text;
        EXPECT_EQ(back.theorems.at(0).tree, d) << text;
    }
}

TEST(property, ascii_render_is_total) {
    Rng rng(105);
    for (int i = 0; i < 100; ++i) {
        const std::string out = render(random_derivation(rng, 3), RenderStyle::ascii);
        EXPECT_FALSE(out.empty());
        EXPECT_EQ(out.back(), '\n');
    }
}

TEST(property, gates_are_unitary) {
    Rng rng(106);
    for (int i = 0; i < kCases; ++i) {
        const auto wires = wires_for(rng);
        const QState s = random_state(rng, wires);
        EXPECT_NEAR(apply(Operator::hadamard(wires.back()), s).norm(), 1.0, 1e-12);
        EXPECT_LE(residual(apply(Operator::hadamard(wires[0]), apply(Operator::hadamard(wires[0]), s)), s), 1e-12);
        const QState hh = apply(Operator::hadamard(wires[0]), apply(Operator::hadamard(wires[0]), s));
        for (std::size_t k = 0; k < s.amplitudes.size(); ++k) {
            EXPECT_LE(std::abs(hh.vector()[k] - s.vector()[k]), 1e-12);
        }
        if (wires.size() >= 2) {
            EXPECT_NEAR(apply(Operator::cnot(wires[1], wires[0]), s).norm(), 1.0, 1e-12);
        }
    }
}

TEST(property, mirrors_are_exact) {
    Rng rng(107);
    for (int i = 0; i < kCases; ++i) {
        const auto wires = wires_for(rng);
        const QState s = random_state(rng, wires);
        EXPECT_EQ(apply(Operator::mc(wires[0]), s).vector(), s.vector());
        if (wires.size() >= 2) {
            EXPECT_EQ(apply(Operator::mb(wires[0], wires[1]), s).vector(), s.vector());
        }
    }
}

TEST(property, measurement_probabilities_sum_to_one) {
    Rng rng(108);
    for (int i = 0; i < kCases; ++i) {
        const auto wires = wires_for(rng);
        const QState s = random_state(rng, wires);
        const double p0 = std::pow(apply(Operator::m0(wires.back()), s).norm(), 2);
        const double p1 = std::pow(apply(Operator::m1(wires.back()), s).norm(), 2);
        EXPECT_NEAR(p0 + p1, 1.0, 1e-12);
    }
}

TEST(property, combine_parallel_is_symmetric) {
    Rng rng(109);
    for (int i = 0; i < kCases; ++i) {
        const auto wires = wires_for(rng);
        const QState a = random_state(rng, wires);
        const QState b = random_state(rng, wires);
        const auto ab = combine_parallel(a, b).vector();
        const auto ba = combine_parallel(b, a).vector();
        for (std::size_t k = 0; k < ab.size(); ++k) {
            EXPECT_LE(std::abs(ab[k] - ba[k]), 1e-15);
        }
    }
}

TEST(property, tensor_is_associative) {
    Rng rng(110);
    for (int i = 0; i < kCases; ++i) {
        const QState a = random_state(rng, {"A"});
        const QState b = random_state(rng, {"B"});
        const QState c = random_state(rng, {"C"});
        const auto l = tensor(tensor(a, b), c).vector();
        const auto r = tensor(a, tensor(b, c)).vector();
        for (std::size_t k = 0; k < l.size(); ++k) {
            EXPECT_LE(std::abs(l[k] - r[k]), 1e-15);
        }
    }
}

TEST(property, basic_cut_rejects_exactly_left_contexts) {
    Rng rng(111);
    std::uniform_int_distribution<int> count(0, 2);
    int contexted = 0;
    for (int i = 0; i < kCases; ++i) {
        const Formula a = random_formula(rng, 1);
        std::vector<Formula> delta;
        for (int k = count(rng); k > 0; --k) {
            delta.push_back(random_formula(rng, 1));
        }
        const std::vector<Formula> rhs{random_formula(rng, 1)};
        Sequent left{{}, {a}, std::nullopt, {}};
        Sequent right{delta, rhs, std::nullopt, {}};
        right.antecedent.push_back(a);
        Sequent conclusion{delta, rhs, std::nullopt, {}};
        if (std::bernoulli_distribution(0.2)(rng)) {
            conclusion.consequent.push_back(random_formula(rng, 0));
        }
        const std::vector<Formula> cut_formula{a};
        const Verdict basic = check_cut(left, right, conclusion, cut_formula, LogicMode::basic);
        const Verdict intu = check_cut(left, right, conclusion, cut_formula, LogicMode::intuitionistic_left);
        EXPECT_EQ(basic.ok(), intu.ok() && delta.empty());
        if (intu.ok() && !delta.empty()) {
            ++contexted;
            EXPECT_EQ(basic.code, ErrorCode::visibility_violation);
        }
    }
    EXPECT_GT(contexted, 50);
}

TEST(property, basic_mode_passes_are_intuitionistic_passes) {
    Rng rng(112);
    for (int i = 0; i < kCases; ++i) {
        const Derivation d = random_derivation(rng, 2);
        const CheckReport basic = check_derivation(d, LogicMode::basic);
        const CheckReport intu = check_derivation(d, LogicMode::intuitionistic_left);
        ASSERT_EQ(basic.per_node.size(), intu.per_node.size());
        for (std::size_t k = 0; k < basic.per_node.size(); ++k) {
            if (basic.per_node[k].verdict.ok()) {
                EXPECT_TRUE(intu.per_node[k].verdict.ok()) << render(d, RenderStyle::linear);
            }
        }
    }
    for (const auto &[file, text] : corpus_sources()) {
        for (const auto &t : parse_script(text).theorems) {
            EXPECT_TRUE(check_derivation(t.tree, LogicMode::intuitionistic_left).ok) << file;
        }
    }
}

TEST(property, epr_macro_matches_expansion) {
    int seen = 0;
    for (const auto &[file, text] : corpus_sources()) {
        for (const auto &t : parse_script(text).theorems) {
            visit(t.tree, [&](const Derivation &d) {
                if (d.rule != Rule::epr) {
                    return;
                }
                ++seen;
                EXPECT_EQ(check_node(d, LogicMode::basic).ok(), check_derivation(expand_epr(d), LogicMode::basic).ok)
                    << file;
                Derivation broken = d;
                broken.conclusion.consequent = {Formula::atom("A")};
                const bool expanded_ok = [&] {
                    try {
                        Derivation e = expand_epr(broken);
                        return check_derivation(e, LogicMode::basic).ok;
                    } catch (const Error &) {
                        return false;
                    }
                }();
                EXPECT_EQ(check_node(broken, LogicMode::basic).ok(), expanded_ok) << file;
            });
        }
    }
    EXPECT_GT(seen, 3);
}

TEST(property, forbidden_rules_are_unknown) {
    Rng rng(113);
    for (int i = 0; i < kCases; ++i) {
        const std::string text = forbidden_rule_script(rng);
        try {
            parse_script(text);
            ADD_FAILURE() << text;
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::unknown_rule) << text << e.what();
        }
    }
}

TEST(property, structural_deletions_are_rejected_with_spans) {
    for (const auto &[file, text] : corpus_sources()) {
        for (const Mutant &m : structural_deletions(text)) {
            try {
                parse_script(m.text);
                ADD_FAILURE() << file << ": deleting '" << m.removed << "' at " << m.offset << " still parses";
            } catch (const Error &e) {
                EXPECT_TRUE(e.span().known()) << file << " " << m.removed;
                EXPECT_LE(e.span().offset + e.span().length, m.text.size() + 1);
            }
        }
    }
}
