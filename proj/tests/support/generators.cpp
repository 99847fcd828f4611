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

#include "generators.hpp"

#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsc/script.hpp"

#ifndef QSC_CORPUS_DIR
#error "QSC_CORPUS_DIR must be defined"
#endif

namespace qsc::testing {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::size_t pick(Rng &rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

bool coin(Rng &rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Formula random_atom(Rng &rng) { return Formula::atom(kGenAtoms[pick(rng, kGenAtoms.size())], coin(rng)); }

std::optional<DegreePair> maybe_pair(Rng &rng) {
    if (coin(rng)) {
        return std::nullopt;
    }
    return DegreePair{random_degree(rng), random_degree(rng)};
}

Rule random_rule(Rng &rng) {
    static const std::vector<Rule> rules{Rule::and_form,     Rule::and_refl,     Rule::par_form,  Rule::neg_form,
                                         Rule::neg_refl,     Rule::cut,          Rule::at_form,   Rule::at_impl_refl,
                                         Rule::at_expl_refl, Rule::semi_distrib, Rule::q_split,   Rule::h_rule,
                                         Rule::h_inverse,    Rule::cnot,         Rule::epr,       Rule::parallel_join};
    return rules[pick(rng, rules.size())];
}

RuleParams random_params(Rng &rng, Rule rule) {
    RuleParams p;
    auto maybe_convention = [&] {
        if (coin(rng)) {
            p.convention = coin(rng) ? BellConvention::phi : BellConvention::psi;
        }
    };
    switch (rule) {
        case Rule::cut:
            for (std::size_t i = 0, n = 1 + pick(rng, 2); i < n; ++i) {
                p.formulas.push_back(random_formula(rng, 2));
            }
            break;
        case Rule::neg_form:
        case Rule::neg_refl:
            for (std::size_t i = 0, n = pick(rng, 3); i < n; ++i) {
                p.formulas.push_back(random_atom(rng));
            }
            break;
        case Rule::at_form:
        case Rule::at_impl_refl:
        case Rule::at_expl_refl:
        case Rule::at_axiom:
        case Rule::semi_distrib:
            maybe_convention();
            break;
        case Rule::cnot:
            if (coin(rng)) {
                static const CnotClause clauses[] = {CnotClause::a, CnotClause::b, CnotClause::a_prime,
                                                     CnotClause::b_prime};
                p.clause = clauses[pick(rng, 4)];
            }
            break;
        case Rule::parallel_join:
            p.join = coin(rng) ? Rule::and_form : Rule::at_form;
            if (*p.join == Rule::at_form) {
                maybe_convention();
            }
            break;
        default:
            break;
    }
    return p;
}

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Degree random_degree(Rng &rng) {
    switch (pick(rng, 5)) {
        case 0:
            return Degree::symbol(coin(rng) ? Symbol::alpha : Symbol::beta);
        case 1:
            return Degree(coin(rng) ? kInvSqrt2 : -kInvSqrt2);
        case 2:
            return Degree(Amplitude(std::uniform_real_distribution<double>(-2, 2)(rng),
                                    std::uniform_real_distribution<double>(-2, 2)(rng)));
        default:
            return Degree(std::uniform_real_distribution<double>(-1, 1)(rng));
    }
}

Formula random_formula(Rng &rng, int depth) {
    const std::size_t choice = depth <= 0 ? pick(rng, 3) : pick(rng, 7);
    switch (choice) {
        case 0:
        case 1:
            return random_atom(rng);
        case 2:
            if (coin(rng, 0.2)) {
                return Formula::null();
            }
            return Formula::qubit(QubitRef{kGenAtoms[pick(rng, kGenAtoms.size())], maybe_pair(rng)});
        case 3:
        case 4:
            return Formula::conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1), maybe_pair(rng));
        case 5:
            return Formula::par(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
        default:
            return Formula::ent(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    }
}

Sequent random_sequent(Rng &rng) {
    Sequent s;
    for (std::size_t i = 0, n = pick(rng, 3); i < n; ++i) {
        s.antecedent.push_back(random_formula(rng, 2));
    }
    for (std::size_t i = 0, n = pick(rng, 4); i < n; ++i) {
        s.consequent.push_back(random_formula(rng, 2));
    }
    if (coin(rng, 0.3)) {
        s.degree = random_degree(rng);
    }
    return s;
}

Derivation random_derivation(Rng &rng, int depth) {
    Derivation d;
    d.conclusion = random_sequent(rng);
    if (depth <= 0 || coin(rng, 0.25)) {
        static const Rule leaves[] = {Rule::premise, Rule::axiom, Rule::at_axiom};
        d.rule = leaves[pick(rng, 3)];
        d.params = random_params(rng, d.rule);
        return d;
    }
    d.rule = random_rule(rng);
    d.params = random_params(rng, d.rule);
    for (std::size_t i = 0, n = 1 + pick(rng, 3); i < n; ++i) {
        d.premises.push_back(random_derivation(rng, depth - 1));
    }
    return d;
}

QState random_state(Rng &rng, const std::vector<std::string> &wires) {
    std::normal_distribution<double> g;
    QState s{wires, std::vector<Amplitude>(std::size_t{1} << wires.size()), 1.0};
    for (auto &a : s.amplitudes) {
        a = Amplitude(g(rng), g(rng));
    }
    return s.renormalized().flattened();
}

std::string forbidden_rule_script(Rng &rng) {
    static const std::vector<std::string> names{"contraction", "weakening", "permutation"};
    const std::string bad = names[pick(rng, names.size())];
    const int steps = 1 + static_cast<int>(pick(rng, 5));
    std::string text = "atoms A B C D\ntheorem fuzz:\n";
    const int bad_step = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(steps)));
    for (int i = 1; i <= steps; ++i) {
        text += "  " + std::to_string(i) + ": " + to_string(random_sequent(rng));
        if (i == bad_step) {
            text += " by " + bad;
            if (coin(rng, 0.3)) {
                text += "[" + to_string(random_formula(rng, 1)) + "]";
            }
            text += "(";
            for (int j = 1; j < i; ++j) {
                if (coin(rng)) {
                    text += (text.back() == '(' ? "" : ", ") + std::to_string(j);
                }
            }
            text += ")\n";
        } else if (i == 1) {
            text += " premise\n";
        } else {
            text += " by andform(" + std::to_string(i - 1) + ")\n";
        }
    }
    return text + "qed\n";
}

std::vector<std::pair<std::string, std::string>> corpus_sources() {
    static const char *files[] = {"cut-destroys-cat-1.qsc", "cut-destroys-cat-0.qsc", "cut-parallel.qsc",
                                  "epr.qsc",                "epr-parallel.qsc",       "h-rule.qsc",
                                  "h-parallel.qsc",         "cnot-derivation.qsc",    "cnot-action.qsc",
                                  "cnot-parallel.qsc",      "ent.qsc",                "nogo.qsc",
                                  "tel.qsc"};
    std::vector<std::pair<std::string, std::string>> out;
    for (const char *f : files) {
        out.emplace_back(f, slurp(std::filesystem::path(QSC_CORPUS_DIR) / f));
    }
    return out;
}

std::vector<Mutant> structural_deletions(const std::string &src) {
    static const std::vector<std::string> keywords{"atoms", "theorem", "qed", "by", "premise"};
    std::vector<Mutant> out;
    auto emit = [&](std::size_t at, std::size_t len) {
        out.push_back(Mutant{src.substr(0, at) + " " + src.substr(at + len), at, src.substr(at, len)});
    };
    bool line_start = true;
    bool after_by = false;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            line_start = true;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (src.compare(i, 2, "//") == 0) {
            i = src.find('\n', i);
            i = i == std::string::npos ? src.size() : i;
            continue;
        }
        const bool first = line_start;
        line_start = false;
        if (src.compare(i, 2, "|-") == 0) {
            emit(i, 2);
            i += 2;
            continue;
        }
        if (std::string_view("(){}[],:&#@").find(c) != std::string_view::npos) {
            emit(i, 1);
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '.')) {
                ++j;
            }
            if (first) {
                emit(i, j - i);
            }
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
                ++j;
            }
            const std::string word = src.substr(i, j - i);
            bool keyword = false;
            for (const auto &k : keywords) {
                keyword = keyword || word == k;
            }
            if (keyword || after_by) {
                emit(i, j - i);
            }
            after_by = word == "by";
            i = j;
            continue;
        }
        ++i;
    }
    return out;
}

}  // namespace qsc::testing
