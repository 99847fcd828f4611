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

#include "qsc/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace qsc {

namespace {

const Amplitude kHalfRoot{1.0 / std::sqrt(2.0), 0.0};

std::string show(const Sequent &s) { return "'" + to_string(s) + "'"; }
std::string show(const Formula &f) { return "'" + to_string(f) + "'"; }

bool same_list(std::span<const Formula> a, std::span<const Formula> b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!equivalent(a[i], b[i])) {
            return false;
        }
    }
    return true;
}

bool same_optional_degree(const std::optional<Degree> &a, const std::optional<Degree> &b) {
    const Degree one(1.0);
    return same_degree(a.value_or(one), b.value_or(one));
}

Verdict mismatch(const Sequent &expected, const Sequent &stated) {
    return Verdict::fail(ErrorCode::conclusion_mismatch,
                         "conclusion " + show(stated) + " does not match expected " + show(expected));
}

Verdict compare_conclusion(const Sequent &expected, const Sequent &stated) {
    return equivalent(expected, stated) ? Verdict::pass() : mismatch(expected, stated);
}

/// The atom a qubit-like formula lives on: `Q_X`, `X & X^` or `X^ & X`.
std::optional<std::string> qubit_atom(const Formula &f) {
    if (f.is_qubit()) {
        return f.as_qubit().atom;
    }
    if (f.is_conj() && f.left().is_atom() && f.right().is_atom()) {
        const auto &l = f.left().as_atom();
        const auto &r = f.right().as_atom();
        if (l.name == r.name && l.negated != r.negated) {
            return l.name;
        }
    }
    return std::nullopt;
}

/// Degree a qubit-like formula assigns to its bit `negated ? 0 : 1`.
std::optional<Degree> branch_degree(const Formula &qubit_like, bool negated) {
    if (qubit_like.is_qubit()) {
        const auto &d = qubit_like.as_qubit().degrees;
        if (!d) {
            return std::nullopt;
        }
        return negated ? d->first : d->second;
    }
    const auto &d = qubit_like.degrees();
    if (!d) {
        return std::nullopt;
    }
    return qubit_like.left().as_atom().negated == negated ? d->first : d->second;
}

bool all_atoms(std::span<const Formula> fs) {
    return std::all_of(fs.begin(), fs.end(), [](const Formula &f) { return f.is_atom(); });
}

std::size_t arity_error_count(Rule rule, std::size_t n, bool *ok) {
    auto exactly = [&](std::size_t k) {
        *ok = n == k;
        return k;
    };
    switch (rule) {
        case Rule::premise:
        case Rule::axiom:
        case Rule::at_axiom:
            return exactly(0);
        case Rule::par_form:
        case Rule::neg_form:
        case Rule::neg_refl:
        case Rule::semi_distrib:
        case Rule::h_rule:
        case Rule::h_inverse:
        case Rule::cnot:
            return exactly(1);
        case Rule::and_form:
        case Rule::cut:
        case Rule::at_form:
        case Rule::at_expl_refl:
        case Rule::epr:
        case Rule::parallel_join:
            return exactly(2);
        case Rule::q_split:
            return exactly(3);
        case Rule::and_refl:
        case Rule::at_impl_refl:
            *ok = n == 1 || n == 2;
            return 2;
    }
    *ok = false;
    return 0;
}

// --- cut -------------------------------------------------------------------

/// Replaces the first occurrence of `cut` in `theta`, either as a whole
/// formula (spliced with `replacement`) or as a party of an @ (collapsed to the
/// single atom `replacement` must then be).
bool substitute_cut(std::vector<Formula> &theta, const Formula &cut, const std::vector<Formula> &replacement) {
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (equivalent(theta[i], cut)) {
            theta.erase(theta.begin() + static_cast<std::ptrdiff_t>(i));
            theta.insert(theta.begin() + static_cast<std::ptrdiff_t>(i), replacement.begin(), replacement.end());
            return true;
        }
    }
    if (replacement.size() != 1 || !replacement[0].is_atom()) {
        return false;
    }
    for (auto &f : theta) {
        if (!f.is_ent()) {
            continue;
        }
        if (equivalent(f.left(), cut)) {
            f = Formula::ent(replacement[0], f.right(), f.span());
            return true;
        }
        if (equivalent(f.right(), cut)) {
            f = Formula::ent(f.left(), replacement[0], f.span());
            return true;
        }
    }
    return false;
}

// --- @ helpers ---------------------------------------------------------------

struct AtomPair {
    Atom x;
    Atom y;
};

std::optional<AtomPair> atom_pair(const Sequent &s) {
    if (s.consequent.size() != 2 || !all_atoms(s.consequent)) {
        return std::nullopt;
    }
    return AtomPair{s.consequent[0].as_atom(), s.consequent[1].as_atom()};
}

BellConvention convention_of(const Atom &x, const Atom &y) {
    return x.negated == y.negated ? BellConvention::phi : BellConvention::psi;
}

Verdict check_at_form(std::span<const Sequent> premises, const Sequent &conclusion,
                      std::optional<BellConvention> convention, BellConvention *fired) {
    const Sequent &p = premises[0];
    const Sequent &q = premises[1];
    if (!same_list(p.antecedent, q.antecedent)) {
        return Verdict::fail(ErrorCode::context_mismatch, "@-formation premises have different contexts");
    }
    for (const Sequent *s : {&p, &q}) {
        if (s->consequent.size() > 2) {
            return Verdict::fail(ErrorCode::visibility_violation,
                                 "premise " + show(*s) + " carries a context on the right of the @ pair");
        }
    }
    auto pp = atom_pair(p);
    auto qp = atom_pair(q);
    if (!pp || !qp) {
        return Verdict::fail(ErrorCode::schema_mismatch, "@-formation needs two atoms on the right of each premise");
    }
    if (pp->x.name != qp->x.name || pp->y.name != qp->y.name || pp->x.name == pp->y.name ||
        pp->x.negated == qp->x.negated || pp->y.negated == qp->y.negated) {
        return Verdict::fail(ErrorCode::schema_mismatch,
                             "premises " + show(p) + " and " + show(q) + " are not complementary bit pairs");
    }
    const BellConvention conv = convention_of(pp->x, pp->y);
    if (convention && *convention != conv) {
        return Verdict::fail(ErrorCode::schema_mismatch, "premises fire the " + std::string(convention_name(conv)) +
                                                             " convention, not " +
                                                             std::string(convention_name(*convention)));
    }
    if (p.degree.has_value() != q.degree.has_value()) {
        return Verdict::fail(ErrorCode::degree_mismatch, "only one @-formation premise carries a degree");
    }
    if (conclusion.consequent.size() > 1) {
        return Verdict::fail(ErrorCode::visibility_violation, "conclusion carries a context on the right of the @");
    }
    const std::string &xn = pp->x.name;
    const std::string &yn = pp->y.name;
    std::vector<Formula> candidates;
    if (!p.degree) {
        candidates.push_back(Formula::ent(Formula::qubit(xn), Formula::qubit(yn)));
    } else {
        // Party X gets (degree where X is 0, degree where X is 1); Y likewise.
        const Degree &px = *p.degree;
        const Degree &qx = *q.degree;
        const DegreePair dx = pp->x.negated ? DegreePair{px, qx} : DegreePair{qx, px};
        const DegreePair dy = pp->y.negated ? DegreePair{px, qx} : DegreePair{qx, px};
        candidates.push_back(Formula::ent(Formula::qubit(QubitRef{xn, dx}), Formula::qubit(yn)));
        candidates.push_back(Formula::ent(Formula::qubit(xn), Formula::qubit(QubitRef{yn, dy})));
    }
    Sequent expected{p.antecedent, {candidates[0]}, std::nullopt, {}};
    if (conclusion.degree && !same_optional_degree(conclusion.degree, std::nullopt)) {
        return Verdict::fail(ErrorCode::degree_mismatch, "@-formation concludes without a turnstile degree");
    }
    if (!same_list(conclusion.antecedent, p.antecedent) || conclusion.consequent.size() != 1) {
        return mismatch(expected, conclusion);
    }
    for (const auto &c : candidates) {
        if (equivalent(conclusion.consequent[0], c)) {
            if (fired) {
                *fired = conv;
            }
            return Verdict::pass();
        }
    }
    return mismatch(expected, conclusion);
}

Verdict check_at_impl_refl(std::span<const Sequent> premises, const Sequent &conclusion,
                           std::optional<BellConvention> convention) {
    const Sequent &p = premises[0];
    if (p.consequent.size() > 1) {
        return Verdict::fail(ErrorCode::visibility_violation, "premise " + show(p) + " has a context beside the @");
    }
    if (p.consequent.size() != 1 || !p.consequent[0].is_ent()) {
        return Verdict::fail(ErrorCode::schema_mismatch, "premise " + show(p) + " does not assert an @");
    }
    const Formula ent = p.consequent[0];
    if (premises.size() == 1) {
        if (!ent.left().is_qubit() || !ent.right().is_qubit()) {
            return Verdict::fail(ErrorCode::schema_mismatch,
                                 show(ent) + " has a collapsed party; that step is semi-distributivity");
        }
        const auto &lq = ent.left().as_qubit();
        const auto &rq = ent.right().as_qubit();
        if (!same_list(conclusion.antecedent, p.antecedent)) {
            return Verdict::fail(ErrorCode::context_mismatch, "@-implicit reflection changed the context");
        }
        if (conclusion.consequent.size() != 2 || !all_atoms(conclusion.consequent)) {
            return Verdict::fail(ErrorCode::schema_mismatch, "@-implicit reflection concludes a pair of bits");
        }
        Atom a = conclusion.consequent[0].as_atom();
        Atom b = conclusion.consequent[1].as_atom();
        if (a.name == rq.atom && b.name == lq.atom) {
            std::swap(a, b);
        }
        if (a.name != lq.atom || b.name != rq.atom) {
            return Verdict::fail(ErrorCode::schema_mismatch,
                                 "bits of " + show(conclusion) + " are not the parties of " + show(ent));
        }
        const BellConvention want = convention.value_or(BellConvention::phi);
        if (convention_of(a, b) != want) {
            return Verdict::fail(ErrorCode::schema_mismatch,
                                 show(conclusion) + " is not a " + std::string(convention_name(want)) + " branch");
        }
        // A degreed party weighs the branch it is reflected into.
        std::optional<Degree> weight;
        if (lq.degrees) {
            weight = a.negated ? lq.degrees->first : lq.degrees->second;
        } else if (rq.degrees) {
            weight = b.negated ? rq.degrees->first : rq.degrees->second;
        }
        bool ok = true;
        auto expected_degree = multiply_degrees(p.degree, weight, &ok);
        if (!ok || !same_optional_degree(expected_degree, conclusion.degree)) {
            return Verdict::fail(ErrorCode::degree_mismatch, "branch degree of " + show(conclusion) + " is wrong");
        }
        return Verdict::pass();
    }
    // Two premises: a measurement Q_X |- X (or X^) collapses one party.
    const Sequent &m = premises[1];
    if (m.antecedent.size() != 1 || m.consequent.size() != 1 || !m.consequent[0].is_atom()) {
        return Verdict::fail(ErrorCode::schema_mismatch, show(m) + " is not a single-qubit measurement");
    }
    const Formula &measured = m.antecedent[0];
    const Atom bit = m.consequent[0].as_atom();
    auto on = qubit_atom(measured);
    if (!on || *on != bit.name) {
        return Verdict::fail(ErrorCode::schema_mismatch, show(m) + " does not measure a qubit into its own bit");
    }
    Formula collapsed;
    if (ent.left().is_qubit() && equivalent(ent.left(), measured)) {
        collapsed = Formula::ent(m.consequent[0], ent.right());
    } else if (ent.right().is_qubit() && equivalent(ent.right(), measured)) {
        collapsed = Formula::ent(ent.left(), m.consequent[0]);
    } else {
        return Verdict::fail(ErrorCode::schema_mismatch, show(measured) + " is not a party of " + show(ent));
    }
    bool ok = true;
    auto degree = multiply_degrees(p.degree, m.degree, &ok);
    if (!ok) {
        return Verdict::fail(ErrorCode::degree_mismatch, "degrees of the premises cannot be combined");
    }
    return compare_conclusion(Sequent{p.antecedent, {collapsed}, degree, {}}, conclusion);
}

Verdict check_at_expl_refl(std::span<const Sequent> premises, const Sequent &conclusion, LogicMode mode,
                           std::optional<BellConvention> convention) {
    const Sequent &p = premises[0];
    const Sequent &q = premises[1];
    for (const Sequent *s : {&p, &q}) {
        if (s->antecedent.size() > 1) {
            return Verdict::fail(ErrorCode::visibility_violation, show(*s) + " has an active context on the left");
        }
        if (s->antecedent.size() != 1 || !s->antecedent[0].is_atom()) {
            return Verdict::fail(ErrorCode::schema_mismatch, show(*s) + " must assume a single bit");
        }
    }
    (void)mode;
    const Atom x = p.antecedent[0].as_atom();
    const Atom y = q.antecedent[0].as_atom();
    if (x.name == y.name) {
        return Verdict::fail(ErrorCode::schema_mismatch, "@-explicit reflection needs two distinct qubits");
    }
    const BellConvention want = convention.value_or(BellConvention::phi);
    if (convention_of(x, y) != want) {
        return Verdict::fail(ErrorCode::schema_mismatch, "assumed bits do not form a " +
                                                             std::string(convention_name(want)) + " branch");
    }
    std::vector<Formula> right = p.consequent;
    right.insert(right.end(), q.consequent.begin(), q.consequent.end());
    bool ok = true;
    auto degree = multiply_degrees(p.degree, q.degree, &ok);
    if (!ok) {
        return Verdict::fail(ErrorCode::degree_mismatch, "degrees of the premises cannot be combined");
    }
    Sequent expected{{Formula::ent(Formula::qubit(x.name), Formula::qubit(y.name))}, right, degree, {}};
    return compare_conclusion(expected, conclusion);
}

Verdict check_at_axiom(const Sequent &conclusion, std::optional<BellConvention> convention) {
    if (conclusion.antecedent.size() != 1 || !conclusion.antecedent[0].is_ent()) {
        return Verdict::fail(ErrorCode::schema_mismatch, show(conclusion) + " does not assume an @");
    }
    const Formula ent = conclusion.antecedent[0];
    if (!ent.left().is_qubit() || !ent.right().is_qubit()) {
        return Verdict::fail(ErrorCode::schema_mismatch, "@-axioms relate two qubits");
    }
    auto pair = atom_pair(conclusion);
    if (!pair) {
        return Verdict::fail(ErrorCode::schema_mismatch, "@-axioms conclude a pair of bits");
    }
    Atom a = pair->x;
    Atom b = pair->y;
    const std::string &ln = ent.left().as_qubit().atom;
    const std::string &rn = ent.right().as_qubit().atom;
    if (a.name == rn && b.name == ln) {
        std::swap(a, b);
    }
    if (a.name != ln || b.name != rn) {
        return Verdict::fail(ErrorCode::schema_mismatch, "bits are not the parties of " + show(ent));
    }
    const BellConvention want = convention.value_or(BellConvention::phi);
    if (convention_of(a, b) != want) {
        return Verdict::fail(ErrorCode::schema_mismatch,
                             show(conclusion) + " is not a " + std::string(convention_name(want)) + " branch");
    }
    return Verdict::pass();
}

// --- rewrites ----------------------------------------------------------------

Verdict check_semi_distrib(const Sequent &p, const Sequent &conclusion, std::optional<BellConvention> convention) {
    const BellConvention conv = convention.value_or(BellConvention::phi);
    bool saw_full = false;
    for (std::size_t i = 0; i < p.consequent.size(); ++i) {
        const Formula &f = p.consequent[i];
        if (!f.is_ent()) {
            continue;
        }
        const Formula l = f.left();
        const Formula r = f.right();
        std::vector<Formula> pair;
        if (l.is_atom() && r.is_qubit() && r.as_qubit().atom != l.as_atom().name) {
            const bool neg = conv == BellConvention::phi ? l.as_atom().negated : !l.as_atom().negated;
            pair = {l, Formula::atom(r.as_qubit().atom, neg)};
        } else if (r.is_atom() && l.is_qubit() && l.as_qubit().atom != r.as_atom().name) {
            const bool neg = conv == BellConvention::phi ? r.as_atom().negated : !r.as_atom().negated;
            pair = {Formula::atom(l.as_qubit().atom, neg), r};
        } else {
            saw_full = saw_full || (l.is_qubit() && r.is_qubit());
            continue;
        }
        Sequent expected = p;
        expected.span = {};
        expected.consequent.erase(expected.consequent.begin() + static_cast<std::ptrdiff_t>(i));
        expected.consequent.insert(expected.consequent.begin() + static_cast<std::ptrdiff_t>(i), pair.begin(),
                                   pair.end());
        return compare_conclusion(expected, conclusion);
    }
    if (saw_full) {
        return Verdict::fail(ErrorCode::schema_mismatch,
                             "semi-distributivity needs an @ with one collapsed party, " + show(p) + " has none");
    }
    return Verdict::fail(ErrorCode::schema_mismatch, show(p) + " has no @ to distribute");
}

Verdict check_q_split(std::span<const Sequent> premises, const Sequent &conclusion) {
    const Sequent &p = premises[0];
    const Sequent *zero = nullptr;
    const Sequent *one = nullptr;
    for (const Sequent *m : {&premises[1], &premises[2]}) {
        if (m->antecedent.size() != 1 || m->consequent.size() != 1 || !m->consequent[0].is_atom()) {
            return Verdict::fail(ErrorCode::schema_mismatch, show(*m) + " is not a &-reflection axiom");
        }
        (m->consequent[0].as_atom().negated ? zero : one) = m;
    }
    if (zero == nullptr || one == nullptr) {
        return Verdict::fail(ErrorCode::schema_mismatch, "&-reflection axioms must cover both bits");
    }
    const Formula &q = one->antecedent[0];
    auto on = qubit_atom(q);
    if (!equivalent(q, zero->antecedent[0]) || !on || *on != one->consequent[0].as_atom().name ||
        *on != zero->consequent[0].as_atom().name) {
        return Verdict::fail(ErrorCode::schema_mismatch, "&-reflection axioms do not reflect the same qubit");
    }
    for (std::size_t i = 0; i < p.consequent.size(); ++i) {
        if (!equivalent(p.consequent[i], q)) {
            continue;
        }
        for (const Sequent *branch : {one, zero}) {
            Sequent expected = p;
            expected.span = {};
            expected.consequent[i] = branch->consequent[0];
            bool ok = true;
            auto w = branch->degree ? branch->degree : branch_degree(q, branch == zero);
            expected.degree = multiply_degrees(p.degree, w, &ok);
            if (ok && equivalent(expected, conclusion)) {
                return Verdict::pass();
            }
        }
        Sequent expected = p;
        expected.consequent[i] = one->consequent[0];
        return mismatch(expected, conclusion);
    }
    return Verdict::fail(ErrorCode::schema_mismatch, show(q) + " does not occur on the right of " + show(p));
}

// --- & -----------------------------------------------------------------------

Verdict check_and_form(std::span<const Sequent> premises, const Sequent &conclusion) {
    const Sequent &p = premises[0];
    const Sequent &q = premises[1];
    if (!same_list(p.antecedent, q.antecedent)) {
        return Verdict::fail(ErrorCode::context_mismatch, "&-formation premises " + show(p) + " and " + show(q) +
                                                              " have different contexts");
    }
    if (p.degree.has_value() != q.degree.has_value()) {
        return Verdict::fail(ErrorCode::degree_mismatch, "only one &-formation premise carries a degree");
    }
    if (p.consequent.size() != q.consequent.size() || p.consequent.empty()) {
        return Verdict::fail(ErrorCode::schema_mismatch, "&-formation premises assert lists of different shapes");
    }
    std::vector<std::size_t> differing;
    for (std::size_t i = 0; i < p.consequent.size(); ++i) {
        if (!equivalent(p.consequent[i], q.consequent[i])) {
            differing.push_back(i);
        }
    }
    if (differing.size() > 1) {
        return Verdict::fail(ErrorCode::schema_mismatch, "&-formation premises differ in more than one place");
    }
    std::vector<std::size_t> positions = differing;
    if (positions.empty()) {
        for (std::size_t i = 0; i < p.consequent.size(); ++i) {
            positions.push_back(i);
        }
    }
    std::optional<DegreePair> degrees;
    if (p.degree) {
        degrees = DegreePair{*p.degree, *q.degree};
    }
    Sequent expected;
    for (std::size_t i : positions) {
        expected = Sequent{p.antecedent, p.consequent, std::nullopt, {}};
        expected.consequent[i] = Formula::conj(p.consequent[i], q.consequent[i], degrees);
        if (equivalent(expected, conclusion)) {
            return Verdict::pass();
        }
    }
    // Right shape, wrong degrees.
    for (std::size_t i : positions) {
        if (conclusion.consequent.size() != p.consequent.size() || !conclusion.consequent[i].is_conj()) {
            continue;
        }
        Sequent shape{p.antecedent, p.consequent, std::nullopt, {}};
        shape.consequent[i] = Formula::conj(p.consequent[i], q.consequent[i], conclusion.consequent[i].degrees());
        if (equivalent(shape, conclusion)) {
            return Verdict::fail(ErrorCode::degree_mismatch, "&-formation degrees of " + show(conclusion) +
                                                                 " differ from the premises' upper-fixes");
        }
    }
    return mismatch(expected, conclusion);
}

Verdict check_and_refl(std::span<const Sequent> premises, const Sequent &conclusion, LogicMode mode) {
    const Sequent &p = premises[0];
    if (premises.size() == 2) {
        const Sequent &q = premises[1];
        if (p.antecedent.empty() || q.antecedent.empty()) {
            return Verdict::fail(ErrorCode::schema_mismatch, "&-reflection on the left needs assumptions");
        }
        std::span<const Formula> gp(p.antecedent.data(), p.antecedent.size() - 1);
        std::span<const Formula> gq(q.antecedent.data(), q.antecedent.size() - 1);
        if (!same_list(gp, gq) || !same_list(p.consequent, q.consequent) ||
            !same_optional_degree(p.degree, q.degree)) {
            return Verdict::fail(ErrorCode::context_mismatch, "&-reflection premises have different contexts");
        }
        if (mode == LogicMode::basic && !gp.empty()) {
            return Verdict::fail(ErrorCode::visibility_violation,
                                 "context on the left of the &-reflection is not visible in basic logic");
        }
        Sequent expected = p;
        expected.span = {};
        expected.antecedent.back() = Formula::conj(p.antecedent.back(), q.antecedent.back());
        return compare_conclusion(expected, conclusion);
    }
    // Right-hand reflection: |- X a&b Y yields |-{a} X and |-{b} Y.
    if (p.consequent.size() == 1 && same_list(p.antecedent, conclusion.antecedent) &&
        (p.consequent[0].is_conj() || p.consequent[0].is_qubit())) {
        Formula c = p.consequent[0];
        if (c.is_qubit()) {
            const auto &qr = c.as_qubit();
            c = Formula::conj(Formula::atom(qr.atom, true), Formula::atom(qr.atom, false), qr.degrees);
        }
        if (conclusion.consequent.size() != 1) {
            return Verdict::fail(ErrorCode::schema_mismatch, "&-reflection on the right concludes one conjunct");
        }
        const auto &d = c.degrees();
        for (int side = 0; side < 2; ++side) {
            const Formula conjunct = side == 0 ? c.left() : c.right();
            if (!equivalent(conjunct, conclusion.consequent[0])) {
                continue;
            }
            std::optional<Degree> w;
            if (d) {
                w = side == 0 ? d->first : d->second;
            }
            bool ok = true;
            auto expected = multiply_degrees(p.degree, w, &ok);
            if (ok && same_optional_degree(expected, conclusion.degree)) {
                return Verdict::pass();
            }
            return Verdict::fail(ErrorCode::degree_mismatch,
                                 "reflected conjunct " + show(conjunct) + " carries the wrong degree");
        }
        return Verdict::fail(ErrorCode::schema_mismatch,
                             show(conclusion.consequent[0]) + " is not a conjunct of " + show(p.consequent[0]));
    }
    // Left-hand reflection with one premise: X |- D yields X & X^ |- D.
    if (p.antecedent.empty()) {
        return Verdict::fail(ErrorCode::schema_mismatch, "&-reflection premise " + show(p) + " has nothing to reflect");
    }
    if (mode == LogicMode::basic && p.antecedent.size() > 1) {
        return Verdict::fail(ErrorCode::visibility_violation,
                             "context on the left of the &-reflection is not visible in basic logic");
    }
    const Formula &x = p.antecedent.back();
    if (!x.is_atom()) {
        return Verdict::fail(ErrorCode::schema_mismatch, "&-reflection replaces a bit by its qubit");
    }
    Sequent expected = p;
    expected.span = {};
    expected.antecedent.back() = Formula::conj(x, negate(x));
    return compare_conclusion(expected, conclusion);
}

// --- structural ----------------------------------------------------------------

Formula cat_state(const std::string &name, bool plus) {
    return Formula::conj(Formula::atom(name, true), Formula::atom(name, false),
                         DegreePair{Degree(kHalfRoot), Degree(plus ? kHalfRoot : -kHalfRoot)});
}

bool is_bit_conj(const Formula &f) {
    if (!f.is_conj() || !f.left().is_atom() || !f.right().is_atom()) {
        return false;
    }
    return f.left().as_atom().name == f.right().as_atom().name &&
           f.left().as_atom().negated != f.right().as_atom().negated;
}

Verdict check_hadamard(Rule rule, const Sequent &p, const Sequent &conclusion) {
    if (p.consequent.size() != 1 || p.degree) {
        return Verdict::fail(ErrorCode::schema_mismatch, "the H-rules act on a single undegreed assertion");
    }
    const Formula &f = p.consequent[0];
    Sequent expected{p.antecedent, {}, std::nullopt, {}};
    if (rule == Rule::h_rule) {
        if (!f.is_atom()) {
            return Verdict::fail(ErrorCode::schema_mismatch, "the H-rule takes a bit, not " + show(f));
        }
        expected.consequent.push_back(cat_state(f.as_atom().name, f.as_atom().negated));
        if (equivalent(expected, conclusion)) {
            return Verdict::pass();
        }
        if (conclusion.consequent.size() == 1 && is_bit_conj(conclusion.consequent[0]) &&
            atom_names(conclusion.consequent[0]).front() == f.as_atom().name) {
            return Verdict::fail(ErrorCode::wrong_degrees, "H maps " + show(p) + " to " + show(expected));
        }
        return mismatch(expected, conclusion);
    }
    auto on = qubit_atom(f);
    if (!on) {
        return Verdict::fail(ErrorCode::schema_mismatch, "H^-1 takes a cat state, not " + show(f));
    }
    for (bool plus : {true, false}) {
        if (equivalent(f, cat_state(*on, plus))) {
            expected.consequent.push_back(Formula::atom(*on, plus));
            return compare_conclusion(expected, conclusion);
        }
    }
    return Verdict::fail(ErrorCode::wrong_degrees, show(f) + " is not one of the two cat states");
}

Verdict check_cnot(const Sequent &p, const Sequent &conclusion, std::optional<CnotClause> clause) {
    auto pair = atom_pair(p);
    if (!pair || pair->x.name == pair->y.name) {
        return Verdict::fail(ErrorCode::schema_mismatch, "CNOT acts on a control bit followed by a target bit");
    }
    const bool control_one = !pair->x.negated;
    const bool target_one = !pair->y.negated;
    const CnotClause fired = control_one ? (target_one ? CnotClause::a : CnotClause::a_prime)
                                         : (target_one ? CnotClause::b : CnotClause::b_prime);
    if (clause && *clause != fired) {
        return Verdict::fail(ErrorCode::schema_mismatch, "clause (" + std::string(clause_name(*clause)) +
                                                             ") does not apply; the premise fires (" +
                                                             std::string(clause_name(fired)) + ")");
    }
    Sequent expected = p;
    expected.span = {};
    expected.consequent[1] = Formula::atom(pair->y.name, control_one ? !pair->y.negated : pair->y.negated);
    return compare_conclusion(expected, conclusion);
}

// --- macros ------------------------------------------------------------------

struct EprSteps {
    Sequent collapsed;   // Γ |- X @ Q_Y
    Sequent distributed; // Γ |- X, Y
};

std::optional<EprSteps> epr_steps(std::span<const Sequent> premises, Verdict *why) {
    const Sequent &p = premises[0];
    const Sequent &m = premises[1];
    if (p.consequent.size() != 1 || !p.consequent[0].is_ent()) {
        *why = Verdict::fail(ErrorCode::schema_mismatch, "EPR needs an entangled premise, " + show(p) + " is not");
        return std::nullopt;
    }
    if (m.antecedent.size() != 1 || m.consequent.size() != 1 || !m.consequent[0].is_atom()) {
        *why = Verdict::fail(ErrorCode::schema_mismatch, show(m) + " is not a single-qubit measurement");
        return std::nullopt;
    }
    const Formula ent = p.consequent[0];
    const Formula bit = m.consequent[0];
    Formula collapsed;
    if (equivalent(ent.left(), m.antecedent[0])) {
        collapsed = Formula::ent(bit, ent.right());
    } else if (equivalent(ent.right(), m.antecedent[0])) {
        collapsed = Formula::ent(ent.left(), bit);
    } else {
        *why = Verdict::fail(ErrorCode::schema_mismatch, show(m.antecedent[0]) + " is not a party of " + show(ent));
        return std::nullopt;
    }
    bool ok = true;
    auto degree = multiply_degrees(p.degree, m.degree, &ok);
    EprSteps steps;
    steps.collapsed = Sequent{p.antecedent, {collapsed}, degree, {}};
    std::vector<Formula> pair;
    if (collapsed.left().is_atom() && collapsed.right().is_qubit()) {
        pair = {collapsed.left(), Formula::atom(collapsed.right().as_qubit().atom, bit.as_atom().negated)};
    } else if (collapsed.right().is_atom() && collapsed.left().is_qubit()) {
        pair = {Formula::atom(collapsed.left().as_qubit().atom, bit.as_atom().negated), collapsed.right()};
    } else {
        *why = Verdict::fail(ErrorCode::schema_mismatch, show(ent) + " is not an @ of two qubits");
        return std::nullopt;
    }
    steps.distributed = Sequent{p.antecedent, pair, degree, {}};
    return steps;
}

Verdict prefix(const std::string &step, Verdict v) {
    if (!v.ok()) {
        v.message = "EPR expansion, " + step + ": " + v.message;
    }
    return v;
}

bool check_tree(const Derivation &node, LogicMode mode, const std::string &path, CheckReport &report) {
    bool subtree_ok = true;
    std::string failed_child;
    for (std::size_t i = 0; i < node.premises.size(); ++i) {
        const std::string here = child_path(path, node.premises[i], i);
        if (!check_tree(node.premises[i], mode, here, report) && subtree_ok) {
            subtree_ok = false;
            failed_child = here;
        }
    }
    Verdict v;
    if (node.rule == Rule::parallel_join && !subtree_ok) {
        v = Verdict::fail(ErrorCode::branch_failure, "branch " + failed_child + " does not check");
    } else {
        v = check_node(node, mode);
    }
    const bool ok = v.ok();
    report.per_node.push_back(NodeVerdict{path, node.rule, std::move(v)});
    if (!ok) {
        report.ok = false;
    }
    return ok && subtree_ok;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public checks

const NodeVerdict *CheckReport::first_failure() const {
    for (const auto &n : per_node) {
        if (!n.verdict.ok()) {
            return &n;
        }
    }
    return nullptr;
}

Verdict check_cut(const Sequent &left_premise, const Sequent &right_premise, const Sequent &conclusion,
                  std::span<const Formula> cut_formulas, LogicMode mode) {
    if (cut_formulas.empty()) {
        return Verdict::fail(ErrorCode::schema_mismatch, "a cut names its cut formula");
    }
    const auto &ante = right_premise.antecedent;
    if (ante.size() < cut_formulas.size() ||
        !same_list(std::span<const Formula>(ante).subspan(ante.size() - cut_formulas.size()), cut_formulas)) {
        return Verdict::fail(ErrorCode::cut_formula_mismatch,
                             "right premise " + show(right_premise) + " does not assume the cut formula");
    }
    const std::vector<Formula> delta(ante.begin(), ante.end() - static_cast<std::ptrdiff_t>(cut_formulas.size()));
    if (mode == LogicMode::basic && !delta.empty()) {
        return Verdict::fail(ErrorCode::visibility_violation,
                             "active context beside the cut formula in " + show(right_premise));
    }
    std::vector<Formula> theta = left_premise.consequent;
    if (!substitute_cut(theta, cut_formulas[0], right_premise.consequent)) {
        return Verdict::fail(ErrorCode::cut_formula_mismatch,
                             "left premise " + show(left_premise) + " does not assert " + show(cut_formulas[0]));
    }
    for (std::size_t k = 1; k < cut_formulas.size(); ++k) {
        auto it = std::find_if(theta.begin(), theta.end(),
                               [&](const Formula &f) { return equivalent(f, cut_formulas[k]); });
        if (it == theta.end()) {
            return Verdict::fail(ErrorCode::cut_formula_mismatch,
                                 "left premise " + show(left_premise) + " does not assert " + show(cut_formulas[k]));
        }
        theta.erase(it);
    }
    bool ok = true;
    auto degree = multiply_degrees(left_premise.degree, right_premise.degree, &ok);
    if (!ok) {
        return Verdict::fail(ErrorCode::degree_mismatch, "degrees of the cut premises cannot be combined");
    }
    std::vector<Formula> gamma = left_premise.antecedent;
    gamma.insert(gamma.end(), delta.begin(), delta.end());
    return compare_conclusion(Sequent{gamma, theta, degree, {}}, conclusion);
}

Verdict check_and(Rule rule, std::span<const Sequent> premises, const Sequent &conclusion, LogicMode mode) {
    if (rule == Rule::and_form) {
        if (premises.size() != 2) {
            return Verdict::fail(ErrorCode::branch_failure, "&-formation takes two premises");
        }
        return check_and_form(premises, conclusion);
    }
    if (rule == Rule::and_refl) {
        if (premises.empty() || premises.size() > 2) {
            return Verdict::fail(ErrorCode::branch_failure, "&-reflection takes one or two premises");
        }
        return check_and_refl(premises, conclusion, mode);
    }
    return Verdict::fail(ErrorCode::schema_mismatch, "not a & rule");
}

Verdict check_at(Rule rule, std::span<const Sequent> premises, const Sequent &conclusion, LogicMode mode,
                 std::optional<BellConvention> convention, BellConvention *fired) {
    switch (rule) {
        case Rule::at_form:
            if (premises.size() != 2) {
                return Verdict::fail(ErrorCode::branch_failure, "@-formation takes two premises");
            }
            return check_at_form(premises, conclusion, convention, fired);
        case Rule::at_impl_refl:
            if (premises.empty() || premises.size() > 2) {
                return Verdict::fail(ErrorCode::branch_failure, "@-implicit reflection takes one or two premises");
            }
            return check_at_impl_refl(premises, conclusion, convention);
        case Rule::at_expl_refl:
            if (premises.size() != 2) {
                return Verdict::fail(ErrorCode::branch_failure, "@-explicit reflection takes two premises");
            }
            return check_at_expl_refl(premises, conclusion, mode, convention);
        case Rule::at_axiom:
            if (!premises.empty()) {
                return Verdict::fail(ErrorCode::branch_failure, "@-axioms take no premises");
            }
            return check_at_axiom(conclusion, convention);
        default:
            return Verdict::fail(ErrorCode::schema_mismatch, "not an @ rule");
    }
}

Verdict check_rewrite(Rule rule, std::span<const Sequent> premises, const Sequent &conclusion,
                      std::optional<BellConvention> convention) {
    if (rule == Rule::semi_distrib) {
        if (premises.size() != 1) {
            return Verdict::fail(ErrorCode::branch_failure, "semi-distributivity takes one premise");
        }
        return check_semi_distrib(premises[0], conclusion, convention);
    }
    if (rule == Rule::q_split) {
        if (premises.size() != 3) {
            return Verdict::fail(ErrorCode::branch_failure,
                                 "the qubit split takes the assertion and both &-reflection axioms");
        }
        return check_q_split(premises, conclusion);
    }
    return Verdict::fail(ErrorCode::schema_mismatch, "not a rewrite rule");
}

Verdict check_structural(Rule rule, const Sequent &premise, const Sequent &conclusion,
                         std::optional<CnotClause> clause) {
    if (!same_list(premise.antecedent, conclusion.antecedent)) {
        return Verdict::fail(ErrorCode::context_mismatch, "structural rules leave the assumptions alone");
    }
    switch (rule) {
        case Rule::h_rule:
        case Rule::h_inverse:
            return check_hadamard(rule, premise, conclusion);
        case Rule::cnot:
            return check_cnot(premise, conclusion, clause);
        default:
            return Verdict::fail(ErrorCode::schema_mismatch, "not a structural rule");
    }
}

Verdict check_neg(Rule rule, const Sequent &premise, const Sequent &conclusion, std::span<const Formula> active) {
    if (rule != Rule::neg_form && rule != Rule::neg_refl) {
        return Verdict::fail(ErrorCode::schema_mismatch, "not a negation rule");
    }
    const bool form = rule == Rule::neg_form;
    const auto &from = form ? premise.antecedent : premise.consequent;
    const auto &kept_side = form ? conclusion.antecedent : conclusion.consequent;
    if (kept_side.size() >= from.size()) {
        return Verdict::fail(ErrorCode::schema_mismatch, "nothing crosses the turnstile");
    }
    // neg_form moves the tail of the assumptions right; neg_refl moves the head
    // of the assertions left. Passive atoms cross unchanged.
    std::vector<Formula> moving;
    std::vector<Formula> staying;
    const std::size_t n_move = from.size() - kept_side.size();
    if (form) {
        staying.assign(from.begin(), from.end() - static_cast<std::ptrdiff_t>(n_move));
        moving.assign(from.end() - static_cast<std::ptrdiff_t>(n_move), from.end());
    } else {
        moving.assign(from.begin(), from.begin() + static_cast<std::ptrdiff_t>(n_move));
        staying.assign(from.begin() + static_cast<std::ptrdiff_t>(n_move), from.end());
    }
    if (!all_atoms(moving)) {
        return Verdict::fail(ErrorCode::schema_mismatch, "negation rules move bits only");
    }
    std::vector<bool> flip(moving.size(), false);
    if (active.empty()) {
        flip[form ? moving.size() - 1 : 0] = true;
    } else {
        for (const auto &a : active) {
            bool found = false;
            for (std::size_t i = 0; i < moving.size() && !found; ++i) {
                if (!flip[i] && equivalent(moving[i], a)) {
                    flip[i] = found = true;
                }
            }
            if (!found) {
                return Verdict::fail(ErrorCode::schema_mismatch, show(a) + " does not cross the turnstile");
            }
        }
    }
    for (std::size_t i = 0; i < moving.size(); ++i) {
        if (flip[i]) {
            moving[i] = negate(moving[i]);
        }
    }
    Sequent expected;
    expected.degree = premise.degree;
    if (form) {
        expected.antecedent = staying;
        expected.consequent = moving;
        expected.consequent.insert(expected.consequent.end(), premise.consequent.begin(), premise.consequent.end());
    } else {
        expected.antecedent = premise.antecedent;
        expected.antecedent.insert(expected.antecedent.end(), moving.begin(), moving.end());
        expected.consequent = staying;
    }
    return compare_conclusion(expected, conclusion);
}

Verdict check_par_form(const Sequent &premise, const Sequent &conclusion) {
    if (premise.consequent.size() < 2) {
        return Verdict::fail(ErrorCode::schema_mismatch, "#-formation joins two assertions");
    }
    Sequent expected;
    for (std::size_t i = 0; i + 1 < premise.consequent.size(); ++i) {
        expected = premise;
        expected.span = {};
        expected.consequent[i] = Formula::par(premise.consequent[i], premise.consequent[i + 1]);
        expected.consequent.erase(expected.consequent.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        if (equivalent(expected, conclusion)) {
            return Verdict::pass();
        }
    }
    return mismatch(expected, conclusion);
}

Verdict check_axiom(const Sequent &s) {
    if (s.antecedent.size() != 1 || s.consequent.size() != 1) {
        return Verdict::fail(ErrorCode::schema_mismatch, show(s) + " is not an axiom");
    }
    const Formula &l = s.antecedent[0];
    const Formula &r = s.consequent[0];
    if (equivalent(l, r) && !s.degree) {
        return Verdict::pass();
    }
    auto on = qubit_atom(l);
    if (on && r.is_atom() && r.as_atom().name == *on) {
        auto w = branch_degree(l, r.as_atom().negated);
        if (!s.degree || (w && same_degree(*s.degree, *w))) {
            return Verdict::pass();
        }
        return Verdict::fail(ErrorCode::degree_mismatch, "&-reflection axiom " + show(s) + " has the wrong degree");
    }
    return Verdict::fail(ErrorCode::schema_mismatch, show(s) + " is not an axiom");
}

Verdict check_epr(std::span<const Sequent> premises, const Sequent &conclusion, LogicMode mode) {
    if (premises.size() != 2) {
        return Verdict::fail(ErrorCode::branch_failure, "EPR takes the entangled assertion and a measurement");
    }
    Verdict why;
    auto steps = epr_steps(premises, &why);
    if (!steps) {
        return why;
    }
    Verdict v = prefix("@-implicit reflection", check_at(Rule::at_impl_refl, premises, steps->collapsed, mode));
    if (!v.ok()) {
        return v;
    }
    const Sequent collapsed[] = {steps->collapsed};
    v = prefix("semi-distributivity", check_rewrite(Rule::semi_distrib, collapsed, steps->distributed));
    if (!v.ok()) {
        return v;
    }
    return prefix("#-formation", check_par_form(steps->distributed, conclusion));
}

Derivation expand_epr(const Derivation &epr_node) {
    if (epr_node.premises.size() != 2) {
        throw Error(ErrorCode::schema_mismatch, "EPR takes two premises");
    }
    const Sequent premises[] = {epr_node.premises[0].conclusion, epr_node.premises[1].conclusion};
    Verdict why;
    auto steps = epr_steps(premises, &why);
    if (!steps) {
        throw Error(why.code, why.message);
    }
    Derivation refl{Rule::at_impl_refl, {}, {epr_node.premises[0], epr_node.premises[1]}, steps->collapsed, "", {}};
    Derivation distrib{Rule::semi_distrib, {}, {std::move(refl)}, steps->distributed, "", {}};
    return Derivation{Rule::par_form, {}, {std::move(distrib)}, epr_node.conclusion, epr_node.label, epr_node.span};
}

Verdict check_parallel(const Derivation &branch_left, const Derivation &branch_right, Rule join,
                       const Sequent &conclusion, LogicMode mode, std::optional<BellConvention> convention) {
    if (join != Rule::and_form && join != Rule::at_form) {
        return Verdict::fail(ErrorCode::join_mismatch, "branches join by &-formation or @-formation only");
    }
    int index = 0;
    for (const Derivation *branch : {&branch_left, &branch_right}) {
        CheckReport r = check_derivation(*branch, mode);
        if (const NodeVerdict *bad = r.first_failure()) {
            return Verdict::fail(ErrorCode::branch_failure, "branch " + std::to_string(index) + " fails at " +
                                                                bad->path + ": " + bad->verdict.message);
        }
        ++index;
    }
    const Sequent premises[] = {branch_left.conclusion, branch_right.conclusion};
    Verdict v = join == Rule::and_form ? check_and(Rule::and_form, premises, conclusion, mode)
                                       : check_at(Rule::at_form, premises, conclusion, mode, convention);
    if (!v.ok()) {
        return Verdict::fail(ErrorCode::join_mismatch, std::string(error_code_name(v.code)) + ": " + v.message);
    }
    return v;
}

Verdict check_node(const Derivation &node, LogicMode mode) {
    bool arity_ok = true;
    const std::size_t expected = arity_error_count(node.rule, node.premises.size(), &arity_ok);
    if (!arity_ok) {
        return Verdict::fail(ErrorCode::branch_failure, std::string(rule_keyword(node.rule)) + " expects " +
                                                            std::to_string(expected) + " premise(s), found " +
                                                            std::to_string(node.premises.size()));
    }
    std::vector<Sequent> ps;
    ps.reserve(node.premises.size());
    for (const auto &p : node.premises) {
        ps.push_back(p.conclusion);
    }
    const Sequent &c = node.conclusion;
    switch (node.rule) {
        case Rule::premise:
            return Verdict::pass();
        case Rule::axiom:
            return check_axiom(c);
        case Rule::and_form:
        case Rule::and_refl:
            return check_and(node.rule, ps, c, mode);
        case Rule::par_form:
            return check_par_form(ps[0], c);
        case Rule::neg_form:
        case Rule::neg_refl:
            return check_neg(node.rule, ps[0], c, node.params.formulas);
        case Rule::cut:
            return check_cut(ps[0], ps[1], c, node.params.formulas, mode);
        case Rule::at_form:
        case Rule::at_impl_refl:
        case Rule::at_expl_refl:
        case Rule::at_axiom:
            return check_at(node.rule, ps, c, mode, node.params.convention);
        case Rule::semi_distrib:
        case Rule::q_split:
            return check_rewrite(node.rule, ps, c, node.params.convention);
        case Rule::h_rule:
        case Rule::h_inverse:
        case Rule::cnot:
            return check_structural(node.rule, ps[0], c, node.params.clause);
        case Rule::epr:
            return check_epr(ps, c, mode);
        case Rule::parallel_join: {
            if (!node.params.join) {
                return Verdict::fail(ErrorCode::join_mismatch, "parallel join names its connective");
            }
            const Rule join = *node.params.join;
            if (join != Rule::and_form && join != Rule::at_form) {
                return Verdict::fail(ErrorCode::join_mismatch, "branches join by &-formation or @-formation only");
            }
            Verdict v = join == Rule::and_form ? check_and(Rule::and_form, ps, c, mode)
                                               : check_at(Rule::at_form, ps, c, mode, node.params.convention);
            if (!v.ok()) {
                return Verdict::fail(ErrorCode::join_mismatch,
                                     std::string(error_code_name(v.code)) + ": " + v.message);
            }
            return v;
        }
    }
    return Verdict::fail(ErrorCode::schema_mismatch, "unknown rule");
}

CheckReport check_derivation(const Derivation &tree, LogicMode mode) {
    CheckReport report;
    report.mode = mode;
    try {
        check_tree(tree, mode, root_path(tree), report);
    } catch (const Error &e) {
        report.ok = false;
        report.per_node.push_back(NodeVerdict{tree.label, tree.rule, Verdict::fail(e.code(), e.what())});
    }
    return report;
}

std::optional<BellConvention> fired_convention(const Derivation &node) {
    const bool at = node.rule == Rule::at_form ||
                    (node.rule == Rule::parallel_join && node.params.join == Rule::at_form);
    if (!at || node.premises.size() != 2) {
        return std::nullopt;
    }
    auto pair = atom_pair(node.premises[0].conclusion);
    if (!pair) {
        return std::nullopt;
    }
    return convention_of(pair->x, pair->y);
}

}  // namespace qsc
