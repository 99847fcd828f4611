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

#include "qsc/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qsc {

namespace {

const Amplitude kHalfRoot{1.0 / std::sqrt(2.0), 0.0};

[[noreturn]] void not_denotable(const std::string &why) { throw Error(ErrorCode::non_denotable_sequent, why); }

std::pair<Amplitude, Amplitude> resolve_pair(const std::optional<DegreePair> &d, const SymbolBindings *bindings) {
    if (!d) {
        return {kHalfRoot, kHalfRoot};
    }
    return {d->first.resolve(bindings), d->second.resolve(bindings)};
}

/// A zero-wire zero state stands for 0 on whatever wires it meets.
QState widen_zero(const QState &zero, const QState &like) {
    QState s = like;
    std::fill(s.amplitudes.begin(), s.amplitudes.end(), Amplitude(0.0));
    (void)zero;
    return s;
}

bool is_zero_scalar(const QState &s) { return s.wires.empty() && s.amplitudes[0] == Amplitude(0.0); }

QState superpose(Amplitude a, QState l, Amplitude b, QState r) {
    if (is_zero_scalar(l) && !r.wires.empty()) {
        l = widen_zero(l, r);
    }
    if (is_zero_scalar(r) && !l.wires.empty()) {
        r = widen_zero(r, l);
    }
    std::vector<std::string> lw = l.wires;
    std::vector<std::string> rw = r.wires;
    std::sort(lw.begin(), lw.end());
    std::sort(rw.begin(), rw.end());
    if (lw != rw) {
        not_denotable("the conjuncts of a superposition live on different wires");
    }
    const QState rr = align(r, l.wires);
    QState out{l.wires, std::vector<Amplitude>(l.amplitudes.size()), 1.0};
    for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
        out.amplitudes[i] = a * l.scale * l.amplitudes[i] + b * rr.scale * rr.amplitudes[i];
    }
    return out;
}

QState denote_ent(const Formula &f, const SymbolBindings *bindings, BellConvention convention) {
    const Formula l = f.left();
    const Formula r = f.right();
    const bool phi = convention == BellConvention::phi;
    if (l.is_qubit() && r.is_qubit()) {
        const QubitRef &lq = l.as_qubit();
        const QubitRef &rq = r.as_qubit();
        if (lq.atom == rq.atom) {
            not_denotable("an @ relates two distinct qubits");
        }
        if (lq.degrees && rq.degrees) {
            not_denotable("only one party of an @ may carry degrees");
        }
        const bool right_weighted = rq.degrees.has_value();
        const auto [a, b] = resolve_pair(right_weighted ? rq.degrees : lq.degrees, bindings);
        QState s{{lq.atom, rq.atom}, {0.0, 0.0, 0.0, 0.0}, 1.0};
        // Index = 2*left + right. The weighted party's 0 bit takes `a`.
        if (phi) {
            s.amplitudes[0] = a;
            s.amplitudes[3] = b;
        } else if (right_weighted) {
            s.amplitudes[2] = a;
            s.amplitudes[1] = b;
        } else {
            s.amplitudes[1] = a;
            s.amplitudes[2] = b;
        }
        return s;
    }
    // One collapsed party: the other qubit follows it (phi) or opposes it (psi).
    if (l.is_atom() && r.is_qubit()) {
        const Atom &x = l.as_atom();
        return tensor(QState::bit(x.name, !x.negated), QState::bit(r.as_qubit().atom, phi ? !x.negated : x.negated));
    }
    if (r.is_atom() && l.is_qubit()) {
        const Atom &y = r.as_atom();
        return tensor(QState::bit(l.as_qubit().atom, phi ? !y.negated : y.negated), QState::bit(y.name, !y.negated));
    }
    not_denotable("'" + to_string(f) + "' is not an @ of qubits");
}

std::optional<std::string> qubit_like_atom(const Formula &f) {
    if (f.is_qubit()) {
        return f.as_qubit().atom;
    }
    if (f.is_conj() && f.left().is_atom() && f.right().is_atom() &&
        f.left().as_atom().name == f.right().as_atom().name &&
        f.left().as_atom().negated != f.right().as_atom().negated) {
        return f.left().as_atom().name;
    }
    return std::nullopt;
}

void collect_definite(const Formula &f, std::vector<std::string> &wires, std::vector<bool> &bits) {
    if (f.is_atom()) {
        wires.push_back(f.as_atom().name);
        bits.push_back(!f.as_atom().negated);
    } else if (f.is_par()) {
        collect_definite(f.left(), wires, bits);
        collect_definite(f.right(), wires, bits);
    }
}

std::string describe(const Operator &op) {
    std::string out = op.name + " on ";
    for (std::size_t i = 0; i < op.wires.size(); ++i) {
        out += (i ? "," : "") + op.wires[i];
    }
    return out;
}

/// State after a measurement premise acts on an assertion premise, with
/// measured wires the conclusion no longer mentions sliced away.
QState measure(const QState &before, const Measurement &m, const std::vector<std::string> &keep,
               const SymbolBindings *bindings) {
    QState s = apply(m.projector, before);
    if (s.is_zero(0.0)) {
        return QState::scalar(0.0);
    }
    s = s.renormalized().flattened();
    if (m.degree) {
        s = s.scaled(m.degree->resolve(bindings));
    }
    for (const auto &w : m.wires) {
        if (std::find(keep.begin(), keep.end(), w) == keep.end()) {
            s = restrict_wire(s, w, m.outcome);
        }
    }
    return s;
}

struct Prediction {
    std::optional<QState> state;
    std::string operation;
};

BellConvention node_convention(const Derivation &node) {
    if (auto fired = fired_convention(node)) {
        return *fired;
    }
    return node.params.convention.value_or(BellConvention::phi);
}

Prediction predict(const Derivation &node, const std::optional<QState> &actual, const SymbolBindings *bindings) {
    const BellConvention conv = node_convention(node);
    auto premise_state = [&](std::size_t i) { return denote_assertion(node.premises[i].conclusion, bindings, conv); };
    auto all_assertions = [&](std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            if (!is_assertion(node.premises[i].conclusion)) {
                return false;
            }
        }
        return node.premises.size() >= count;
    };
    if (!actual) {
        return {};
    }
    switch (node.rule) {
        case Rule::premise:
        case Rule::axiom:
        case Rule::at_axiom:
            return {actual, "hypothesis"};
        case Rule::cut:
        case Rule::epr:
        case Rule::at_impl_refl: {
            if (node.premises.size() == 1 && node.rule == Rule::at_impl_refl) {
                break;
            }
            if (!all_assertions(1) || node.premises.size() != 2) {
                return {};
            }
            Measurement m = denote_measurement(node.premises[1].conclusion);
            return {measure(premise_state(0), m, actual->wires, bindings), describe(m.projector)};
        }
        case Rule::semi_distrib:
        case Rule::par_form:
            if (!all_assertions(1)) {
                return {};
            }
            return {premise_state(0), "identity"};
        case Rule::h_rule:
        case Rule::h_inverse: {
            if (!all_assertions(1)) {
                return {};
            }
            const auto names = atom_names(node.conclusion);
            if (names.size() != 1) {
                return {};
            }
            const Operator op = node.rule == Rule::h_rule ? Operator::hadamard(names[0])
                                                          : Operator::hadamard_inverse(names[0]);
            return {apply(op, premise_state(0)), describe(op)};
        }
        case Rule::cnot: {
            if (!all_assertions(1)) {
                return {};
            }
            const auto &c = node.premises[0].conclusion.consequent;
            if (c.size() != 2 || !c[0].is_atom() || !c[1].is_atom()) {
                return {};
            }
            const Operator op = Operator::cnot(c[0].as_atom().name, c[1].as_atom().name);
            return {apply(op, premise_state(0)), describe(op)};
        }
        case Rule::and_form:
        case Rule::at_form:
        case Rule::parallel_join:
            if (!all_assertions(2) || node.premises.size() != 2) {
                return {};
            }
            return {combine_parallel(premise_state(0), premise_state(1)), "combine_parallel"};
        default:
            break;
    }
    // Branch selections: at_impl_refl (one premise), q_split, and_refl on the right.
    if ((node.rule == Rule::at_impl_refl || node.rule == Rule::q_split || node.rule == Rule::and_refl) &&
        all_assertions(1)) {
        std::vector<std::string> wires;
        std::vector<bool> bits;
        for (const auto &f : node.conclusion.consequent) {
            collect_definite(f, wires, bits);
        }
        if (wires.empty()) {
            return {};
        }
        const Operator op = Operator::basis_projector(wires, bits);
        return {apply(op, premise_state(0)), describe(op)};
    }
    return {};
}

void verify_tree(const Derivation &node, const std::string &path, const SymbolBindings *bindings,
                 SoundnessReport &report) {
    for (std::size_t i = 0; i < node.premises.size(); ++i) {
        verify_tree(node.premises[i], child_path(path, node.premises[i], i), bindings, report);
    }
    NodeSoundness entry;
    entry.path = path;
    entry.rule = node.rule;
    try {
        if (is_assertion(node.conclusion)) {
            entry.actual = denote_assertion(node.conclusion, bindings, node_convention(node));
        }
        Prediction p = predict(node, entry.actual, bindings);
        if (p.state) {
            entry.compared = true;
            entry.operation = std::move(p.operation);
            entry.predicted = std::move(p.state);
            entry.residual = residual(*entry.predicted, *entry.actual);
        }
    } catch (const Error &e) {
        entry.error = e.code();
        entry.message = e.what();
    }
    if (entry.error != ErrorCode::ok) {
        report.ok = false;
    }
    report.max_residual = std::max(report.max_residual, entry.residual);
    report.per_node.push_back(std::move(entry));
}

}  // namespace

QState denote_formula(const Formula &f, const SymbolBindings *bindings, BellConvention convention) {
    switch (f.kind()) {
        case Formula::Kind::atom:
            return QState::bit(f.as_atom().name, !f.as_atom().negated);
        case Formula::Kind::null:
            return QState::scalar(0.0);
        case Formula::Kind::qubit: {
            const auto [a, b] = resolve_pair(f.as_qubit().degrees, bindings);
            return QState::qubit(f.as_qubit().atom, a, b);
        }
        case Formula::Kind::conj: {
            const auto [a, b] = resolve_pair(f.degrees(), bindings);
            return superpose(a, denote_formula(f.left(), bindings, convention), b,
                             denote_formula(f.right(), bindings, convention));
        }
        case Formula::Kind::par:
            return tensor(denote_formula(f.left(), bindings, convention),
                          denote_formula(f.right(), bindings, convention));
        case Formula::Kind::ent:
            return denote_ent(f, bindings, convention);
    }
    not_denotable("unknown formula");
}

bool is_assertion(const Sequent &s) { return s.antecedent.empty() && !s.consequent.empty(); }

QState denote_assertion(const Sequent &s, const SymbolBindings *bindings, BellConvention convention) {
    if (!s.antecedent.empty()) {
        not_denotable("'" + to_string(s) + "' has assumptions; only assertions denote states");
    }
    if (s.consequent.empty()) {
        not_denotable("'" + to_string(s) + "' asserts nothing");
    }
    QState state = denote_formula(s.consequent[0], bindings, convention);
    for (std::size_t i = 1; i < s.consequent.size(); ++i) {
        const QState next = denote_formula(s.consequent[i], bindings, convention);
        if (is_zero_scalar(next) || is_zero_scalar(state)) {
            state = QState::scalar(0.0);
            continue;
        }
        state = tensor(state, next);
    }
    if (s.degree) {
        state = state.scaled(s.degree->resolve(bindings));
    }
    return state;
}

Measurement denote_measurement(const Sequent &s) {
    auto fail = [&](const std::string &why) -> Measurement {
        throw Error(ErrorCode::not_a_measurement_shape, "'" + to_string(s) + "' " + why, s.span);
    };
    if (s.antecedent.empty()) {
        return fail("has no measured qubit on the left");
    }
    if (s.consequent.size() != 1 || !s.consequent[0].is_atom()) {
        return fail("does not assert a single bit");
    }
    const Atom &bit = s.consequent[0].as_atom();
    Measurement m;
    m.outcome = !bit.negated;
    for (const auto &f : s.antecedent) {
        auto name = qubit_like_atom(f);
        if (!name) {
            return fail("measures something other than a qubit");
        }
        if (std::find(m.wires.begin(), m.wires.end(), *name) != m.wires.end()) {
            return fail("measures qubit " + *name + " twice");
        }
        m.wires.push_back(*name);
    }
    if (std::find(m.wires.begin(), m.wires.end(), bit.name) == m.wires.end()) {
        return fail("asserts a bit of an unmeasured qubit");
    }
    m.projector = Operator::basis_projector(m.wires, std::vector<bool>(m.wires.size(), m.outcome));
    m.degree = s.degree;
    return m;
}

SoundnessReport verify_soundness(const Derivation &tree, LogicMode mode, double tol, const SymbolBindings &bindings) {
    SoundnessReport report;
    report.tolerance = tol;
    const CheckReport check = check_derivation(tree, mode);
    if (!check.ok) {
        report.structural_ok = false;
        report.ok = false;
        return report;
    }
    verify_tree(tree, root_path(tree), &bindings, report);
    if (!report.per_node.empty()) {
        report.conclusion = report.per_node.back().actual;
    }
    report.ok = report.ok && report.max_residual <= tol;
    return report;
}

}  // namespace qsc
