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

#include "qsc/syntax.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace qsc {

// ---------------------------------------------------------------------------
// Degree

Degree Degree::symbol(Symbol s) {
    Degree d;
    d.symbolic_ = true;
    d.symbol_ = s;
    d.value_ = 0.0;
    return d;
}

Amplitude Degree::resolve(const SymbolBindings *bindings) const {
    if (!symbolic_) {
        return value_;
    }
    if (bindings == nullptr) {
        throw Error(ErrorCode::unbound_symbolic_degree,
                    "symbolic degree '" + to_string(*this) + "' has no binding");
    }
    return (*bindings)[symbol_];
}

bool operator==(const Degree &a, const Degree &b) {
    if (a.symbolic_ != b.symbolic_) {
        return false;
    }
    return a.symbolic_ ? a.symbol_ == b.symbol_ : a.value_ == b.value_;
}

bool same_degree(const Degree &a, const Degree &b) {
    if (a.is_symbolic() || b.is_symbolic()) {
        return a == b;
    }
    return std::abs(a.value() - b.value()) < kDegreeTolerance;
}

std::optional<Degree> multiply_degrees(const std::optional<Degree> &a, const std::optional<Degree> &b, bool *ok) {
    *ok = true;
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    auto is_one = [](const Degree &d) { return !d.is_symbolic() && std::abs(d.value() - 1.0) < kDegreeTolerance; };
    if (is_one(*a)) {
        return b;
    }
    if (is_one(*b)) {
        return a;
    }
    if (a->is_symbolic() || b->is_symbolic()) {
        *ok = false;
        return std::nullopt;
    }
    return Degree(a->value() * b->value());
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
    Kind kind = Kind::null;
    Atom atom;
    QubitRef qubit;
    std::optional<DegreePair> degrees;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    SourceSpan span;
};

Formula::Formula() : Formula(null()) {}

Formula Formula::atom(std::string name, bool negated, SourceSpan span) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::atom;
    n->atom = Atom{std::move(name), negated};
    n->span = span;
    return Formula(std::move(n));
}

Formula Formula::null(SourceSpan span) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::null;
    n->span = span;
    return Formula(std::move(n));
}

Formula Formula::conj(Formula left, Formula right, std::optional<DegreePair> degrees, SourceSpan span) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::conj;
    n->lhs = std::move(left.node_);
    n->rhs = std::move(right.node_);
    n->degrees = std::move(degrees);
    n->span = span;
    return Formula(std::move(n));
}

Formula Formula::par(Formula left, Formula right, SourceSpan span) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::par;
    n->lhs = std::move(left.node_);
    n->rhs = std::move(right.node_);
    n->span = span;
    return Formula(std::move(n));
}

Formula Formula::ent(Formula left, Formula right, SourceSpan span) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::ent;
    n->lhs = std::move(left.node_);
    n->rhs = std::move(right.node_);
    n->span = span;
    return Formula(std::move(n));
}

Formula Formula::qubit(QubitRef ref, SourceSpan span) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::qubit;
    n->qubit = std::move(ref);
    n->span = span;
    return Formula(std::move(n));
}

Formula Formula::qubit(std::string atom_name, SourceSpan span) {
    return qubit(QubitRef{std::move(atom_name), std::nullopt}, span);
}

Formula::Kind Formula::kind() const { return node_->kind; }
const Atom &Formula::as_atom() const { return node_->atom; }
const QubitRef &Formula::as_qubit() const { return node_->qubit; }
Formula Formula::left() const { return node_->lhs ? Formula(node_->lhs) : Formula::null(); }
Formula Formula::right() const { return node_->rhs ? Formula(node_->rhs) : Formula::null(); }
const std::optional<DegreePair> &Formula::degrees() const { return node_->degrees; }
const SourceSpan &Formula::span() const { return node_->span; }

bool operator==(const Formula &a, const Formula &b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.kind() != b.kind()) {
        return false;
    }
    switch (a.kind()) {
        case Formula::Kind::atom:
            return a.as_atom() == b.as_atom();
        case Formula::Kind::null:
            return true;
        case Formula::Kind::qubit:
            return a.as_qubit() == b.as_qubit();
        case Formula::Kind::conj:
            if (a.degrees() != b.degrees()) {
                return false;
            }
            [[fallthrough]];
        case Formula::Kind::par:
        case Formula::Kind::ent:
            return a.left() == b.left() && a.right() == b.right();
    }
    return false;
}

bool operator==(const Sequent &a, const Sequent &b) {
    return a.antecedent == b.antecedent && a.consequent == b.consequent && a.degree == b.degree;
}

Formula negate(const Formula &f) {
    if (!f.is_atom()) {
        throw Error(ErrorCode::non_atomic_negation,
                    "negation is defined on atoms only, not on '" + to_string(f) + "'", f.span());
    }
    return Formula::atom(f.as_atom().name, !f.as_atom().negated, f.span());
}

// ---------------------------------------------------------------------------
// Ordering and comparison

namespace {

int kind_rank(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::atom:
            return 0;
        case Formula::Kind::null:
            return 1;
        case Formula::Kind::qubit:
            return 2;
        case Formula::Kind::conj:
            return 3;
        case Formula::Kind::par:
            return 4;
        case Formula::Kind::ent:
            return 5;
    }
    return 6;
}

int compare_degree(const Degree &a, const Degree &b) {
    if (a.is_symbolic() != b.is_symbolic()) {
        return a.is_symbolic() ? 1 : -1;
    }
    if (a.is_symbolic()) {
        return static_cast<int>(a.symbol_value()) - static_cast<int>(b.symbol_value());
    }
    auto cmp = [](double x, double y) { return x < y ? -1 : (y < x ? 1 : 0); };
    if (int c = cmp(a.value().real(), b.value().real())) {
        return c;
    }
    return cmp(a.value().imag(), b.value().imag());
}

int compare_pair(const std::optional<DegreePair> &a, const std::optional<DegreePair> &b) {
    if (a.has_value() != b.has_value()) {
        return a ? 1 : -1;
    }
    if (!a) {
        return 0;
    }
    if (int c = compare_degree(a->first, b->first)) {
        return c;
    }
    return compare_degree(a->second, b->second);
}

bool same_pair(const std::optional<DegreePair> &a, const std::optional<DegreePair> &b) {
    if (a.has_value() != b.has_value()) {
        return false;
    }
    return !a || (same_degree(a->first, b->first) && same_degree(a->second, b->second));
}

// The undegreed conjunction already means the equal-weight superposition.
bool is_equal_weight(const Degree &d) {
    return !d.is_symbolic() && std::abs(d.value() - Amplitude(1.0 / std::sqrt(2.0), 0.0)) < kDegreeTolerance;
}

std::string primary_atom(const Formula &f) {
    auto names = atom_names(f);
    return names.empty() ? std::string() : names.front();
}

}  // namespace

int compare(const Formula &f, const Formula &g) {
    if (int c = kind_rank(f.kind()) - kind_rank(g.kind())) {
        return c;
    }
    switch (f.kind()) {
        case Formula::Kind::atom: {
            if (int c = f.as_atom().name.compare(g.as_atom().name)) {
                return c;
            }
            return static_cast<int>(f.as_atom().negated) - static_cast<int>(g.as_atom().negated);
        }
        case Formula::Kind::null:
            return 0;
        case Formula::Kind::qubit: {
            if (int c = f.as_qubit().atom.compare(g.as_qubit().atom)) {
                return c;
            }
            return compare_pair(f.as_qubit().degrees, g.as_qubit().degrees);
        }
        case Formula::Kind::conj:
        case Formula::Kind::par:
        case Formula::Kind::ent: {
            if (int c = compare(f.left(), g.left())) {
                return c;
            }
            if (int c = compare(f.right(), g.right())) {
                return c;
            }
            return compare_pair(f.degrees(), g.degrees());
        }
    }
    return 0;
}

bool same_formula(const Formula &f, const Formula &g) {
    if (f.kind() != g.kind()) {
        return false;
    }
    switch (f.kind()) {
        case Formula::Kind::atom:
            return f.as_atom() == g.as_atom();
        case Formula::Kind::null:
            return true;
        case Formula::Kind::qubit:
            return f.as_qubit().atom == g.as_qubit().atom && same_pair(f.as_qubit().degrees, g.as_qubit().degrees);
        case Formula::Kind::conj:
            if (!same_pair(f.degrees(), g.degrees())) {
                return false;
            }
            [[fallthrough]];
        case Formula::Kind::par:
        case Formula::Kind::ent:
            return same_formula(f.left(), g.left()) && same_formula(f.right(), g.right());
    }
    return false;
}

// ---------------------------------------------------------------------------
// Normalization

Formula normalize(const Formula &f) {
    switch (f.kind()) {
        case Formula::Kind::atom:
        case Formula::Kind::null:
            return f;
        case Formula::Kind::qubit: {
            const auto &q = f.as_qubit();
            return normalize(
                Formula::conj(Formula::atom(q.atom, true), Formula::atom(q.atom, false), q.degrees, f.span()));
        }
        case Formula::Kind::conj: {
            Formula l = normalize(f.left());
            Formula r = normalize(f.right());
            std::optional<DegreePair> d = f.degrees();
            if (d && is_equal_weight(d->first) && is_equal_weight(d->second)) {
                d.reset();
            }
            if (same_formula(l, r)) {
                if (!d || same_degree(d->first, d->second)) {
                    return l;
                }
                if (!d->first.is_symbolic() && !d->second.is_symbolic() &&
                    std::abs(d->first.value() + d->second.value()) < kDegreeTolerance) {
                    return Formula::null(f.span());
                }
                return Formula::conj(l, r, d, f.span());
            }
            if (compare(l, r) > 0) {
                std::swap(l, r);
                if (d) {
                    d = DegreePair{d->second, d->first};
                }
            }
            return Formula::conj(l, r, d, f.span());
        }
        case Formula::Kind::par:
            return Formula::par(normalize(f.left()), normalize(f.right()), f.span());
        case Formula::Kind::ent: {
            Formula l = normalize(f.left());
            Formula r = normalize(f.right());
            const std::string ln = primary_atom(l);
            const std::string rn = primary_atom(r);
            if (ln > rn || (ln == rn && compare(l, r) > 0)) {
                std::swap(l, r);
            }
            return Formula::ent(l, r, f.span());
        }
    }
    return f;
}

Sequent normalize(const Sequent &s) {
    Sequent out;
    out.span = s.span;
    out.degree = s.degree;
    for (const auto &f : s.antecedent) {
        out.antecedent.push_back(normalize(f));
    }
    for (const auto &f : s.consequent) {
        out.consequent.push_back(normalize(f));
    }
    return out;
}

bool equivalent(const Formula &f, const Formula &g) { return same_formula(normalize(f), normalize(g)); }

bool equivalent(const Sequent &s, const Sequent &t) {
    if (s.antecedent.size() != t.antecedent.size() || s.consequent.size() != t.consequent.size()) {
        return false;
    }
    Degree one(1.0);
    if (!same_degree(s.degree.value_or(one), t.degree.value_or(one))) {
        return false;
    }
    for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
        if (!equivalent(s.antecedent[i], t.antecedent[i])) {
            return false;
        }
    }
    for (std::size_t i = 0; i < s.consequent.size(); ++i) {
        if (!equivalent(s.consequent[i], t.consequent[i])) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Atom names

namespace {

void collect_names(const Formula &f, std::vector<std::string> &out) {
    auto add = [&](const std::string &n) {
        if (std::find(out.begin(), out.end(), n) == out.end()) {
            out.push_back(n);
        }
    };
    switch (f.kind()) {
        case Formula::Kind::atom:
            add(f.as_atom().name);
            break;
        case Formula::Kind::qubit:
            add(f.as_qubit().atom);
            break;
        case Formula::Kind::null:
            break;
        case Formula::Kind::conj:
        case Formula::Kind::par:
        case Formula::Kind::ent:
            collect_names(f.left(), out);
            collect_names(f.right(), out);
            break;
    }
}

}  // namespace

std::vector<std::string> atom_names(const Formula &f) {
    std::vector<std::string> out;
    collect_names(f, out);
    return out;
}

std::vector<std::string> atom_names(const Sequent &s) {
    std::vector<std::string> out;
    for (const auto &f : s.antecedent) {
        collect_names(f, out);
    }
    for (const auto &f : s.consequent) {
        collect_names(f, out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string format_real(double x) {
    if (x == 0.0) {
        return "0";
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

int precedence(const Formula &f) {
    switch (f.kind()) {
        case Formula::Kind::ent:
            return 1;
        case Formula::Kind::conj:
            return 2;
        case Formula::Kind::par:
            return 3;
        default:
            return 4;
    }
}

std::string print(const Formula &f);

std::string print_operand(const Formula &f, bool parens) { return parens ? "(" + print(f) + ")" : print(f); }

std::string print(const Formula &f) {
    switch (f.kind()) {
        case Formula::Kind::atom:
            return f.as_atom().name + (f.as_atom().negated ? "^" : "");
        case Formula::Kind::null:
            return "0";
        case Formula::Kind::qubit: {
            const auto &q = f.as_qubit();
            std::string s = "Q_" + q.atom;
            if (q.degrees) {
                s += "{" + to_string(q.degrees->first) + ", " + to_string(q.degrees->second) + "}";
            }
            return s;
        }
        case Formula::Kind::conj:
        case Formula::Kind::par:
        case Formula::Kind::ent: {
            // & and # associate to the left; @ does not associate at all.
            const int p = precedence(f);
            const bool non_assoc = f.is_ent();
            const int lp = precedence(f.left());
            const int rp = precedence(f.right());
            std::string op;
            if (f.is_conj()) {
                op = f.degrees() ? " &{" + to_string(f.degrees()->first) + ", " + to_string(f.degrees()->second) + "} "
                                 : " & ";
            } else {
                op = f.is_par() ? " # " : " @ ";
            }
            return print_operand(f.left(), lp < p || (non_assoc && lp == p)) + op +
                   print_operand(f.right(), rp <= p);
        }
    }
    return "?";
}

}  // namespace

std::string to_string(const Degree &d) {
    if (d.is_symbolic()) {
        return d.symbol_value() == Symbol::alpha ? "alpha" : "beta";
    }
    const Amplitude v = d.value();
    if (v.imag() == 0.0) {
        return format_real(v.real());
    }
    std::string im = format_real(std::abs(v.imag())) + "i";
    return format_real(v.real()) + (std::signbit(v.imag()) ? "-" : "+") + im;
}

std::string to_string(const Formula &f) { return print(f); }

std::string to_string(const Sequent &s) {
    std::string out;
    for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
        out += (i ? ", " : "") + to_string(s.antecedent[i]);
    }
    out += s.antecedent.empty() ? "|-" : " |-";
    if (s.degree) {
        out += "{" + to_string(*s.degree) + "}";
    }
    for (std::size_t i = 0; i < s.consequent.size(); ++i) {
        out += (i ? ", " : " ") + to_string(s.consequent[i]);
    }
    return out;
}

}  // namespace qsc
