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

#ifndef QSC_SYNTAX_HPP
#define QSC_SYNTAX_HPP

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsc/error.hpp"

namespace qsc {

/// Two degrees are the same, and two degrees cancel, when they differ (resp.
/// sum) by less than this. 1/sqrt(2) has no exact binary representation.
inline constexpr double kDegreeTolerance = 1e-9;

using Amplitude = std::complex<double>;

/// The only symbolic degrees are the amplitudes of the unknown qubit.
enum class Symbol { alpha, beta };

/// Concrete values for the symbolic pair, used when denoting sequents.
struct SymbolBindings {
    Amplitude alpha{0.6, 0.0};
    Amplitude beta{0.8, 0.0};

    Amplitude operator[](Symbol s) const { return s == Symbol::alpha ? alpha : beta; }
};

/// An assertion degree: a complex amplitude or one of the reserved symbols.
class Degree {
   public:
    Degree(Amplitude value) : value_(value) {}
    Degree(double value) : value_(value, 0.0) {}
    static Degree symbol(Symbol s);

    bool is_symbolic() const { return symbolic_; }
    /// Precondition: !is_symbolic().
    Amplitude value() const { return value_; }
    /// Precondition: is_symbolic().
    Symbol symbol_value() const { return symbol_; }

    /// Substitutes bindings for a symbol; throws UnboundSymbolicDegree when a
    /// symbol is met without bindings.
    Amplitude resolve(const SymbolBindings *bindings) const;

    /// Exact identity (symbol for symbol, bit for bit).
    friend bool operator==(const Degree &a, const Degree &b);

   private:
    Degree() = default;
    Amplitude value_{1.0, 0.0};
    Symbol symbol_ = Symbol::alpha;
    bool symbolic_ = false;
};

/// Equality within kDegreeTolerance for concrete values, identity for symbols.
bool same_degree(const Degree &a, const Degree &b);

/// Combines two optional degrees multiplicatively. An absent degree acts as 1.
/// Returns nullopt in `ok` = false when a symbol would need to be multiplied by
/// something other than 1, which the formula language cannot express.
std::optional<Degree> multiply_degrees(const std::optional<Degree> &a, const std::optional<Degree> &b, bool *ok);

/// Per-conjunct degrees of `X a&b Y`: `first` belongs to X, `second` to Y.
struct DegreePair {
    Degree first;
    Degree second;

    friend bool operator==(const DegreePair &a, const DegreePair &b) = default;
};

struct Atom {
    std::string name;
    bool negated = false;

    friend bool operator==(const Atom &a, const Atom &b) = default;
};

/// `Q_X` abbreviates the qubit `X^ a&b X`. Without degrees the amplitudes are
/// the equal-weight pair; `degrees->first` pairs with X^ (the 0 bit).
struct QubitRef {
    std::string atom;
    std::optional<DegreePair> degrees;

    friend bool operator==(const QubitRef &a, const QubitRef &b) = default;
};

/// Immutable formula tree. Copies share structure.
class Formula {
   public:
    enum class Kind { atom, null, conj, par, ent, qubit };

    /// The null proposition.
    Formula();

    static Formula atom(std::string name, bool negated = false, SourceSpan span = {});
    static Formula null(SourceSpan span = {});
    static Formula conj(Formula left, Formula right, std::optional<DegreePair> degrees = std::nullopt,
                        SourceSpan span = {});
    static Formula par(Formula left, Formula right, SourceSpan span = {});
    static Formula ent(Formula left, Formula right, SourceSpan span = {});
    static Formula qubit(QubitRef ref, SourceSpan span = {});
    static Formula qubit(std::string atom_name, SourceSpan span = {});

    Kind kind() const;
    bool is_atom() const { return kind() == Kind::atom; }
    bool is_null() const { return kind() == Kind::null; }
    bool is_conj() const { return kind() == Kind::conj; }
    bool is_par() const { return kind() == Kind::par; }
    bool is_ent() const { return kind() == Kind::ent; }
    bool is_qubit() const { return kind() == Kind::qubit; }

    const Atom &as_atom() const;
    const QubitRef &as_qubit() const;
    Formula left() const;
    Formula right() const;
    /// Degrees of a conjunction; always empty for other kinds.
    const std::optional<DegreePair> &degrees() const;
    const SourceSpan &span() const;

    /// Structural identity. Spans are ignored; degrees compare exactly.
    friend bool operator==(const Formula &a, const Formula &b);

   private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// `antecedent |-{degree} consequent`. Both lists are ordered; the degree is
/// the upper-fix on the turnstile.
struct Sequent {
    std::vector<Formula> antecedent;
    std::vector<Formula> consequent;
    std::optional<Degree> degree;
    SourceSpan span;

    friend bool operator==(const Sequent &a, const Sequent &b);
};

/// Toggles the negation flag of an atom. Throws NonAtomicNegation otherwise.
Formula negate(const Formula &f);

/// Rewrites to the canonical representative used for comparisons:
///  - `X & X` with equal (or no) degrees becomes X,
///  - `X a&b X` with a + b == 0 becomes the null proposition,
///  - `Q_X` unfolds to its conjunction `X^ & X`,
///  - degrees (1/sqrt2, 1/sqrt2) are dropped, since `X & Y` already means that,
///  - conjuncts and @-parties are put in a fixed order.
/// A self-conjunction with distinct, non-cancelling degrees is left in place;
/// its combined amplitude only exists at the denotation level.
Formula normalize(const Formula &f);
Sequent normalize(const Sequent &s);

/// Degree-tolerant structural identity of the normal forms.
bool equivalent(const Formula &f, const Formula &g);
bool equivalent(const Sequent &s, const Sequent &t);

/// Degree-tolerant structural identity without normalization.
bool same_formula(const Formula &f, const Formula &g);

/// Total order on formulas used to canonicalize. Degrees take part exactly.
int compare(const Formula &f, const Formula &g);

/// Atom names in order of first appearance.
std::vector<std::string> atom_names(const Formula &f);
std::vector<std::string> atom_names(const Sequent &s);

/// Surface syntax, parseable by the script parser.
std::string to_string(const Degree &d);
std::string to_string(const Formula &f);
std::string to_string(const Sequent &s);

}  // namespace qsc

#endif
