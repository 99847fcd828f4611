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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "qsc/script.hpp"

namespace qsc {

namespace {

enum class Tok {
    ident,
    number,
    lparen,
    rparen,
    lbrace,
    rbrace,
    lbracket,
    rbracket,
    comma,
    colon,
    caret,
    amp,
    hash,
    at,
    turnstile,
    prime,
    plus,
    minus,
    end,
};

struct Token {
    Tok kind = Tok::end;
    std::string_view text;
    SourceSpan span;
};

const std::set<std::string_view> kReserved{"atoms", "theorem", "qed", "by", "premise", "alpha", "beta"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string quote(std::string_view s) { return "'" + std::string(s) + "'"; }

class Lexer {
   public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_blank();
            if (pos_ >= text_.size()) {
                out.push_back(Token{Tok::end, {}, here(0)});
                return out;
            }
            out.push_back(next());
        }
    }

   private:
    SourceSpan here(std::size_t length) const { return SourceSpan{pos_, line_, pos_ - line_start_ + 1, length}; }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
            if (text_[pos_] == '\n') {
                ++line_;
                line_start_ = pos_ + 1;
            }
            ++pos_;
        }
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance(1);
                }
            } else {
                return;
            }
        }
    }

    Token make(Tok kind, std::size_t length) {
        Token t{kind, text_.substr(pos_, length), here(length)};
        advance(length);
        return t;
    }

    Token next() {
        const char c = text_[pos_];
        if (ident_start(c)) {
            std::size_t n = 1;
            while (pos_ + n < text_.size() && ident_char(text_[pos_ + n])) {
                ++n;
            }
            return make(Tok::ident, n);
        }
        if (digit(c)) {
            return make(Tok::number, number_length());
        }
        if (c == '|') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                return make(Tok::turnstile, 2);
            }
            throw Error(ErrorCode::syntax_error, "stray '|'; the turnstile is written '|-'", here(1));
        }
        static const std::map<char, Tok> single{
            {'(', Tok::lparen}, {')', Tok::rparen}, {'{', Tok::lbrace},   {'}', Tok::rbrace}, {'[', Tok::lbracket},
            {']', Tok::rbracket}, {',', Tok::comma}, {':', Tok::colon},  {'^', Tok::caret},  {'&', Tok::amp},
            {'#', Tok::hash},     {'@', Tok::at},    {'\'', Tok::prime}, {'+', Tok::plus},   {'-', Tok::minus},
        };
        auto it = single.find(c);
        if (it == single.end()) {
            throw Error(ErrorCode::syntax_error, "unexpected character " + quote(std::string(1, c)), here(1));
        }
        return make(it->second, 1);
    }

    // digits [. digits] [e [+-] digits] [i]
    std::size_t number_length() const {
        std::size_t n = 0;
        auto at = [&](std::size_t k) { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; };
        while (digit(at(n))) {
            ++n;
        }
        if (at(n) == '.' && digit(at(n + 1))) {
            n += 1;
            while (digit(at(n))) {
                ++n;
            }
        }
        if (at(n) == 'e' || at(n) == 'E') {
            std::size_t k = n + 1;
            if (at(k) == '+' || at(k) == '-') {
                ++k;
            }
            if (digit(at(k))) {
                n = k;
                while (digit(at(n))) {
                    ++n;
                }
            }
        }
        if (at(n) == 'i' && !ident_char(at(n + 1))) {
            ++n;
        }
        return n;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t line_start_ = 0;
};

SourceSpan cover(const SourceSpan &from, const SourceSpan &to) {
    SourceSpan s = from;
    s.length = to.offset + to.length - from.offset;
    return s;
}

class Parser {
   public:
    explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

    void declare(const std::vector<std::string> &atoms) { atoms_.insert(atoms.begin(), atoms.end()); }

    // --- formulas ----------------------------------------------------------------

    Formula formula() {
        const Token &start = peek();
        Formula left = conjunction();
        if (!accept(Tok::at)) {
            return left;
        }
        Formula right = conjunction();
        if (peek().kind == Tok::at) {
            fail(ErrorCode::syntax_error, "@ does not associate; parenthesize one side", peek().span);
        }
        return Formula::ent(left, right, cover(start.span, previous().span));
    }

    std::vector<Formula> formula_list() {
        std::vector<Formula> out;
        if (!starts_formula()) {
            return out;
        }
        out.push_back(formula());
        while (accept(Tok::comma)) {
            out.push_back(formula());
        }
        return out;
    }

    Sequent sequent() {
        const Token &start = peek();
        Sequent s;
        s.antecedent = formula_list();
        expect(Tok::turnstile, "'|-'");
        if (accept(Tok::lbrace)) {
            s.degree = degree();
            expect(Tok::rbrace, "'}' closing the turnstile degree");
        }
        s.consequent = formula_list();
        s.span = cover(start.span, previous().span);
        return s;
    }

    // --- scripts -------------------------------------------------------------------

    ProofScript script() {
        ProofScript out;
        expect_word("atoms");
        while (peek().kind == Tok::ident && peek().text != "theorem") {
            const Token &t = advance();
            const std::string name(t.text);
            if (kReserved.count(t.text) || name.rfind("Q_", 0) == 0) {
                fail(ErrorCode::syntax_error, quote(name) + " cannot name an atom", t.span);
            }
            if (!atoms_.insert(name).second) {
                fail(ErrorCode::syntax_error, "atom " + quote(name) + " is declared twice", t.span);
            }
            out.atoms.push_back(name);
        }
        if (peek().kind != Tok::ident) {
            fail(ErrorCode::syntax_error, "expected 'theorem'", peek().span);
        }
        while (peek().kind != Tok::end) {
            out.theorems.push_back(theorem());
        }
        if (out.theorems.empty()) {
            fail(ErrorCode::syntax_error, "the script has no theorem", peek().span);
        }
        return out;
    }

    Degree degree_literal() { return degree(); }

    void finish() {
        if (peek().kind != Tok::end) {
            fail(ErrorCode::syntax_error, "unexpected " + describe(peek()), peek().span);
        }
    }

   private:
    // --- token plumbing --------------------------------------------------------------

    const Token &peek(std::size_t k = 0) const { return tokens_[std::min(pos_ + k, tokens_.size() - 1)]; }
    const Token &previous() const { return tokens_[pos_ == 0 ? 0 : pos_ - 1]; }

    const Token &advance() {
        const Token &t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size()) {
            ++pos_;
        }
        return t;
    }

    bool accept(Tok kind) {
        if (peek().kind == kind) {
            advance();
            return true;
        }
        return false;
    }

    bool accept_word(std::string_view word) {
        if (peek().kind == Tok::ident && peek().text == word) {
            advance();
            return true;
        }
        return false;
    }

    /// Spans of errors at the end of input point at the last real token.
    SourceSpan error_span(const Token &t) const {
        if (t.kind != Tok::end || tokens_.size() < 2) {
            return t.span;
        }
        return tokens_[tokens_.size() - 2].span;
    }

    static std::string describe(const Token &t) {
        return t.kind == Tok::end ? std::string("end of input") : quote(t.text);
    }

    [[noreturn]] static void fail(ErrorCode code, const std::string &message, const SourceSpan &span) {
        throw Error(code, message, span);
    }

    const Token &expect(Tok kind, const std::string &what) {
        if (peek().kind != kind) {
            fail(ErrorCode::syntax_error, "expected " + what + ", found " + describe(peek()), error_span(peek()));
        }
        return advance();
    }

    const Token &expect_word(std::string_view word) {
        if (peek().kind != Tok::ident || peek().text != word) {
            fail(ErrorCode::syntax_error, "expected " + quote(word) + ", found " + describe(peek()),
                 error_span(peek()));
        }
        return advance();
    }

    bool starts_formula() const {
        const Token &t = peek();
        return (t.kind == Tok::ident && !kReserved.count(t.text)) || t.kind == Tok::lparen ||
               (t.kind == Tok::number && t.text == "0");
    }

    // --- formulas ----------------------------------------------------------------

    Formula conjunction() {
        const Token &start = peek();
        Formula left = par();
        while (accept(Tok::amp)) {
            std::optional<DegreePair> degrees;
            if (accept(Tok::lbrace)) {
                Degree a = degree();
                expect(Tok::comma, "',' between the two conjunct degrees");
                Degree b = degree();
                expect(Tok::rbrace, "'}' closing the conjunct degrees");
                degrees = DegreePair{a, b};
            }
            Formula right = par();
            left = Formula::conj(left, right, degrees, cover(start.span, previous().span));
        }
        return left;
    }

    Formula par() {
        const Token &start = peek();
        Formula left = negation();
        while (accept(Tok::hash)) {
            Formula right = negation();
            left = Formula::par(left, right, cover(start.span, previous().span));
        }
        return left;
    }

    Formula negation() {
        const Token &start = peek();
        Formula f = primary();
        while (peek().kind == Tok::caret) {
            const Token &caret = advance();
            try {
                f = negate(f);
            } catch (const Error &e) {
                fail(e.code(), e.what(), cover(start.span, caret.span));
            }
            if (f.is_atom()) {
                f = Formula::atom(f.as_atom().name, f.as_atom().negated, cover(start.span, caret.span));
            }
        }
        return f;
    }

    Formula primary() {
        const Token &t = peek();
        if (t.kind == Tok::lparen) {
            advance();
            Formula f = formula();
            expect(Tok::rparen, "')'");
            return f;
        }
        if (t.kind == Tok::number && t.text == "0") {
            advance();
            return Formula::null(t.span);
        }
        if (t.kind != Tok::ident || kReserved.count(t.text)) {
            fail(ErrorCode::syntax_error, "expected a formula, found " + describe(t), error_span(t));
        }
        advance();
        const std::string name(t.text);
        if (name.rfind("Q_", 0) == 0) {
            const std::string atom = name.substr(2);
            if (!atoms_.count(atom)) {
                fail(ErrorCode::unknown_atom, "qubit " + quote(name) + " refers to undeclared atom " + quote(atom),
                     t.span);
            }
            QubitRef ref{atom, std::nullopt};
            if (accept(Tok::lbrace)) {
                Degree a = degree();
                expect(Tok::comma, "',' between the two qubit degrees");
                Degree b = degree();
                expect(Tok::rbrace, "'}' closing the qubit degrees");
                ref.degrees = DegreePair{a, b};
            }
            return Formula::qubit(ref, cover(t.span, previous().span));
        }
        if (!atoms_.count(name)) {
            fail(ErrorCode::unknown_atom, "atom " + quote(name) + " is not declared", t.span);
        }
        return Formula::atom(name, false, t.span);
    }

    // --- degrees -------------------------------------------------------------------

    double real_literal(const Token &t) {
        std::string_view digits = t.text;
        if (!digits.empty() && digits.back() == 'i') {
            digits.remove_suffix(1);
        }
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
            fail(ErrorCode::syntax_error, "malformed number " + quote(t.text), t.span);
        }
        return value;
    }

    Degree degree() {
        if (peek().kind == Tok::ident && (peek().text == "alpha" || peek().text == "beta")) {
            return Degree::symbol(advance().text == "alpha" ? Symbol::alpha : Symbol::beta);
        }
        double sign = 1.0;
        if (accept(Tok::minus)) {
            sign = -1.0;
        } else {
            accept(Tok::plus);
        }
        const Token &first = expect(Tok::number, "a degree");
        const bool first_imaginary = first.text.back() == 'i';
        Amplitude value = first_imaginary ? Amplitude(0.0, sign * real_literal(first))
                                          : Amplitude(sign * real_literal(first), 0.0);
        if (!first_imaginary && (peek().kind == Tok::plus || peek().kind == Tok::minus) &&
            peek(1).kind == Tok::number && peek(1).text.back() == 'i') {
            const double s2 = advance().kind == Tok::minus ? -1.0 : 1.0;
            value += Amplitude(0.0, s2 * real_literal(advance()));
        }
        return Degree(value);
    }

    // --- scripts -------------------------------------------------------------------

    Theorem theorem() {
        Theorem th;
        const Token &start = expect_word("theorem");
        const Token &name = expect(Tok::ident, "a theorem name");
        if (kReserved.count(name.text)) {
            fail(ErrorCode::syntax_error, quote(name.text) + " cannot name a theorem", name.span);
        }
        th.name = std::string(name.text);
        expect(Tok::colon, "':' after the theorem name");
        std::map<std::string, std::size_t> index;
        while (!accept_word("qed")) {
            if (peek().kind != Tok::number) {
                fail(ErrorCode::syntax_error, "expected a step number or 'qed', found " + describe(peek()),
                     error_span(peek()));
            }
            Step step = this->step();
            for (const auto &id : step.premise_ids) {
                if (!index.count(id)) {
                    fail(ErrorCode::dangling_reference,
                         "step " + step.id + " uses step " + id + ", which is not defined before it", step.span);
                }
            }
            if (!index.emplace(step.id, th.steps.size()).second) {
                fail(ErrorCode::duplicate_step_id, "step " + step.id + " is defined twice", step.span);
            }
            th.steps.push_back(std::move(step));
        }
        th.span = cover(start.span, previous().span);
        if (th.steps.empty()) {
            fail(ErrorCode::syntax_error, "theorem " + quote(th.name) + " has no steps", th.span);
        }
        std::set<std::string> used;
        for (const auto &s : th.steps) {
            used.insert(s.premise_ids.begin(), s.premise_ids.end());
        }
        for (std::size_t i = 0; i + 1 < th.steps.size(); ++i) {
            if (!used.count(th.steps[i].id)) {
                fail(ErrorCode::unused_step, "step " + th.steps[i].id + " is not used by any later step",
                     th.steps[i].span);
            }
        }
        std::map<std::string, Derivation> built;
        for (const auto &s : th.steps) {
            Derivation d{s.rule, s.params, {}, s.sequent, s.id, s.span};
            for (const auto &id : s.premise_ids) {
                d.premises.push_back(built.at(id));
            }
            built[s.id] = std::move(d);
        }
        th.tree = built.at(th.steps.back().id);
        return th;
    }

    Step step() {
        Step s;
        const Token &id = advance();
        if (id.text.find_first_not_of("0123456789") != std::string_view::npos) {
            fail(ErrorCode::syntax_error, "step ids are whole numbers, found " + quote(id.text), id.span);
        }
        s.id = std::string(id.text);
        expect(Tok::colon, "':' after the step number");
        s.sequent = sequent();
        if (accept_word("premise")) {
            s.rule = Rule::premise;
            s.span = cover(id.span, previous().span);
            return s;
        }
        expect_word("by");
        const Token &rule_token = expect(Tok::ident, "a rule name");
        auto rule = rule_from_keyword(rule_token.text);
        if (!rule) {
            fail(ErrorCode::unknown_rule, "unknown rule " + quote(rule_token.text), rule_token.span);
        }
        s.rule = *rule;
        s.params = params(*rule, rule_token);
        expect(Tok::lparen, "'(' opening the premise list");
        if (peek().kind != Tok::rparen) {
            s.premise_ids.push_back(premise_id());
            while (accept(Tok::comma)) {
                s.premise_ids.push_back(premise_id());
            }
        }
        expect(Tok::rparen, "')' closing the premise list");
        s.span = cover(id.span, previous().span);
        return s;
    }

    std::string premise_id() {
        const Token &t = expect(Tok::number, "a step number");
        if (t.text.find_first_not_of("0123456789") != std::string_view::npos) {
            fail(ErrorCode::syntax_error, "step ids are whole numbers, found " + quote(t.text), t.span);
        }
        return std::string(t.text);
    }

    BellConvention convention() {
        const Token &t = expect(Tok::ident, "'phi' or 'psi'");
        if (t.text == "phi") {
            return BellConvention::phi;
        }
        if (t.text == "psi") {
            return BellConvention::psi;
        }
        fail(ErrorCode::syntax_error, "expected 'phi' or 'psi', found " + quote(t.text), t.span);
    }

    RuleParams params(Rule rule, const Token &rule_token) {
        RuleParams p;
        const bool open = accept(Tok::lbracket);
        const std::string name(rule_token.text);
        switch (rule) {
            case Rule::cut:
                if (!open) {
                    fail(ErrorCode::syntax_error, "cut names its cut formulas, as in cut[A & A^]",
                         error_span(peek()));
                }
                p.formulas = formula_list();
                if (p.formulas.empty()) {
                    fail(ErrorCode::syntax_error, "expected a cut formula, found " + describe(peek()),
                         error_span(peek()));
                }
                break;
            case Rule::neg_form:
            case Rule::neg_refl:
                if (open) {
                    p.formulas = formula_list();
                }
                break;
            case Rule::at_form:
            case Rule::at_impl_refl:
            case Rule::at_expl_refl:
            case Rule::at_axiom:
            case Rule::semi_distrib:
                if (open) {
                    p.convention = convention();
                }
                break;
            case Rule::cnot:
                if (open) {
                    const Token &t = expect(Tok::ident, "a CNOT clause");
                    const bool primed = accept(Tok::prime);
                    if (t.text == "a") {
                        p.clause = primed ? CnotClause::a_prime : CnotClause::a;
                    } else if (t.text == "b") {
                        p.clause = primed ? CnotClause::b_prime : CnotClause::b;
                    } else {
                        fail(ErrorCode::syntax_error, "CNOT clauses are a, b, a' and b'", t.span);
                    }
                }
                break;
            case Rule::parallel_join: {
                if (!open) {
                    fail(ErrorCode::syntax_error, "parallel names its join, as in parallel[and]", error_span(peek()));
                }
                const Token &t = expect(Tok::ident, "'and' or 'at'");
                if (t.text == "and") {
                    p.join = Rule::and_form;
                } else if (t.text == "at") {
                    p.join = Rule::at_form;
                    if (accept(Tok::comma)) {
                        p.convention = convention();
                    }
                } else {
                    fail(ErrorCode::syntax_error, "parallel joins by 'and' or 'at'", t.span);
                }
                break;
            }
            default:
                if (open) {
                    fail(ErrorCode::syntax_error, "rule " + quote(name) + " takes no parameters", previous().span);
                }
                return p;
        }
        if (open) {
            expect(Tok::rbracket, "']' closing the rule parameters");
        }
        return p;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::set<std::string> atoms_;
};

}  // namespace

const Theorem *ProofScript::find(std::string_view name) const {
    for (const auto &t : theorems) {
        if (t.name == name) {
            return &t;
        }
    }
    return nullptr;
}

Formula parse_formula(std::string_view text, const std::vector<std::string> &atoms) {
    Parser p(text);
    p.declare(atoms);
    Formula f = p.formula();
    p.finish();
    return f;
}

Degree parse_degree(std::string_view text) {
    Parser p(text);
    Degree d = p.degree_literal();
    p.finish();
    return d;
}

Sequent parse_sequent(std::string_view text, const std::vector<std::string> &atoms) {
    Parser p(text);
    p.declare(atoms);
    Sequent s = p.sequent();
    p.finish();
    return s;
}

ProofScript parse_script(std::string_view text) {
    Parser p(text);
    return p.script();
}

}  // namespace qsc
