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

#include "qsc/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qsc {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::size_t dimension(std::size_t wires) { return std::size_t{1} << wires; }

bool bit_of(std::size_t index, std::size_t wire, std::size_t n) { return (index >> (n - 1 - wire)) & 1U; }

std::size_t with_bit(std::size_t index, std::size_t wire, std::size_t n, bool value) {
    const std::size_t mask = std::size_t{1} << (n - 1 - wire);
    return value ? (index | mask) : (index & ~mask);
}

std::string wire_list(const std::vector<std::string> &wires) {
    std::string out = "(";
    for (std::size_t i = 0; i < wires.size(); ++i) {
        out += (i ? "," : "") + wires[i];
    }
    return out + ")";
}

void require_same_wires(const QState &a, const QState &b) {
    std::vector<std::string> x = a.wires;
    std::vector<std::string> y = b.wires;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) {
        throw Error(ErrorCode::wire_mismatch, "wires " + wire_list(a.wires) + " and " + wire_list(b.wires) + " differ");
    }
}

Amplitude inner(const std::vector<Amplitude> &a, const std::vector<Amplitude> &b) {
    Amplitude sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

double vector_norm(const std::vector<Amplitude> &v) {
    double sum = 0.0;
    for (const auto &x : v) {
        sum += std::norm(x);
    }
    return std::sqrt(sum);
}

std::vector<Amplitude> unit(const QState &s) {
    std::vector<Amplitude> v = s.vector();
    const double n = vector_norm(v);
    for (auto &x : v) {
        x /= n;
    }
    return v;
}

}  // namespace

// --- Matrix ------------------------------------------------------------------

Matrix::Matrix(std::size_t dim, std::vector<Amplitude> entries) : dim(dim), data(std::move(entries)) {
    if (data.size() != dim * dim) {
        throw std::invalid_argument("matrix entry count does not match its dimension");
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::operator+(const Matrix &other) const {
    Matrix m = *this;
    for (std::size_t i = 0; i < data.size(); ++i) {
        m.data[i] += other.data[i];
    }
    return m;
}

Matrix Matrix::operator*(const Matrix &other) const {
    Matrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t c = 0; c < dim; ++c) {
                m(r, c) += (*this)(r, k) * other(k, c);
            }
        }
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

Matrix Matrix::kron(const Matrix &other) const {
    Matrix m(dim * other.dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            for (std::size_t r2 = 0; r2 < other.dim; ++r2) {
                for (std::size_t c2 = 0; c2 < other.dim; ++c2) {
                    m(r * other.dim + r2, c * other.dim + c2) = (*this)(r, c) * other(r2, c2);
                }
            }
        }
    }
    return m;
}

double Matrix::max_abs_diff(const Matrix &other) const {
    if (dim != other.dim) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        worst = std::max(worst, std::abs(data[i] - other.data[i]));
    }
    return worst;
}

// --- Operator ----------------------------------------------------------------

Operator Operator::hadamard(const std::string &wire) {
    return {"H", {wire}, Matrix(2, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2})};
}

Operator Operator::hadamard_inverse(const std::string &wire) {
    Operator op = hadamard(wire);
    op.name = "H_inv";
    op.matrix = op.matrix.adjoint();
    return op;
}

Operator Operator::cnot(const std::string &control, const std::string &target) {
    if (control == target) {
        throw Error(ErrorCode::wire_mismatch, "CNOT needs two distinct wires");
    }
    return {"CNOT", {control, target}, Matrix(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0})};
}

Operator Operator::m0(const std::string &wire) { return {"M0", {wire}, Matrix(2, {1, 0, 0, 0})}; }

Operator Operator::m1(const std::string &wire) { return {"M1", {wire}, Matrix(2, {0, 0, 0, 1})}; }

Operator Operator::mc(const std::string &wire) { return {"MC", {wire}, m0(wire).matrix + m1(wire).matrix}; }

Operator Operator::mb(const std::string &first, const std::string &second) {
    if (first == second) {
        throw Error(ErrorCode::wire_mismatch, "the Bell mirror needs two distinct wires");
    }
    const Matrix sum = bell_projector(BellState::phi_plus) + bell_projector(BellState::phi_minus) +
                       bell_projector(BellState::psi_plus) + bell_projector(BellState::psi_minus);
    return {"MB", {first, second}, sum};
}

Operator Operator::i2(const std::string &wire) { return {"I2", {wire}, Matrix::identity(2)}; }

Operator Operator::i4(const std::string &first, const std::string &second) {
    return {"I4", {first, second}, Matrix::identity(4)};
}

Operator Operator::basis_projector(const std::vector<std::string> &wires, const std::vector<bool> &bits) {
    Matrix m(dimension(wires.size()));
    std::size_t index = 0;
    std::string name = "P";
    for (std::size_t i = 0; i < bits.size(); ++i) {
        index = (index << 1) | (bits[i] ? 1U : 0U);
        name += bits[i] ? '1' : '0';
    }
    m(index, index) = 1.0;
    if (wires.size() == 1) {
        name = bits[0] ? "M1" : "M0";
    }
    return {name, wires, m};
}

Matrix bell_projector(BellState which) {
    // |Phi+-> ~ |00> +- |11>, |Psi+-> ~ |01> +- |10>; halving keeps entries exact.
    const bool phi = which == BellState::phi_plus || which == BellState::phi_minus;
    const double sign = (which == BellState::phi_plus || which == BellState::psi_plus) ? 1.0 : -1.0;
    const std::size_t a = phi ? 0 : 1;
    const std::size_t b = phi ? 3 : 2;
    Matrix m(4);
    m(a, a) = 0.5;
    m(b, b) = 0.5;
    m(a, b) = 0.5 * sign;
    m(b, a) = 0.5 * sign;
    return m;
}

// --- QState ------------------------------------------------------------------

QState QState::scalar(Amplitude value) { return {{}, {value}, 1.0}; }

QState QState::bit(const std::string &wire, bool one) {
    return one ? qubit(wire, 0.0, 1.0) : qubit(wire, 1.0, 0.0);
}

QState QState::qubit(const std::string &wire, Amplitude a, Amplitude b) { return {{wire}, {a, b}, 1.0}; }

std::size_t QState::wire_index(const std::string &wire) const {
    return static_cast<std::size_t>(std::find(wires.begin(), wires.end(), wire) - wires.begin());
}

std::vector<Amplitude> QState::vector() const {
    std::vector<Amplitude> v = amplitudes;
    if (scale != 1.0) {
        for (auto &x : v) {
            x *= scale;
        }
    }
    return v;
}

double QState::norm() const { return scale * vector_norm(amplitudes); }

bool QState::is_zero(double tol) const { return norm() <= tol; }

bool QState::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

QState QState::renormalized() const {
    const double n = vector_norm(amplitudes);
    if (n == 0.0) {
        throw Error(ErrorCode::zero_state, "cannot renormalize the zero vector on " + wire_list(wires));
    }
    QState s = *this;
    s.scale = 1.0 / n;
    return s;
}

QState QState::flattened() const { return {wires, vector(), 1.0}; }

QState QState::scaled(Amplitude factor) const {
    QState s = *this;
    for (auto &x : s.amplitudes) {
        x *= factor;
    }
    return s;
}

Amplitude QState::amplitude(const std::vector<bool> &bits) const {
    std::size_t index = 0;
    for (bool b : bits) {
        index = (index << 1) | (b ? 1U : 0U);
    }
    return scale * amplitudes.at(index);
}

// --- operations --------------------------------------------------------------

QState tensor(const QState &a, const QState &b) {
    for (const auto &w : b.wires) {
        if (a.has_wire(w)) {
            throw Error(ErrorCode::wire_mismatch, "wire " + w + " occurs twice in a tensor product");
        }
    }
    if (a.wire_count() + b.wire_count() > kMaxWires) {
        throw Error(ErrorCode::non_denotable_sequent,
                    "states are limited to " + std::to_string(kMaxWires) + " wires");
    }
    QState s;
    s.wires = a.wires;
    s.wires.insert(s.wires.end(), b.wires.begin(), b.wires.end());
    s.scale = a.scale * b.scale;
    s.amplitudes.reserve(a.amplitudes.size() * b.amplitudes.size());
    for (const auto &x : a.amplitudes) {
        for (const auto &y : b.amplitudes) {
            s.amplitudes.push_back(x * y);
        }
    }
    return s;
}

QState align(const QState &s, const std::vector<std::string> &order) {
    if (order == s.wires) {
        return s;
    }
    QState target{order, {}, s.scale};
    require_same_wires(s, target);
    const std::size_t n = order.size();
    std::vector<std::size_t> source(n);
    for (std::size_t i = 0; i < n; ++i) {
        source[i] = s.wire_index(order[i]);
    }
    target.amplitudes.assign(s.amplitudes.size(), 0.0);
    for (std::size_t j = 0; j < target.amplitudes.size(); ++j) {
        std::size_t from = 0;
        for (std::size_t i = 0; i < n; ++i) {
            from = with_bit(from, source[i], n, bit_of(j, i, n));
        }
        target.amplitudes[j] = s.amplitudes[from];
    }
    return target;
}

QState apply(const Operator &op, const QState &s) {
    const std::size_t n = s.wire_count();
    const std::size_t k = op.wires.size();
    if (op.matrix.dim != dimension(k)) {
        throw Error(ErrorCode::wire_mismatch, op.name + " has the wrong matrix size for its wires");
    }
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) {
        pos[i] = s.wire_index(op.wires[i]);
        if (pos[i] == n) {
            throw Error(ErrorCode::wire_mismatch,
                        op.name + " acts on wire " + op.wires[i] + ", absent from " + wire_list(s.wires));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (pos[j] == pos[i]) {
                throw Error(ErrorCode::wire_mismatch, op.name + " names wire " + op.wires[i] + " twice");
            }
        }
    }
    QState out = s;
    for (std::size_t index = 0; index < s.amplitudes.size(); ++index) {
        std::size_t row = 0;
        for (std::size_t i = 0; i < k; ++i) {
            row = (row << 1) | (bit_of(index, pos[i], n) ? 1U : 0U);
        }
        Amplitude sum = 0.0;
        for (std::size_t col = 0; col < op.matrix.dim; ++col) {
            const Amplitude m = op.matrix(row, col);
            if (m == Amplitude(0.0)) {
                continue;
            }
            std::size_t from = index;
            for (std::size_t i = 0; i < k; ++i) {
                from = with_bit(from, pos[i], n, bit_of(col, i, k));
            }
            sum += m * s.amplitudes[from];
        }
        out.amplitudes[index] = sum;
    }
    return out;
}

QState combine_parallel(const QState &left, const QState &right) {
    const QState r = align(right, left.wires);
    QState out{left.wires, std::vector<Amplitude>(left.amplitudes.size()), 1.0};
    for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
        out.amplitudes[i] = kInvSqrt2 * (left.scale * left.amplitudes[i] + r.scale * r.amplitudes[i]);
    }
    return out;
}

QState restrict_wire(const QState &s, const std::string &wire, bool one) {
    const std::size_t n = s.wire_count();
    const std::size_t w = s.wire_index(wire);
    if (w == n) {
        throw Error(ErrorCode::wire_mismatch, "wire " + wire + " is absent from " + wire_list(s.wires));
    }
    QState out;
    out.scale = s.scale;
    out.wires = s.wires;
    out.wires.erase(out.wires.begin() + static_cast<std::ptrdiff_t>(w));
    for (std::size_t index = 0; index < s.amplitudes.size(); ++index) {
        if (bit_of(index, w, n) == one) {
            out.amplitudes.push_back(s.amplitudes[index]);
        }
    }
    return out;
}

double fidelity(const QState &a, const QState &b) {
    if (a.is_zero(0.0) || b.is_zero(0.0)) {
        throw Error(ErrorCode::zero_state, "fidelity is undefined for the zero vector");
    }
    const QState bb = align(b, a.wires);
    return std::norm(inner(unit(a), unit(bb)));
}

double residual(const QState &a, const QState &b) {
    const bool za = vector_norm(a.amplitudes) == 0.0 || a.scale == 0.0;
    const bool zb = vector_norm(b.amplitudes) == 0.0 || b.scale == 0.0;
    if (za || zb) {
        return za && zb ? 0.0 : 1.0;
    }
    const std::vector<Amplitude> x = unit(a);
    const std::vector<Amplitude> y = unit(align(b, a.wires));
    const Amplitude overlap = inner(y, x);
    // Rotate y onto x's phase; a zero overlap leaves the phase arbitrary.
    const Amplitude phase = std::abs(overlap) == 0.0 ? Amplitude(1.0) : overlap / std::abs(overlap);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += std::norm(x[i] - phase * y[i]);
    }
    return std::sqrt(sum);
}

double entanglement_entropy(const QState &s, const std::string &wire) {
    const std::size_t n = s.wire_count();
    const std::size_t w = s.wire_index(wire);
    if (w == n) {
        throw Error(ErrorCode::wire_mismatch, "wire " + wire + " is absent from " + wire_list(s.wires));
    }
    const std::vector<Amplitude> v = unit(s);
    // Reduced density matrix of `wire`.
    Amplitude rho[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (bit_of(i, w, n)) {
            continue;
        }
        const std::size_t j = with_bit(i, w, n, true);
        rho[0][0] += std::norm(v[i]);
        rho[1][1] += std::norm(v[j]);
        rho[0][1] += v[i] * std::conj(v[j]);
    }
    rho[1][0] = std::conj(rho[0][1]);
    const double trace = (rho[0][0] + rho[1][1]).real();
    const double det = (rho[0][0] * rho[1][1] - rho[0][1] * rho[1][0]).real();
    const double disc = std::sqrt(std::max(0.0, trace * trace / 4.0 - det));
    double entropy = 0.0;
    for (double lambda : {trace / 2.0 + disc, trace / 2.0 - disc}) {
        if (lambda > 1e-15) {
            entropy -= lambda * std::log2(lambda);
        }
    }
    return std::max(0.0, entropy);
}

}  // namespace qsc
