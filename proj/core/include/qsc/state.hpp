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

#ifndef QSC_STATE_HPP
#define QSC_STATE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qsc/syntax.hpp"

namespace qsc {

/// States span at most this many wires.
inline constexpr std::size_t kMaxWires = 3;

/// Tolerance for exact algebraic identities (unitarity, involutions).
inline constexpr double kIdentityTolerance = 1e-12;

/// Default tolerance for soundness residuals and normalization checks.
inline constexpr double kResidualTolerance = 1e-9;

/// Dense complex square matrix, row-major.
struct Matrix {
    std::size_t dim = 0;
    std::vector<Amplitude> data;

    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim(dim), data(dim * dim) {}
    Matrix(std::size_t dim, std::vector<Amplitude> entries);

    static Matrix identity(std::size_t dim);

    Amplitude &operator()(std::size_t row, std::size_t col) { return data[row * dim + col]; }
    const Amplitude &operator()(std::size_t row, std::size_t col) const { return data[row * dim + col]; }

    Matrix operator+(const Matrix &other) const;
    Matrix operator*(const Matrix &other) const;
    Matrix adjoint() const;
    /// Kronecker product; `this` acts on the more significant bits.
    Matrix kron(const Matrix &other) const;
    /// Largest entrywise distance; infinity on a dimension mismatch.
    double max_abs_diff(const Matrix &other) const;

    friend bool operator==(const Matrix &a, const Matrix &b) = default;
};

/// A gate or projector bound to wires. The first wire is the most significant.
struct Operator {
    std::string name;
    std::vector<std::string> wires;
    Matrix matrix;

    static Operator hadamard(const std::string &wire);
    static Operator hadamard_inverse(const std::string &wire);
    static Operator cnot(const std::string &control, const std::string &target);
    static Operator m0(const std::string &wire);
    static Operator m1(const std::string &wire);
    /// Cat mirror: M0 + M1.
    static Operator mc(const std::string &wire);
    /// Bell mirror: the sum of the four Bell-state projectors.
    static Operator mb(const std::string &first, const std::string &second);
    static Operator i2(const std::string &wire);
    static Operator i4(const std::string &first, const std::string &second);
    /// Projector onto the computational basis state `bits` of `wires`.
    static Operator basis_projector(const std::vector<std::string> &wires, const std::vector<bool> &bits);
};

enum class BellState { phi_plus, phi_minus, psi_plus, psi_minus };

/// |B><B| for one of the Bell states, with entries exactly 0 or +-1/2.
Matrix bell_projector(BellState which);

/// Labeled state vector. The represented vector is `scale * amplitudes`.
struct QState {
    std::vector<std::string> wires;
    std::vector<Amplitude> amplitudes;
    double scale = 1.0;

    /// The zero-wire state with amplitude `value`.
    static QState scalar(Amplitude value);
    /// |bit> on one wire.
    static QState bit(const std::string &wire, bool one);
    /// a|0> + b|1> on one wire.
    static QState qubit(const std::string &wire, Amplitude a, Amplitude b);

    std::size_t wire_count() const { return wires.size(); }
    /// Index of `wire`, or wire_count() when absent.
    std::size_t wire_index(const std::string &wire) const;
    bool has_wire(const std::string &wire) const { return wire_index(wire) < wires.size(); }

    /// scale * amplitudes.
    std::vector<Amplitude> vector() const;
    double norm() const;
    bool is_zero(double tol = kIdentityTolerance) const;
    bool is_normalized(double tol = kResidualTolerance) const;
    /// Sets the scale so the norm is 1. Throws ZeroState on a zero vector.
    QState renormalized() const;
    /// Folds the scale into the amplitudes.
    QState flattened() const;
    QState scaled(Amplitude factor) const;

    /// Amplitude of the basis state whose bits are given per wire, in order.
    Amplitude amplitude(const std::vector<bool> &bits) const;
};

/// Tensor product; the wires of `a` come first. Throws WireMismatch when the
/// wire sets overlap and NonDenotableSequent above kMaxWires wires.
QState tensor(const QState &a, const QState &b);

/// Reorders wires to `order`, a permutation of the state's wires.
QState align(const QState &s, const std::vector<std::string> &order);

/// Applies `op` to its wires, identity elsewhere. No renormalization.
QState apply(const Operator &op, const QState &s);

/// (1/sqrt2) (left + right), right aligned to left's wires.
QState combine_parallel(const QState &left, const QState &right);

/// Keeps the slice in which `wire` holds `one`, dropping the wire.
QState restrict_wire(const QState &s, const std::string &wire, bool one);

/// |<a|b>|^2 after normalization and wire alignment. Throws ZeroState and
/// WireMismatch.
double fidelity(const QState &a, const QState &b);

/// Distance between the normalized states, minimized over a global phase.
/// Zero against zero is 0; zero against nonzero is 1. Wires are aligned by
/// name; different wire sets throw WireMismatch.
double residual(const QState &a, const QState &b);

/// Von Neumann entropy (bits) of the reduced state of one wire.
double entanglement_entropy(const QState &s, const std::string &wire);

}  // namespace qsc

#endif
