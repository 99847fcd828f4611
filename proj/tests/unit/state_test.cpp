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

#include <cmath>

#include "gtest/gtest.h"

using namespace qsc;

namespace {

const double r = 1.0 / std::sqrt(2.0);

void expect_amplitudes(const QState &s, const std::vector<Amplitude> &want, double tol = 1e-12) {
    const auto v = s.vector();
    ASSERT_EQ(v.size(), want.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        EXPECT_NEAR(std::abs(v[i] - want[i]), 0.0, tol) << "index " << i;
    }
}

QState plus(const std::string &w) { return QState::qubit(w, r, r); }

}  // namespace

TEST(matrix, mirrors_are_exact_identities) {
    EXPECT_EQ(Operator::mc("A").matrix, Matrix::identity(2));
    EXPECT_EQ(Operator::mb("A", "B").matrix, Matrix::identity(4));
    EXPECT_EQ((Operator::m0("A").matrix + Operator::m1("A").matrix), Operator::i2("A").matrix);
    EXPECT_EQ(Operator::i4("A", "B").matrix, Matrix::identity(4));
}

TEST(matrix, hadamard_is_self_inverse) {
    const Matrix h = Operator::hadamard("A").matrix;
    EXPECT_LE((h * h).max_abs_diff(Matrix::identity(2)), 1e-12);
    EXPECT_LE((h * Operator::hadamard_inverse("A").matrix).max_abs_diff(Matrix::identity(2)), 1e-12);
}

TEST(matrix, kron_orders_bits) {
    const Matrix x(2, {0, 1, 1, 0});
    const Matrix k = x.kron(Matrix::identity(2));
    EXPECT_EQ(k(2, 0), Amplitude(1));
    EXPECT_EQ(k(0, 2), Amplitude(1));
    EXPECT_EQ(k(1, 0), Amplitude(0));
}

TEST(matrix, bell_projectors_are_orthogonal) {
    const BellState all[] = {BellState::phi_plus, BellState::phi_minus, BellState::psi_plus, BellState::psi_minus};
    for (auto a : all) {
        for (auto b : all) {
            const Matrix p = bell_projector(a) * bell_projector(b);
            EXPECT_EQ(p, a == b ? bell_projector(a) : Matrix(4)) << int(a) << int(b);
        }
    }
}

TEST(apply, hadamard_on_zero) { expect_amplitudes(apply(Operator::hadamard("A"), QState::bit("A", false)), {r, r}); }

TEST(apply, cnot_makes_bell_state) {
    const QState s = tensor(plus("B"), QState::bit("A", false));
    const QState out = apply(Operator::cnot("B", "A"), s);
    EXPECT_EQ(out.wires, (std::vector<std::string>{"B", "A"}));
    expect_amplitudes(out, {r, 0, 0, r});
}

TEST(apply, cnot_respects_wire_roles) {
    // Control A, target B on a (B, A) register: |B=0, A=1> -> |B=1, A=1>.
    const QState s = tensor(QState::bit("B", false), QState::bit("A", true));
    expect_amplitudes(apply(Operator::cnot("A", "B"), s), {0, 0, 0, 1});
}

TEST(apply, acts_on_middle_wire) {
    const QState s = tensor(tensor(QState::bit("A", false), QState::bit("B", false)), QState::bit("C", true));
    const QState out = apply(Operator::hadamard("B"), s);
    EXPECT_NEAR(std::abs(out.amplitude({false, false, true}) - r), 0, 1e-15);
    EXPECT_NEAR(std::abs(out.amplitude({false, true, true}) - r), 0, 1e-15);
}

TEST(apply, unknown_wire) {
    try {
        apply(Operator::hadamard("C"), QState::bit("A", false));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::wire_mismatch);
    }
}

TEST(apply, mirror_leaves_state_unchanged) {
    const QState s = QState::qubit("A", 0.6, 0.8);
    EXPECT_EQ(apply(Operator::mc("A"), s).vector(), s.vector());
}

TEST(tensor, rejects_overlap_and_too_many_wires) {
    try {
        tensor(QState::bit("A", false), QState::bit("A", true));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::wire_mismatch);
    }
    QState three = tensor(tensor(QState::bit("A", false), QState::bit("B", false)), QState::bit("C", false));
    try {
        tensor(three, QState::bit("D", false));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::non_denotable_sequent);
    }
}

TEST(align, permutes_wires) {
    const QState s = tensor(QState::bit("A", true), QState::bit("B", false));
    const QState t = align(s, {"B", "A"});
    expect_amplitudes(t, {0, 1, 0, 0});
}

TEST(combine_parallel, hadamard_branches_give_zero) {
    const QState s = combine_parallel(QState::qubit("A", r, r), QState::qubit("A", r, -r));
    expect_amplitudes(s, {1, 0});
}

TEST(combine_parallel, bell_branches_give_product) {
    const QState phi{{"A", "B"}, {r, 0, 0, r}, 1.0};
    const QState psi{{"A", "B"}, {0, r, r, 0}, 1.0};
    const QState out = combine_parallel(phi, psi);
    EXPECT_NEAR(fidelity(out, tensor(plus("A"), plus("B"))), 1.0, 1e-12);
}

TEST(combine_parallel, identical_branches_scale) {
    const QState s = QState::qubit("A", 0.6, 0.8);
    EXPECT_EQ(residual(combine_parallel(s, s), s), 0.0);
}

TEST(combine_parallel, wire_mismatch) {
    EXPECT_THROW(combine_parallel(QState::bit("A", false), QState::bit("B", false)), Error);
}

TEST(fidelity, basic_values) {
    const QState phi{{"A", "B"}, {r, 0, 0, r}, 1.0};
    EXPECT_NEAR(fidelity(phi, phi), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(QState::bit("A", false), QState::bit("A", true)), 0.0, 1e-12);
    EXPECT_NEAR(fidelity(phi, tensor(plus("A"), plus("B"))), 0.5, 1e-12);
}

TEST(fidelity, zero_state) {
    try {
        fidelity(QState{{"A"}, {0, 0}, 1.0}, QState::bit("A", false));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::zero_state);
    }
}

TEST(residual, ignores_phase_and_scale) {
    const QState s = QState::qubit("A", 0.6, 0.8);
    EXPECT_LE(residual(s, s.scaled(Amplitude(0, -3))), 1e-12);
    EXPECT_GT(residual(s, QState::qubit("A", 0.8, 0.6)), 0.1);
}

TEST(entropy, bell_and_product) {
    const QState phi{{"A", "B"}, {r, 0, 0, r}, 1.0};
    EXPECT_NEAR(entanglement_entropy(phi, "A"), 1.0, 1e-12);
    EXPECT_NEAR(entanglement_entropy(tensor(plus("A"), plus("B")), "B"), 0.0, 1e-12);
}

TEST(restrict_wire, drops_the_wire) {
    const QState phi{{"A", "B"}, {r, 0, 0, r}, 1.0};
    const QState b = restrict_wire(phi, "A", true);
    EXPECT_EQ(b.wires, std::vector<std::string>{"B"});
    expect_amplitudes(b, {0, r});
}

TEST(qstate, renormalize_zero_throws) { EXPECT_THROW(QState({"A"}, {0, 0}, 1.0).renormalized(), Error); }
