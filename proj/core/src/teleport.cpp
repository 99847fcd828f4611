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

#include "qsc/teleport.hpp"

#include <cmath>

namespace qsc {

namespace {

using Pair = std::array<Amplitude, 2>;

// Coefficients of a Bell state over (A, C), indexed [a][c].
std::array<std::array<double, 2>, 2> bell_coefficients(BellState b) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (b) {
        case BellState::phi_plus:
            return {{{h, 0.0}, {0.0, h}}};
        case BellState::phi_minus:
            return {{{h, 0.0}, {0.0, -h}}};
        case BellState::psi_plus:
            return {{{0.0, h}, {h, 0.0}}};
        case BellState::psi_minus:
            return {{{0.0, h}, {-h, 0.0}}};
    }
    return {};
}

Pair pauli_x(const Pair &v) { return {v[1], v[0]}; }
Pair pauli_z(const Pair &v) { return {v[0], -v[1]}; }

}  // namespace

std::string_view bell_state_name(BellState b) {
    switch (b) {
        case BellState::phi_plus:
            return "Phi+";
        case BellState::phi_minus:
            return "Phi-";
        case BellState::psi_plus:
            return "Psi+";
        case BellState::psi_minus:
            return "Psi-";
    }
    return "?";
}

bool TeleportTable::ok(double tol) const {
    for (const auto &o : outcomes) {
        if (std::abs(o.fidelity - 1.0) > tol) {
            return false;
        }
    }
    return true;
}

TeleportTable teleport_oracle(Amplitude alpha, Amplitude beta) {
    const double total = std::norm(alpha) + std::norm(beta);
    if (std::abs(total - 1.0) > kResidualTolerance) {
        throw Error(ErrorCode::not_normalized,
                    "|alpha|^2 + |beta|^2 = " + std::to_string(total) + ", expected 1");
    }
    // psi[a][b][c] for |Phi+>_AB (x) (alpha|0> + beta|1>)_C.
    const double h = 1.0 / std::sqrt(2.0);
    Amplitude psi[2][2][2];
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
                psi[a][b][c] = (a == b ? h : 0.0) * (c == 0 ? alpha : beta);
            }
        }
    }
    TeleportTable table{alpha, beta, {}};
    const BellState order[] = {BellState::phi_plus, BellState::phi_minus, BellState::psi_plus, BellState::psi_minus};
    for (int k = 0; k < 4; ++k) {
        const auto coeff = bell_coefficients(order[k]);
        Pair bob{0.0, 0.0};
        for (int b = 0; b < 2; ++b) {
            for (int a = 0; a < 2; ++a) {
                for (int c = 0; c < 2; ++c) {
                    bob[b] += coeff[a][c] * psi[a][b][c];
                }
            }
        }
        TeleportOutcome &o = table.outcomes[k];
        o.bell = order[k];
        o.probability = std::norm(bob[0]) + std::norm(bob[1]);
        const double n = std::sqrt(o.probability);
        o.received = {bob[0] / n, bob[1] / n};
        switch (order[k]) {
            case BellState::phi_plus:
                o.correction = "I";
                o.corrected = o.received;
                break;
            case BellState::phi_minus:
                o.correction = "Z";
                o.corrected = pauli_z(o.received);
                break;
            case BellState::psi_plus:
                o.correction = "X";
                o.corrected = pauli_x(o.received);
                break;
            case BellState::psi_minus:
                o.correction = "ZX";
                o.corrected = pauli_z(pauli_x(o.received));
                break;
        }
        o.fidelity = std::norm(std::conj(alpha) * o.corrected[0] + std::conj(beta) * o.corrected[1]);
    }
    return table;
}

}  // namespace qsc
