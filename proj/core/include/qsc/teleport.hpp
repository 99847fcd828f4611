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

#ifndef QSC_TELEPORT_HPP
#define QSC_TELEPORT_HPP

#include <array>
#include <string>

#include "qsc/state.hpp"

namespace qsc {

/// One Bell-measurement outcome of the teleportation protocol.
struct TeleportOutcome {
    BellState bell = BellState::phi_plus;
    double probability = 0.0;
    /// Pauli correction on Bob's qubit, applied right to left: "I", "X", "Z" or "ZX".
    std::string correction;
    /// Bob's normalized state before and after the correction, as (|0>, |1>).
    std::array<Amplitude, 2> received{};
    std::array<Amplitude, 2> corrected{};
    /// |<input|corrected>|^2.
    double fidelity = 0.0;
};

struct TeleportTable {
    Amplitude alpha;
    Amplitude beta;
    std::array<TeleportOutcome, 4> outcomes;

    bool ok(double tol = kResidualTolerance) const;
};

std::string_view bell_state_name(BellState b);

/// Runs teleportation of alpha|0> + beta|1> by brute force over raw arrays:
/// |Phi+>_AB (x) |q>_C, projection of (A, C) onto each Bell state, Pauli
/// correction on B. Shares no code with the denotation layer. Throws
/// NotNormalized when | |alpha|^2 + |beta|^2 - 1 | > 1e-9.
TeleportTable teleport_oracle(Amplitude alpha, Amplitude beta);

}  // namespace qsc

#endif
