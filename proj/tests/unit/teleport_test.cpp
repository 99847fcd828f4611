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

#include "gtest/gtest.h"

using namespace qsc;

TEST(teleport_oracle, basis_input) {
    const TeleportTable t = teleport_oracle(1, 0);
    for (const auto &o : t.outcomes) {
        EXPECT_NEAR(o.probability, 0.25, 1e-12);
        EXPECT_NEAR(std::abs(o.corrected[0]), 1.0, 1e-12);
        EXPECT_NEAR(o.fidelity, 1.0, 1e-12);
    }
    EXPECT_TRUE(t.ok());
}

TEST(teleport_oracle, plus_input) {
    const double r = 1.0 / std::sqrt(2.0);
    const TeleportTable t = teleport_oracle(r, r);
    for (const auto &o : t.outcomes) {
        EXPECT_NEAR(o.probability, 0.25, 1e-12);
        EXPECT_NEAR(o.fidelity, 1.0, 1e-12);
    }
}

TEST(teleport_oracle, corrections_per_outcome) {
    const TeleportTable t = teleport_oracle(0.6, 0.8);
    EXPECT_EQ(t.outcomes[0].bell, BellState::phi_plus);
    EXPECT_EQ(t.outcomes[0].correction, "I");
    EXPECT_EQ(t.outcomes[1].correction, "Z");
    EXPECT_EQ(t.outcomes[2].correction, "X");
    EXPECT_EQ(t.outcomes[3].correction, "ZX");
    // Before correction Psi+ leaves beta|0> + alpha|1>.
    EXPECT_NEAR(std::abs(t.outcomes[2].received[0] - Amplitude(0.8)), 0.0, 1e-12);
    EXPECT_TRUE(t.ok());
}

TEST(teleport_oracle, complex_amplitudes) {
    const TeleportTable t = teleport_oracle(Amplitude(0.6, 0.0), Amplitude(0.0, 0.8));
    for (const auto &o : t.outcomes) {
        EXPECT_NEAR(o.fidelity, 1.0, 1e-12);
    }
}

TEST(teleport_oracle, rejects_unnormalized) {
    try {
        teleport_oracle(1, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::not_normalized);
    }
}

TEST(teleport_oracle, names) {
    EXPECT_EQ(bell_state_name(BellState::phi_plus), "Phi+");
    EXPECT_EQ(bell_state_name(BellState::psi_minus), "Psi-");
}
