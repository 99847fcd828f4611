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

#ifndef QSC_SEMANTICS_HPP
#define QSC_SEMANTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsc/derivation.hpp"
#include "qsc/kernel.hpp"
#include "qsc/state.hpp"

namespace qsc {

/// Denotes a formula. Atoms are basis states (X^ is |0>), qubits and
/// conjunctions superpose with the degree on the first conjunct weighting it,
/// # and the comma are tensor products, @ is a Bell-type state of the given
/// convention and 0 is the zero scalar. Throws UnboundSymbolicDegree and
/// NonDenotableSequent.
QState denote_formula(const Formula &f, const SymbolBindings *bindings = nullptr,
                      BellConvention convention = BellConvention::phi);

/// Denotes `|-{d} F1, ..., Fn` as d * (F1 (x) ... (x) Fn), wires in order of
/// appearance. A nonempty antecedent or an empty consequent has no state.
QState denote_assertion(const Sequent &s, const SymbolBindings *bindings = nullptr,
                        BellConvention convention = BellConvention::phi);

/// True for sequents denote_assertion accepts structurally.
bool is_assertion(const Sequent &s);

/// A projective measurement read off `Q_X |- X` (M1) or `Q_X |- X^` (M0).
/// Several qubits on the left, as in `Q_A, Q_C |-{b} C`, project every one of
/// them onto the polarity of the asserted bit; `degree` records the upper-fix.
struct Measurement {
    Operator projector;
    std::vector<std::string> wires;
    bool outcome = false;
    std::optional<Degree> degree;
};

/// Throws NotAMeasurementShape unless `s` is one of the shapes above.
Measurement denote_measurement(const Sequent &s);

struct NodeSoundness {
    std::string path;
    Rule rule = Rule::premise;
    /// Whether a prediction was made and compared.
    bool compared = false;
    /// Operator or identity applied, e.g. "M0 on A" or "combine_parallel".
    std::string operation;
    std::optional<QState> predicted;
    std::optional<QState> actual;
    double residual = 0.0;
    /// Denotation error, if any; such nodes fail the report.
    ErrorCode error = ErrorCode::ok;
    std::string message;
};

struct SoundnessReport {
    /// False when the tree fails the structural check; nothing is compared then.
    bool structural_ok = true;
    std::vector<NodeSoundness> per_node;
    double max_residual = 0.0;
    double tolerance = kResidualTolerance;
    bool ok = true;
    /// Denotation of the root conclusion, when it is an assertion.
    std::optional<QState> conclusion;
};

/// Checks `tree` under `mode`, then predicts every assertion node's state from
/// its premises' states through the rule's operator and compares it with the
/// node's own denotation, up to global phase and scale.
SoundnessReport verify_soundness(const Derivation &tree, LogicMode mode, double tol = kResidualTolerance,
                                 const SymbolBindings &bindings = {});

}  // namespace qsc

#endif
