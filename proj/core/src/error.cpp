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

#include "qsc/error.hpp"

namespace qsc {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ok:
            return "Ok";
        case ErrorCode::non_atomic_negation:
            return "NonAtomicNegation";
        case ErrorCode::syntax_error:
            return "SyntaxError";
        case ErrorCode::unknown_atom:
            return "UnknownAtom";
        case ErrorCode::unknown_rule:
            return "UnknownRule";
        case ErrorCode::dangling_reference:
            return "DanglingReference";
        case ErrorCode::duplicate_step_id:
            return "DuplicateStepId";
        case ErrorCode::unused_step:
            return "UnusedStep";
        case ErrorCode::cut_formula_mismatch:
            return "CutFormulaMismatch";
        case ErrorCode::visibility_violation:
            return "VisibilityViolation";
        case ErrorCode::conclusion_mismatch:
            return "ConclusionMismatch";
        case ErrorCode::context_mismatch:
            return "ContextMismatch";
        case ErrorCode::degree_mismatch:
            return "DegreeMismatch";
        case ErrorCode::schema_mismatch:
            return "SchemaMismatch";
        case ErrorCode::wrong_degrees:
            return "WrongDegrees";
        case ErrorCode::branch_failure:
            return "BranchFailure";
        case ErrorCode::join_mismatch:
            return "JoinMismatch";
        case ErrorCode::unbound_symbolic_degree:
            return "UnboundSymbolicDegree";
        case ErrorCode::non_denotable_sequent:
            return "NonDenotableSequent";
        case ErrorCode::not_a_measurement_shape:
            return "NotAMeasurementShape";
        case ErrorCode::wire_mismatch:
            return "WireMismatch";
        case ErrorCode::zero_state:
            return "ZeroState";
        case ErrorCode::not_normalized:
            return "NotNormalized";
        case ErrorCode::io_error:
            return "IoError";
    }
    return "Unknown";
}

}  // namespace qsc
