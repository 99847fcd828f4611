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

#ifndef QSC_ERROR_HPP
#define QSC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qsc {

enum class ErrorCode {
    ok,
    // core syntax
    non_atomic_negation,
    // script parser
    syntax_error,
    unknown_atom,
    unknown_rule,
    dangling_reference,
    duplicate_step_id,
    unused_step,
    // kernel
    cut_formula_mismatch,
    visibility_violation,
    conclusion_mismatch,
    context_mismatch,
    degree_mismatch,
    schema_mismatch,
    wrong_degrees,
    branch_failure,
    join_mismatch,
    // semantics
    unbound_symbolic_degree,
    non_denotable_sequent,
    not_a_measurement_shape,
    wire_mismatch,
    zero_state,
    not_normalized,
    // front end
    io_error,
};

/// Stable identifier used in reports, e.g. "VisibilityViolation".
std::string_view error_code_name(ErrorCode code);

/// Location of a parsed construct. Lines and columns are 1-based; `offset` is
/// the 0-based byte offset into the source text.
struct SourceSpan {
    std::size_t offset = 0;
    std::size_t line = 0;
    std::size_t column = 0;
    std::size_t length = 0;

    bool known() const { return line != 0; }
};

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message, SourceSpan span = {})
        : std::runtime_error(message), code_(code), span_(span) {}

    ErrorCode code() const { return code_; }
    const SourceSpan &span() const { return span_; }

   private:
    ErrorCode code_;
    SourceSpan span_;
};

}  // namespace qsc

#endif
