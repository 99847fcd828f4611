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

#ifndef QSC_TOOLS_CORPUS_HPP
#define QSC_TOOLS_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsc/derivation.hpp"
#include "qsc/state.hpp"
#include "qsc/syntax.hpp"

namespace qsc::cli {

/// A state named by wires and amplitudes; amplitudes may be alpha or beta.
struct ExpectedState {
    std::vector<std::string> wires;
    std::vector<Degree> amplitudes;

    QState resolve(const SymbolBindings &bindings) const;
};

/// One bundled derivation file and what it must establish.
struct CorpusEntry {
    std::string file;
    /// Title of the derivation the file reproduces.
    std::string title;
    /// Theorem whose conclusion and state are checked.
    std::string theorem;
    std::string conclusion;
    std::optional<ExpectedState> state;
};

const std::vector<CorpusEntry> &corpus_entries();

/// Build-time location of the bundled corpus.
std::string default_corpus_dir();

struct CorpusOptions {
    std::string dir = default_corpus_dir();
    LogicMode mode = LogicMode::basic;
    double tol = kResidualTolerance;
    SymbolBindings bindings;
};

struct EntryResult {
    const CorpusEntry *entry = nullptr;
    std::size_t theorems = 0;
    /// Input errors (unreadable or unparsable file).
    std::string input_error;
    /// "theorem/path: Code: message" for every failing node.
    std::vector<std::string> check_failures;
    std::vector<std::string> verify_failures;
    bool checked = false;
    bool verified = false;
    double max_residual = 0.0;
    bool conclusion_ok = false;
    std::optional<double> fidelity;
    bool ok = false;
};

/// Checks and verifies every entry, in table order.
std::vector<EntryResult> run_corpus(const CorpusOptions &options);

/// Reads a whole file; throws IoError.
std::string read_file(const std::string &path);

}  // namespace qsc::cli

#endif
