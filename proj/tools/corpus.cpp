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

#include "corpus.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsc/kernel.hpp"
#include "qsc/script.hpp"
#include "qsc/semantics.hpp"

#ifndef QSC_CORPUS_DIR
#define QSC_CORPUS_DIR "corpus"
#endif

namespace qsc::cli {

namespace {

const Degree kH(1.0 / std::sqrt(2.0));
const Degree kQ(0.5);
const Degree k0(0.0);
const Degree k1(1.0);

}  // namespace

QState ExpectedState::resolve(const SymbolBindings &bindings) const {
    QState s{wires, {}, 1.0};
    for (const auto &a : amplitudes) {
        s.amplitudes.push_back(a.resolve(&bindings));
    }
    return s;
}

const std::vector<CorpusEntry> &corpus_entries() {
    static const std::vector<CorpusEntry> entries{
        {"cut-destroys-cat-1.qsc", "Measuring a cat state with a cut, outcome 1", "cut_destroys_cat_one", "|- A",
         ExpectedState{{"A"}, {k0, k1}}},
        {"cut-destroys-cat-0.qsc", "Measuring a cat state with a cut, outcome 0", "cut_destroys_cat_zero", "|- A^",
         ExpectedState{{"A"}, {k1, k0}}},
        {"cut-parallel.qsc", "Both cut outcomes joined back into the cat state", "cut_in_parallel", "|- A & A^", ExpectedState{{"A"}, {kH, kH}}},
        {"epr.qsc", "EPR macro and its expansion", "epr", "|- A # B", ExpectedState{{"A", "B"}, {k0, k0, k0, k1}}},
        {"epr-parallel.qsc", "Both Bell outcomes joined back into the pair", "epr_in_parallel", "|- Q_A @ Q_B",
         ExpectedState{{"A", "B"}, {kH, k0, k0, kH}}},
        {"h-rule.qsc", "Hadamard rule and its inverse", "h_on_zero_first", "|-{0.7071067811865476} A^",
         ExpectedState{{"A"}, {k1, k0}}},
        {"h-parallel.qsc", "Hadamard branches joined in parallel", "h_in_parallel", "|- A^", ExpectedState{{"A"}, {k1, k0}}},
        {"cnot-derivation.qsc", "C-NOT clauses from negation rules", "cnot_second_part", "|- B^, A^",
         ExpectedState{{"B", "A"}, {k1, k0, k0, k0}}},
        {"cnot-action.qsc", "C-NOT on a split control, joined to a Bell state", "cnot_action", "|- Q_B @ Q_A",
         ExpectedState{{"B", "A"}, {kH, k0, k0, kH}}},
        {"cnot-parallel.qsc", "C-NOT on both target values, joined separably", "cnot_in_parallel", "|- Q_B, Q_A",
         ExpectedState{{"B", "A"}, {kQ, kQ, kQ, kQ}}},
        {"ent.qsc", "Entangling a separable pair with H and C-NOT", "ent", "|- Q_B @ Q_A", ExpectedState{{"B", "A"}, {kH, k0, k0, kH}}},
        {"nogo.qsc", "Entangling both outcomes in parallel gives no entanglement", "nogo", "|- Q_B, Q_A",
         ExpectedState{{"B", "A"}, {kQ, kQ, kQ, kQ}}},
        {"tel.qsc", "Teleporting Q_C onto wire B", "tel", "|- Q_C{alpha, beta} @ Q_B",
         ExpectedState{{"C", "B"}, {Degree::symbol(Symbol::alpha), k0, k0, Degree::symbol(Symbol::beta)}}},
    };
    return entries;
}

std::string default_corpus_dir() { return QSC_CORPUS_DIR; }

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::io_error, "cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

std::string failure_line(const std::string &theorem, const std::string &path, ErrorCode code,
                         const std::string &message) {
    return theorem + "/" + path + ": " + std::string(error_code_name(code)) + ": " + message;
}

EntryResult run_entry(const CorpusEntry &entry, const CorpusOptions &options) {
    EntryResult r;
    r.entry = &entry;
    ProofScript script;
    try {
        script = parse_script(read_file((std::filesystem::path(options.dir) / entry.file).string()));
    } catch (const Error &e) {
        r.input_error = std::string(error_code_name(e.code())) + ": " + e.what();
        return r;
    }
    r.theorems = script.theorems.size();
    for (const auto &th : script.theorems) {
        const CheckReport report = check_derivation(th.tree, options.mode);
        for (const auto &n : report.per_node) {
            if (!n.verdict.ok()) {
                r.check_failures.push_back(failure_line(th.name, n.path, n.verdict.code, n.verdict.message));
            }
        }
    }
    r.checked = r.check_failures.empty();
    if (!r.checked) {
        return r;
    }
    const Theorem *headline = script.find(entry.theorem);
    std::optional<QState> conclusion_state;
    for (const auto &th : script.theorems) {
        const SoundnessReport report = verify_soundness(th.tree, options.mode, options.tol, options.bindings);
        r.max_residual = std::max(r.max_residual, report.max_residual);
        for (const auto &n : report.per_node) {
            if (n.error != ErrorCode::ok) {
                r.verify_failures.push_back(failure_line(th.name, n.path, n.error, n.message));
            } else if (n.residual > options.tol) {
                r.verify_failures.push_back(th.name + "/" + n.path + ": residual " + std::to_string(n.residual));
            }
        }
        if (&th == headline) {
            conclusion_state = report.conclusion;
        }
    }
    r.verified = r.verify_failures.empty();
    if (headline != nullptr) {
        try {
            r.conclusion_ok = equivalent(headline->goal(), parse_sequent(entry.conclusion, script.atoms));
        } catch (const Error &) {
            r.conclusion_ok = false;
        }
        if (entry.state && conclusion_state) {
            try {
                r.fidelity = fidelity(*conclusion_state, entry.state->resolve(options.bindings));
            } catch (const Error &) {
                r.fidelity = 0.0;
            }
        }
    }
    const bool state_ok = !entry.state || (r.fidelity && *r.fidelity >= 1.0 - options.tol);
    r.ok = r.checked && r.verified && r.conclusion_ok && state_ok;
    return r;
}

}  // namespace

std::vector<EntryResult> run_corpus(const CorpusOptions &options) {
    std::vector<EntryResult> results;
    for (const auto &entry : corpus_entries()) {
        results.push_back(run_entry(entry, options));
    }
    return results;
}

}  // namespace qsc::cli
