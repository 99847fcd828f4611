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

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "corpus.hpp"
#include "qsc/error.hpp"
#include "qsc/kernel.hpp"
#include "qsc/script.hpp"
#include "qsc/semantics.hpp"
#include "qsc/teleport.hpp"
#include "report.hpp"

namespace qsc::cli {

namespace {

struct Options {
    std::string file;
    std::string mode = "basic";
    double tol = kResidualTolerance;
    std::string alpha = "0.6";
    std::string beta = "0.8";
    std::string format = "human";
    std::string out;
    std::string corpus_dir = default_corpus_dir();
    std::string style = "ascii";
    std::string theorem;
};

LogicMode to_mode(const std::string &s) {
    return s == "basic" ? LogicMode::basic : LogicMode::intuitionistic_left;
}

Format to_format(const std::string &s) { return s == "machine" ? Format::machine : Format::human; }

SymbolBindings to_bindings(const Options &o) {
    const Degree a = parse_degree(o.alpha);
    const Degree b = parse_degree(o.beta);
    if (a.is_symbolic() || b.is_symbolic()) {
        throw Error(ErrorCode::syntax_error, "--alpha and --beta must be numeric");
    }
    return SymbolBindings{a.value(), b.value()};
}

/// Writes to --out when given, else to `out`.
void emit(const Options &o, const std::string &text, std::ostream &out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) {
        throw Error(ErrorCode::io_error, "cannot write " + o.out);
    }
    f << text;
}

std::vector<const Theorem *> selected(const ProofScript &script, const Options &o) {
    std::vector<const Theorem *> result;
    for (const auto &t : script.theorems) {
        if (o.theorem.empty() || t.name == o.theorem) {
            result.push_back(&t);
        }
    }
    if (result.empty()) {
        throw Error(ErrorCode::dangling_reference, "no theorem named " + o.theorem);
    }
    return result;
}

int run_check(const Options &o, const ProofScript &script, std::ostream &out) {
    const LogicMode mode = to_mode(o.mode);
    std::vector<TheoremCheck> results;
    bool ok = true;
    for (const Theorem *t : selected(script, o)) {
        results.emplace_back(t->name, check_derivation(t->tree, mode));
        ok = ok && results.back().second.ok;
    }
    emit(o, format_check(o.file, mode, results, to_format(o.format)), out);
    return ok ? kExitPass : kExitFail;
}

int run_verify(const Options &o, const ProofScript &script, std::ostream &out) {
    const LogicMode mode = to_mode(o.mode);
    const SymbolBindings bindings = to_bindings(o);
    std::vector<TheoremSoundness> results;
    bool ok = true;
    bool structural = true;
    for (const Theorem *t : selected(script, o)) {
        results.emplace_back(t->name, verify_soundness(t->tree, mode, o.tol, bindings));
        ok = ok && results.back().second.ok;
        structural = structural && results.back().second.structural_ok;
    }
    emit(o, format_verify(o.file, o.tol, bindings, results, to_format(o.format)), out);
    if (!structural) {
        return kExitNotChecked;
    }
    return ok ? kExitPass : kExitFail;
}

int run_render(const Options &o, const ProofScript &script, std::ostream &out) {
    const RenderStyle style = o.style == "linear" ? RenderStyle::linear : RenderStyle::ascii;
    std::string text;
    for (const Theorem *t : selected(script, o)) {
        if (style == RenderStyle::ascii) {
            text += "theorem " + t->name + ":\n";
        }
        text += render(t->tree, style, t->name);
        if (style == RenderStyle::ascii) {
            text += "\n";
        }
    }
    emit(o, text, out);
    return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Checks, verifies and renders quantum sequent derivations."};
    app.name("qsc");
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> modes{"basic", "intuitionistic", "intuitionistic-left"};
    const std::vector<std::string> formats{"human", "machine"};
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember(formats));
        cmd->add_option("--out", o.out, "Write the report to this file");
    };
    auto add_mode = [&](CLI::App *cmd) {
        cmd->add_option("--mode", o.mode, "Logic mode")->check(CLI::IsMember(modes));
    };
    auto add_values = [&](CLI::App *cmd) {
        cmd->add_option("--tol", o.tol, "Residual tolerance")->check(CLI::PositiveNumber);
        cmd->add_option("--alpha", o.alpha, "Value bound to alpha");
        cmd->add_option("--beta", o.beta, "Value bound to beta");
    };

    CLI::App *check = app.add_subcommand("check", "Check every rule application");
    check->add_option("file", o.file, "Proof script")->required();
    check->add_option("--theorem", o.theorem, "Only this theorem");
    add_mode(check);
    add_common(check);

    CLI::App *verify = app.add_subcommand("verify", "Compare each step with the state-vector semantics");
    verify->add_option("file", o.file, "Proof script")->required();
    verify->add_option("--theorem", o.theorem, "Only this theorem");
    add_mode(verify);
    add_values(verify);
    add_common(verify);

    CLI::App *render_cmd = app.add_subcommand("render", "Print derivation trees");
    render_cmd->add_option("file", o.file, "Proof script")->required();
    render_cmd->add_option("--theorem", o.theorem, "Only this theorem");
    render_cmd->add_option("--style", o.style, "ascii tree or linear script")
        ->check(CLI::IsMember({"ascii", "linear"}));
    render_cmd->add_option("--out", o.out, "Write to this file");

    CLI::App *corpus = app.add_subcommand("corpus", "Check and verify the bundled derivations");
    corpus->add_option("--corpus-dir", o.corpus_dir, "Directory holding the .qsc files");
    add_mode(corpus);
    add_values(corpus);
    add_common(corpus);

    CLI::App *teleport = app.add_subcommand("teleport", "Tabulate the teleportation outcomes");
    teleport->add_option("--tol", o.tol, "Fidelity tolerance")->check(CLI::PositiveNumber);
    teleport->add_option("--alpha", o.alpha, "Amplitude of |0>");
    teleport->add_option("--beta", o.beta, "Amplitude of |1>");
    add_common(teleport);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError &e) {
        err << "qsc: " << e.what() << "\n";
        return kExitInputError;
    }

    std::string source;
    try {
        if (*corpus) {
            CorpusOptions co{o.corpus_dir, to_mode(o.mode), o.tol, to_bindings(o)};
            const std::vector<EntryResult> results = run_corpus(co);
            emit(o, format_corpus(results, co.mode, to_format(o.format)), out);
            for (const auto &r : results) {
                if (!r.ok) {
                    return kExitFail;
                }
            }
            return kExitPass;
        }
        if (*teleport) {
            const SymbolBindings b = to_bindings(o);
            const TeleportTable table = teleport_oracle(b.alpha, b.beta);
            emit(o, format_teleport(table, o.tol, to_format(o.format)), out);
            return table.ok(o.tol) ? kExitPass : kExitFail;
        }
        source = read_file(o.file);
        const ProofScript script = parse_script(source);
        if (*check) {
            return run_check(o, script, out);
        }
        if (*verify) {
            return run_verify(o, script, out);
        }
        return run_render(o, script, out);
    } catch (const Error &e) {
        err << format_error(o.file.empty() ? "qsc" : o.file, e, source, to_format(o.format));
        return kExitInputError;
    }
}

}  // namespace qsc::cli
