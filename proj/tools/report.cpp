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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include "json.hpp"

namespace qsc::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string amplitude_text(Amplitude a) {
    if (a.imag() == 0.0) {
        return number(a.real());
    }
    if (a.real() == 0.0) {
        return number(a.imag()) + "i";
    }
    return "(" + number(a.real()) + (a.imag() < 0 ? "-" : "+") + number(std::abs(a.imag())) + "i)";
}

std::string wires_text(const std::vector<std::string> &wires) {
    std::string out = "(";
    for (std::size_t i = 0; i < wires.size(); ++i) {
        out += (i ? "," : "") + wires[i];
    }
    return out + ")";
}

Json state_json(const QState &s) {
    Json amps = Json::array();
    for (const auto &a : s.vector()) {
        amps.push_back(Json::array({a.real(), a.imag()}));
    }
    return Json{{"wires", s.wires}, {"amplitudes", amps}};
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.resize(width, ' ');
    }
    return s;
}

}  // namespace

std::string format_state(const QState &s) {
    const std::vector<Amplitude> v = s.vector();
    std::string terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) < 1e-12) {
            continue;
        }
        std::string ket;
        for (std::size_t w = 0; w < s.wires.size(); ++w) {
            ket += ((i >> (s.wires.size() - 1 - w)) & 1U) ? '1' : '0';
        }
        Amplitude a = v[i];
        std::string sign = terms.empty() ? "" : " + ";
        if (!terms.empty() && a.imag() == 0.0 && a.real() < 0.0) {
            sign = " - ";
            a = -a;
        }
        terms += sign + amplitude_text(a) + "|" + ket + ">";
    }
    if (terms.empty()) {
        terms = "0";
    }
    return terms + " on " + wires_text(s.wires);
}

std::string format_check(const std::string &file, LogicMode mode, const std::vector<TheoremCheck> &theorems,
                         Format format) {
    bool all_ok = true;
    for (const auto &[name, report] : theorems) {
        all_ok = all_ok && report.ok;
    }
    if (format == Format::machine) {
        Json list = Json::array();
        for (const auto &[name, report] : theorems) {
            Json nodes = Json::array();
            for (const auto &n : report.per_node) {
                nodes.push_back(Json{{"path", n.path},
                                     {"rule", rule_keyword(n.rule)},
                                     {"verdict", n.verdict.ok() ? "pass" : "fail"},
                                     {"code", error_code_name(n.verdict.code)},
                                     {"message", n.verdict.message}});
            }
            list.push_back(Json{{"theorem", name}, {"ok", report.ok}, {"nodes", nodes}});
        }
        return dump(Json{{"command", "check"},
                         {"file", file},
                         {"mode", mode_name(mode)},
                         {"ok", all_ok},
                         {"theorems", list}});
    }
    std::string out = "check " + file + " (mode " + std::string(mode_name(mode)) + ")\n";
    for (const auto &[name, report] : theorems) {
        out += "  theorem " + name + ": " + (report.ok ? "ok" : "FAIL") + " (" +
               std::to_string(report.per_node.size()) + " nodes)\n";
        for (const auto &n : report.per_node) {
            if (!n.verdict.ok()) {
                out += "    " + n.path + "  " + std::string(rule_keyword(n.rule)) + "  " +
                       std::string(error_code_name(n.verdict.code)) + ": " + n.verdict.message + "\n";
            }
        }
    }
    out += std::string("result: ") + (all_ok ? "pass" : "fail") + "\n";
    return out;
}

std::string format_verify(const std::string &file, double tol, const SymbolBindings &bindings,
                          const std::vector<TheoremSoundness> &theorems, Format format) {
    bool all_ok = true;
    double worst = 0.0;
    for (const auto &[name, report] : theorems) {
        all_ok = all_ok && report.ok;
        worst = std::max(worst, report.max_residual);
    }
    if (format == Format::machine) {
        Json list = Json::array();
        for (const auto &[name, report] : theorems) {
            Json nodes = Json::array();
            for (const auto &n : report.per_node) {
                Json node{{"path", n.path}, {"rule", rule_keyword(n.rule)}, {"compared", n.compared},
                          {"operation", n.operation}, {"residual", n.residual},
                          {"code", error_code_name(n.error)}, {"message", n.message}};
                node["predicted"] = n.predicted ? state_json(*n.predicted) : Json(nullptr);
                node["actual"] = n.actual ? state_json(*n.actual) : Json(nullptr);
                nodes.push_back(node);
            }
            Json t{{"theorem", name},
                   {"ok", report.ok},
                   {"structural_ok", report.structural_ok},
                   {"max_residual", report.max_residual}};
            t["conclusion"] = report.conclusion ? state_json(*report.conclusion) : Json(nullptr);
            t["nodes"] = nodes;
            list.push_back(t);
        }
        return dump(Json{{"command", "verify"},
                         {"file", file},
                         {"tolerance", tol},
                         {"alpha", Json::array({bindings.alpha.real(), bindings.alpha.imag()})},
                         {"beta", Json::array({bindings.beta.real(), bindings.beta.imag()})},
                         {"ok", all_ok},
                         {"max_residual", worst},
                         {"theorems", list}});
    }
    std::string out = "verify " + file + " (tol " + number(tol) + ", alpha " + amplitude_text(bindings.alpha) +
                      ", beta " + amplitude_text(bindings.beta) + ")\n";
    for (const auto &[name, report] : theorems) {
        out += "  theorem " + name + ": " + (report.ok ? "ok" : "FAIL") + ", max residual " +
               number(report.max_residual) + "\n";
        for (const auto &n : report.per_node) {
            if (n.error != ErrorCode::ok) {
                out += "    " + n.path + "  " + std::string(rule_keyword(n.rule)) + "  " +
                       std::string(error_code_name(n.error)) + ": " + n.message + "\n";
            } else if (n.compared) {
                out += "    " + pad(n.path, 12) + " " + pad(std::string(rule_keyword(n.rule)), 12) + " " +
                       pad(n.operation, 18) + " residual " + number(n.residual) + "\n";
            }
        }
        if (report.conclusion) {
            out += "    conclusion: " + format_state(*report.conclusion) + "\n";
        }
    }
    out += std::string("result: ") + (all_ok ? "pass" : "fail") + "\n";
    return out;
}

std::string format_corpus(const std::vector<EntryResult> &results, LogicMode mode, Format format) {
    std::size_t passed = 0;
    for (const auto &r : results) {
        passed += r.ok ? 1 : 0;
    }
    if (format == Format::machine) {
        Json list = Json::array();
        for (const auto &r : results) {
            Json e{{"file", r.entry->file},
                   {"title", r.entry->title},
                   {"ok", r.ok},
                   {"theorems", r.theorems},
                   {"input_error", r.input_error},
                   {"checked", r.checked},
                   {"verified", r.verified},
                   {"conclusion_ok", r.conclusion_ok},
                   {"max_residual", r.max_residual}};
            e["fidelity"] = r.fidelity ? Json(*r.fidelity) : Json(nullptr);
            e["check_failures"] = r.check_failures;
            e["verify_failures"] = r.verify_failures;
            list.push_back(e);
        }
        return dump(Json{{"command", "corpus"},
                         {"mode", mode_name(mode)},
                         {"passed", passed},
                         {"total", results.size()},
                         {"ok", passed == results.size()},
                         {"entries", list}});
    }
    std::string out = "corpus (mode " + std::string(mode_name(mode)) + ")\n";
    for (const auto &r : results) {
        std::string line = "  " + pad(r.ok ? "ok" : "FAIL", 5) + pad(r.entry->file, 24) + pad(r.entry->title, 40);
        if (!r.input_error.empty()) {
            line += "input error";
        } else {
            line += std::string("check ") + (r.checked ? "ok" : "fail");
            if (r.checked) {
                line += std::string(", verify ") + (r.verified ? "ok" : "fail") + ", conclusion " +
                        (r.conclusion_ok ? "ok" : "mismatch");
                if (r.fidelity) {
                    line += ", fidelity " + number(*r.fidelity);
                }
            }
        }
        out += line + "\n";
        if (!r.input_error.empty()) {
            out += "      " + r.input_error + "\n";
        }
        for (const auto &f : r.check_failures) {
            out += "      " + f + "\n";
        }
        for (const auto &f : r.verify_failures) {
            out += "      " + f + "\n";
        }
    }
    out += "result: " + std::to_string(passed) + "/" + std::to_string(results.size()) + " pass\n";
    return out;
}

std::string format_teleport(const TeleportTable &table, double tol, Format format) {
    const bool ok = table.ok(tol);
    if (format == Format::machine) {
        Json rows = Json::array();
        for (const auto &o : table.outcomes) {
            rows.push_back(Json{{"outcome", bell_state_name(o.bell)},
                                {"probability", o.probability},
                                {"correction", o.correction},
                                {"bob", Json::array({Json::array({o.corrected[0].real(), o.corrected[0].imag()}),
                                                     Json::array({o.corrected[1].real(), o.corrected[1].imag()})})},
                                {"fidelity", o.fidelity}});
        }
        return dump(Json{{"command", "teleport"},
                         {"alpha", Json::array({table.alpha.real(), table.alpha.imag()})},
                         {"beta", Json::array({table.beta.real(), table.beta.imag()})},
                         {"tolerance", tol},
                         {"ok", ok},
                         {"outcomes", rows}});
    }
    std::string out = "teleport alpha " + amplitude_text(table.alpha) + ", beta " + amplitude_text(table.beta) + "\n";
    out += "  outcome  probability  correction  bob state                fidelity\n";
    for (const auto &o : table.outcomes) {
        const QState bob{{"B"}, {o.corrected[0], o.corrected[1]}, 1.0};
        out += "  " + pad(std::string(bell_state_name(o.bell)), 9) + pad(number(o.probability), 13) +
               pad(o.correction, 12) + pad(format_state(bob), 25) + number(o.fidelity) + "\n";
    }
    out += std::string("result: ") + (ok ? "pass" : "fail") + "\n";
    return out;
}

std::string format_error(const std::string &file, const Error &e, std::string_view source, Format format) {
    const SourceSpan &s = e.span();
    if (format == Format::machine) {
        Json j{{"file", file}, {"code", error_code_name(e.code())}, {"message", e.what()}};
        j["span"] = s.known() ? Json{{"line", s.line}, {"column", s.column}, {"length", s.length}} : Json(nullptr);
        return dump(Json{{"error", j}});
    }
    std::string out = file;
    if (s.known()) {
        out += ":" + std::to_string(s.line) + ":" + std::to_string(s.column);
    }
    out += ": " + std::string(error_code_name(e.code())) + ": " + e.what() + "\n";
    if (s.known() && s.offset <= source.size()) {
        const std::size_t begin = s.offset - (s.column - 1);
        const std::size_t end = source.find('\n', begin);
        const std::string_view line = source.substr(begin, end == std::string_view::npos ? end : end - begin);
        out += "  " + std::string(line) + "\n  " + std::string(s.column - 1, ' ') +
               std::string(std::max<std::size_t>(1, std::min(s.length, line.size() + 1 - s.column + 1)), '^') + "\n";
    }
    return out;
}

}  // namespace qsc::cli
