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

#include <algorithm>
#include <set>

#include "qsc/script.hpp"

namespace qsc {

namespace {

std::string params_text(Rule rule, const RuleParams &p) {
    std::vector<std::string> items;
    for (const auto &f : p.formulas) {
        items.push_back(to_string(f));
    }
    if (rule == Rule::parallel_join) {
        items.insert(items.begin(), p.join == Rule::at_form ? "at" : "and");
    }
    if (p.convention) {
        items.emplace_back(convention_name(*p.convention));
    }
    if (p.clause) {
        items.emplace_back(clause_name(*p.clause));
    }
    if (items.empty()) {
        return "";
    }
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i ? ", " : "") + items[i];
    }
    return out + "]";
}

void collect_atoms(const Derivation &d, std::set<std::string> &out) {
    for (const auto &name : atom_names(d.conclusion)) {
        out.insert(name);
    }
    for (const auto &f : d.params.formulas) {
        for (const auto &name : atom_names(f)) {
            out.insert(name);
        }
    }
    for (const auto &p : d.premises) {
        collect_atoms(p, out);
    }
}

struct LinearWriter {
    std::vector<const Derivation *> emitted;
    std::string body;

    std::size_t emit(const Derivation &d) {
        for (std::size_t i = 0; i < emitted.size(); ++i) {
            if (*emitted[i] == d) {
                return i + 1;
            }
        }
        std::vector<std::size_t> ids;
        for (const auto &p : d.premises) {
            ids.push_back(emit(p));
        }
        emitted.push_back(&d);
        const std::size_t id = emitted.size();
        body += "  " + std::to_string(id) + ": " + to_string(d.conclusion);
        if (d.rule == Rule::premise) {
            body += " premise\n";
            return id;
        }
        body += " by " + std::string(rule_keyword(d.rule)) + params_text(d.rule, d.params) + "(";
        for (std::size_t i = 0; i < ids.size(); ++i) {
            body += (i ? ", " : "") + std::to_string(ids[i]);
        }
        body += ")\n";
        return id;
    }
};

/// A rectangle of text; every line is padded to `width`.
struct Block {
    std::vector<std::string> lines;
    std::size_t width = 0;
};

Block ascii_block(const Derivation &d) {
    const std::string conclusion = to_string(d.conclusion);
    if (d.premises.empty()) {
        std::string line = conclusion + "   [" + rule_label(d.rule, d.params) + "]";
        return Block{{line}, line.size()};
    }
    constexpr std::size_t kGap = 3;
    std::vector<Block> parts;
    std::size_t height = 0;
    std::size_t top_width = 0;
    for (const auto &p : d.premises) {
        parts.push_back(ascii_block(p));
        height = std::max(height, parts.back().lines.size());
        top_width += parts.back().width;
    }
    top_width += kGap * (parts.size() - 1);
    std::vector<std::string> top(height);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Block &b = parts[i];
        const std::size_t pad = height - b.lines.size();
        for (std::size_t row = 0; row < height; ++row) {
            if (i > 0) {
                top[row] += std::string(kGap, ' ');
            }
            top[row] += row < pad ? std::string(b.width, ' ') : b.lines[row - pad];
        }
    }
    const std::size_t bar = std::max(top_width, conclusion.size());
    const std::string label = "  " + rule_label(d.rule, d.params);
    Block out;
    out.width = bar + label.size();
    auto padded = [&](std::string s, std::size_t indent) {
        s.insert(0, indent, ' ');
        s.resize(out.width, ' ');
        return s;
    };
    for (const auto &row : top) {
        out.lines.push_back(padded(row, (bar - top_width) / 2));
    }
    out.lines.push_back(padded(std::string(bar, '-') + label, 0));
    out.lines.push_back(padded(conclusion, (bar - conclusion.size()) / 2));
    return out;
}

std::string trim_right(std::string s) {
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
}

}  // namespace

std::string render(const Derivation &tree, RenderStyle style, std::string_view name) {
    if (style == RenderStyle::ascii) {
        std::string out;
        for (const auto &line : ascii_block(tree).lines) {
            out += trim_right(line) + "\n";
        }
        return out;
    }
    std::set<std::string> atoms;
    collect_atoms(tree, atoms);
    std::string out = "atoms";
    for (const auto &a : atoms) {
        out += " " + a;
    }
    LinearWriter writer;
    writer.emit(tree);
    out += "\n\ntheorem " + std::string(name) + ":\n" + writer.body + "qed\n";
    return out;
}

}  // namespace qsc
