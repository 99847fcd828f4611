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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "gtest/gtest.h"
#include "json.hpp"

using qsc::cli::run_cli;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus(const std::string &file) { return qsc::cli::default_corpus_dir() + "/" + file; }

std::filesystem::path temp_dir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("qsc_cli_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write(const std::filesystem::path &p, const std::string &text) { std::ofstream(p) << text; }

}  // namespace

TEST(cli, check_passes) {
    const CliRun r = run({"check", corpus("ent.qsc")});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("theorem ent: ok"), std::string::npos);
    EXPECT_EQ(run({"check", corpus("ent.qsc"), "--mode", "intuitionistic"}).code, 0);
}

TEST(cli, check_structural_failure_exits_one) {
    const auto dir = temp_dir("check_fail");
    write(dir / "bad.qsc", "atoms A\ntheorem t:\n  1: |- A premise\n  2: |- A^ by hrule(1)\nqed\n");
    const CliRun r = run({"check", (dir / "bad.qsc").string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("2  hrule"), std::string::npos) << r.out;
}

TEST(cli, parse_error_exits_two_with_span) {
    const auto dir = temp_dir("parse_error");
    write(dir / "bad.qsc", "atoms A\ntheorem t:\n  1: |- A & premise\nqed\n");
    const CliRun r = run({"check", (dir / "bad.qsc").string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("bad.qsc:3:"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("SyntaxError"), std::string::npos) << r.err;
    EXPECT_EQ(run({"check", (dir / "missing.qsc").string()}).code, 2);
}

TEST(cli, machine_error_is_json) {
    const auto dir = temp_dir("machine_error");
    write(dir / "bad.qsc", "atoms A\ntheorem t:\n  1: |- A by contraction()\nqed\n");
    const CliRun r = run({"check", (dir / "bad.qsc").string(), "--format", "machine"});
    EXPECT_EQ(r.code, 2);
    const auto j = nlohmann::json::parse(r.err);
    EXPECT_EQ(j["error"]["code"], "UnknownRule");
    EXPECT_EQ(j["error"]["span"]["line"], 3);
}

TEST(cli, verify_tel_state) {
    const CliRun r = run({"verify", corpus("tel.qsc"), "--alpha", "0.6", "--beta", "0.8"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("0.6|00> + 0.8|11> on (C,B)"), std::string::npos) << r.out;
}

TEST(cli, verify_machine_report) {
    const CliRun r = run({"verify", corpus("cut-parallel.qsc"), "--format", "machine"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["ok"], true);
    EXPECT_EQ(j["max_residual"], 0.0);
    EXPECT_FALSE(j["theorems"][0]["nodes"].empty());
}

TEST(cli, verify_unchecked_file_exits_three) {
    const auto dir = temp_dir("phase");
    write(dir / "bad.qsc", "atoms A\ntheorem t:\n  1: |- A premise\n  2: |- A^ by hrule(1)\nqed\n");
    EXPECT_EQ(run({"verify", (dir / "bad.qsc").string()}).code, 3);
}

TEST(cli, corpus_passes_and_is_deterministic) {
    const CliRun a = run({"corpus", "--format", "machine"});
    const CliRun b = run({"corpus", "--format", "machine"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["passed"], 13);
    EXPECT_EQ(run({"corpus", "--mode", "intuitionistic"}).code, 0);
}

TEST(cli, corpus_localizes_injected_fault) {
    const auto dir = temp_dir("fault");
    for (const auto &entry : std::filesystem::directory_iterator(qsc::cli::default_corpus_dir())) {
        std::filesystem::copy(entry.path(), dir / entry.path().filename());
    }
    std::ifstream in(dir / "ent.qsc");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    const auto at = text.find("cnot[a'](6)");
    ASSERT_NE(at, std::string::npos);
    text.replace(at, 11, "cnot[b'](6)");
    write(dir / "ent.qsc", text);

    const CliRun r = run({"corpus", "--corpus-dir", dir.string(), "--format", "machine"});
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["passed"], 12);
    for (const auto &e : j["entries"]) {
        if (e["file"] == "ent.qsc") {
            EXPECT_EQ(e["ok"], false);
            ASSERT_EQ(e["check_failures"].size(), 1U);
            EXPECT_EQ(e["check_failures"][0].get<std::string>().rfind("ent/10/8:", 0), 0U) << e["check_failures"];
        } else {
            EXPECT_EQ(e["ok"], true) << e["file"];
        }
    }
}

TEST(cli, teleport) {
    const CliRun r = run({"teleport", "--alpha", "0.6", "--beta", "0.8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Psi-"), std::string::npos);
    EXPECT_EQ(run({"teleport", "--alpha", "1", "--beta", "0"}).code, 0);
    EXPECT_EQ(run({"teleport", "--alpha", "1", "--beta", "1"}).code, 2);
}

TEST(cli, render_linear_and_out_file) {
    const auto dir = temp_dir("render");
    const auto out = dir / "ent.txt";
    EXPECT_EQ(run({"render", corpus("ent.qsc"), "--style", "linear", "--out", out.string()}).code, 0);
    std::ifstream in(out);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_NE(text.find("theorem ent:"), std::string::npos);
    EXPECT_NE(text.find("by atform("), std::string::npos);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"prove", "x"}).code, 2);
    EXPECT_EQ(run({"check", corpus("ent.qsc"), "--mode", "classical"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
