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

#include <benchmark/benchmark.h>

#include <filesystem>
#include <map>
#include <fstream>
#include <sstream>

#include "qsc/kernel.hpp"
#include "qsc/script.hpp"
#include "qsc/semantics.hpp"
#include "qsc/teleport.hpp"

namespace {

std::string corpus_text(const char *file) {
    std::ifstream in(std::filesystem::path(QSC_CORPUS_DIR) / file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const qsc::Derivation &tree(const char *file) {
    static std::map<std::string, qsc::Derivation> cache;
    auto it = cache.find(file);
    if (it == cache.end()) {
        it = cache.emplace(file, qsc::parse_script(corpus_text(file)).theorems.back().tree).first;
    }
    return it->second;
}

void parse_nogo(benchmark::State &state) {
    const std::string text = corpus_text("nogo.qsc");
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsc::parse_script(text));
    }
}
BENCHMARK(parse_nogo);

void check_nogo(benchmark::State &state) {
    const qsc::Derivation &d = tree("nogo.qsc");
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsc::check_derivation(d, qsc::LogicMode::basic));
    }
}
BENCHMARK(check_nogo);

void verify_nogo(benchmark::State &state) {
    const qsc::Derivation &d = tree("nogo.qsc");
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsc::verify_soundness(d, qsc::LogicMode::basic));
    }
}
BENCHMARK(verify_nogo);

void verify_tel(benchmark::State &state) {
    const qsc::Derivation &d = tree("tel.qsc");
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsc::verify_soundness(d, qsc::LogicMode::basic));
    }
}
BENCHMARK(verify_tel);

void render_nogo(benchmark::State &state) {
    const qsc::Derivation &d = tree("nogo.qsc");
    const auto style = state.range(0) == 0 ? qsc::RenderStyle::ascii : qsc::RenderStyle::linear;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsc::render(d, style));
    }
}
BENCHMARK(render_nogo)->Arg(0)->Arg(1);

void apply_cnot_three_wires(benchmark::State &state) {
    const qsc::QState s = qsc::tensor(qsc::tensor(qsc::QState::qubit("A", 0.6, 0.8), qsc::QState::bit("B", false)),
                                      qsc::QState::qubit("C", 0.8, 0.6));
    const qsc::Operator op = qsc::Operator::cnot("A", "C");
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsc::apply(op, s));
    }
}
BENCHMARK(apply_cnot_three_wires);

void teleport(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsc::teleport_oracle(0.6, 0.8));
    }
}
BENCHMARK(teleport);

}  // namespace

BENCHMARK_MAIN();
