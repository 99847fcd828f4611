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

#ifndef QSC_TESTS_GENERATORS_HPP
#define QSC_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qsc/derivation.hpp"
#include "qsc/state.hpp"
#include "qsc/syntax.hpp"

namespace qsc::testing {

/// Every generator takes its engine explicitly; tests seed it with a constant.
using Rng = std::mt19937_64;

inline const std::vector<std::string> kGenAtoms{"A", "B", "C", "D"};

Degree random_degree(Rng &rng);
Formula random_formula(Rng &rng, int depth);
Sequent random_sequent(Rng &rng);
/// A well-formed tree (not necessarily a valid proof): premise leaves are
/// childless and every rule carries only the parameters it accepts.
Derivation random_derivation(Rng &rng, int depth);

/// Normalized state on 1 to kMaxWires wires, named from `wires`.
QState random_state(Rng &rng, const std::vector<std::string> &wires);

/// A script with one step that names contraction, weakening or permutation.
std::string forbidden_rule_script(Rng &rng);

/// The bundled corpus as (file name, source text), in corpus order.
std::vector<std::pair<std::string, std::string>> corpus_sources();

/// A source with one structural token removed.
struct Mutant {
    std::string text;
    std::size_t offset;
    std::string removed;
};

/// Deletes, one at a time, every token whose removal must break the grammar:
/// punctuation, the turnstile, connectives, keywords, step numbers and rule
/// names. Negation marks, primes, signs and names are left alone, since
/// removing those can leave a different but valid script.
std::vector<Mutant> structural_deletions(const std::string &source);

}  // namespace qsc::testing

#endif
