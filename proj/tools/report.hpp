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

#ifndef QSC_TOOLS_REPORT_HPP
#define QSC_TOOLS_REPORT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corpus.hpp"
#include "qsc/kernel.hpp"
#include "qsc/semantics.hpp"
#include "qsc/teleport.hpp"

namespace qsc::cli {

/// human: aligned text for reading; machine: JSON with a fixed key order.
enum class Format { human, machine };

using TheoremCheck = std::pair<std::string, CheckReport>;
using TheoremSoundness = std::pair<std::string, SoundnessReport>;

/// e.g. "0.6|00> + 0.8|11> on (C,B)".
std::string format_state(const QState &s);

std::string format_check(const std::string &file, LogicMode mode, const std::vector<TheoremCheck> &theorems,
                         Format format);

std::string format_verify(const std::string &file, double tol, const SymbolBindings &bindings,
                          const std::vector<TheoremSoundness> &theorems, Format format);

std::string format_corpus(const std::vector<EntryResult> &results, LogicMode mode, Format format);

std::string format_teleport(const TeleportTable &table, double tol, Format format);

/// A located input error; shows the offending source line when `source` is given.
std::string format_error(const std::string &file, const Error &e, std::string_view source, Format format);

}  // namespace qsc::cli

#endif
