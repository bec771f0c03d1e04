// Copyright 2026 The Stellar Authors
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

#ifndef STELLAR_VERIFY_H
#define STELLAR_VERIFY_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "stellar/io.h"

namespace stellar {

inline constexpr int kMaxVerifyQubits = 8;

struct VerifyOptions {
    int max_n = 6;
    int trials = 500;
    std::uint64_t seed = 1;
};

/// One line of the verification report. Experimental lines record observations
/// that are compared against a claim but never decide the exit code.
struct VerifyLine {
    std::string name;
    int n = 0;
    bool pass = false;
    double max_residual = 0.0;
    bool experimental = false;
    json extra = json::object();
};

struct VerifyReport {
    std::vector<VerifyLine> lines;

    /// True when every non-experimental line passes.
    bool all_pass() const;
};

/// Throws RangeError unless 1 <= max_n <= 8 and trials >= 1.
VerifyReport run_verify(const VerifyOptions &options);

json to_json(const VerifyLine &line);

/// Streams one JSON object per line; returns 0 when every gating check passes,
/// 1 otherwise and 2 for invalid options.
int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err);

}  // namespace stellar

#endif
