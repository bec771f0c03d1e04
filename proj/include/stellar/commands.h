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

#ifndef STELLAR_COMMANDS_H
#define STELLAR_COMMANDS_H

#include <cstdint>
#include <string_view>

#include "stellar/geometry.h"
#include "stellar/io.h"

namespace stellar {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitRootFinding = 3,
    kExitSizeLimit = 4,
    kExitGeometry = 5,
};

int exit_code_for(ErrorCode code);

/// Step used for the Richardson ratio in metric reports; at the default step
/// the stencil error is dominated by round-off and the ratio carries no signal.
inline constexpr double kRichardsonProbeStep = 1e-2;

struct CommandOutput {
    /// The result document, or {"error": name, "message": text} on failure.
    json document;
    int exit_code = kExitOk;
};

/// Each command accepts one StateFile or an array of them and answers in kind.
/// A failing gating check inside a document yields exit code 1.
CommandOutput cmd_stars(std::string_view input);
CommandOutput cmd_perma(std::string_view input);
CommandOutput cmd_metric(std::string_view input, double step = kDefaultMetricStep);
CommandOutput cmd_random(int d, int count, std::uint64_t seed);

json stars_document(const StateFile &file);
json perma_document(const StateFile &file);
json metric_document(const StateFile &file, double step);

}  // namespace stellar

#endif
