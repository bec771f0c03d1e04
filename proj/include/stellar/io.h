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

#ifndef STELLAR_IO_H
#define STELLAR_IO_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "stellar/core.h"

namespace stellar {

using json = nlohmann::json;

/// Amplitudes read from files may carry a few printed digits only; anything
/// within this distance of unit norm is rescaled, anything else is rejected.
inline constexpr double kFileNormWindow = 1e-3;

/// {"d": D, "c": [[re, im], ...], "label": "..."}.
struct StateFile {
    int d = 0;
    std::vector<Complex> c;
    std::optional<std::string> label;
};

/// Throws ParseError on schema violations.
StateFile state_file_from_json(const json &j);
json to_json(const StateFile &file);

/// A document holding either one StateFile object or an array of them.
struct StateDocument {
    std::vector<StateFile> files;
    bool is_array = false;
};

/// Throws ParseError on malformed JSON or schema violations.
StateDocument parse_state_document(std::string_view text);

/// Throws NotNormalized when the norm is outside kFileNormWindow of one.
SymmetricState to_state(const StateFile &file);

json complex_json(Complex c);
json star_json(const Star &s);

/// Complex-Gaussian amplitudes, normalized per state, reproducible from the seed.
std::vector<StateFile> random_states(int d, int count, std::uint64_t seed);

}  // namespace stellar

#endif
