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

#include "stellar/io.h"

#include <cmath>
#include <random>

namespace stellar {

namespace {

[[noreturn]] void parse_error(const std::string &message) { throw Error(ErrorCode::ParseError, message); }

double finite_number(const json &j, const std::string &what) {
    if (!j.is_number()) parse_error(what + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) parse_error(what + " must be finite");
    return v;
}

}  // namespace

StateFile state_file_from_json(const json &j) {
    if (!j.is_object()) parse_error("state file must be a JSON object");
    if (!j.contains("d") || !j["d"].is_number_integer()) parse_error("field \"d\" must be an integer");
    if (!j.contains("c") || !j["c"].is_array()) parse_error("field \"c\" must be an array");

    StateFile file;
    file.d = j["d"].get<int>();
    if (file.d < 2) parse_error("d must be at least 2");
    const auto &c = j["c"];
    if (c.size() != static_cast<std::size_t>(file.d)) {
        parse_error("\"c\" has " + std::to_string(c.size()) + " entries but d = " + std::to_string(file.d));
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
        const auto &pair = c[k];
        const std::string where = "c[" + std::to_string(k) + "]";
        if (!pair.is_array() || pair.size() != 2) parse_error(where + " must be a [re, im] pair");
        file.c.emplace_back(finite_number(pair[0], where + "[0]"), finite_number(pair[1], where + "[1]"));
    }
    if (j.contains("label")) {
        if (!j["label"].is_string()) parse_error("field \"label\" must be a string");
        file.label = j["label"].get<std::string>();
    }
    return file;
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(const StateFile &file) {
    json j;
    j["d"] = file.d;
    j["c"] = json::array();
    for (const auto &c : file.c) j["c"].push_back(complex_json(c));
    if (file.label) j["label"] = *file.label;
    return j;
}

StateDocument parse_state_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
    StateDocument doc;
    if (j.is_array()) {
        doc.is_array = true;
        if (j.empty()) parse_error("state array is empty");
        for (const auto &item : j) doc.files.push_back(state_file_from_json(item));
    } else {
        doc.files.push_back(state_file_from_json(j));
    }
    return doc;
}

SymmetricState to_state(const StateFile &file) {
    double n2 = 0.0;
    for (const auto &c : file.c) n2 += std::norm(c);
    if (n2 == 0.0) throw Error(ErrorCode::AllZero, "every amplitude is zero");
    if (std::abs(std::sqrt(n2) - 1.0) > kFileNormWindow) {
        throw Error(ErrorCode::NotNormalized, "amplitude norm " + std::to_string(std::sqrt(n2)) + " is not close to 1");
    }
    return normalize(file.c);
}

json star_json(const Star &s) {
    if (s.is_infinite()) return json{{"inf", true}};
    return json{{"z", complex_json(s.z())}};
}

std::vector<StateFile> random_states(int d, int count, std::uint64_t seed) {
    if (d < 2 || count < 1) {
        throw Error(ErrorCode::RangeError, "random states need d >= 2 and count >= 1");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<StateFile> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Complex> c;
        for (int k = 0; k < d; ++k) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            c.emplace_back(re, im);
        }
        const auto state = normalize(c);
        StateFile file;
        file.d = d;
        file.c.assign(state.amplitudes().begin(), state.amplitudes().end());
        file.label = "random-" + std::to_string(seed) + "-" + std::to_string(i);
        out.push_back(std::move(file));
    }
    return out;
}

}  // namespace stellar
