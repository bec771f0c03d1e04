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

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "stellar/commands.h"
#include "stellar/verify.h"

namespace {

// Returns false (after reporting) when the file cannot be read.
bool read_input(const std::string &path, std::string &text) {
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << stellar::json{{"error", "ParseError"}, {"message", "cannot open " + path}}.dump() << "\n";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    return true;
}

int emit(const stellar::CommandOutput &out) {
    if (out.document.contains("error") && out.exit_code != stellar::kExitOk &&
        out.exit_code != stellar::kExitCheckFailed) {
        std::cerr << out.document.dump() << "\n";
    } else {
        std::cout << out.document.dump(2) << "\n";
    }
    return out.exit_code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Majorana star representation of symmetric multiqubit states"};
    app.require_subcommand(1);

    std::string input;
    double step = stellar::kDefaultMetricStep;
    int d = 0;
    int count = 1;
    std::uint64_t seed = 0;
    stellar::VerifyOptions verify;

    auto *stars = app.add_subcommand("stars", "Majorana stars of each state, with multiplicities and residuals");
    stars->add_option("file", input, "State file, or - for standard input")->required();
    auto *perma = app.add_subcommand("perma", "Perma-concurrence, permanent, concurrence and closed forms");
    perma->add_option("file", input, "State file, or - for standard input")->required();
    auto *metric = app.add_subcommand("metric", "Fubini-Study metric tensor in an automatically chosen chart");
    metric->add_option("file", input, "State file, or - for standard input")->required();
    metric->add_option("--step", step, "Finite-difference step")->capture_default_str();
    auto *random = app.add_subcommand("random", "Seeded complex-Gaussian random states");
    random->add_option("--d", d, "Dimension d = N + 1")->required();
    random->add_option("--count", count, "Number of states")->capture_default_str();
    random->add_option("--seed", seed, "Random seed")->capture_default_str();
    auto *check = app.add_subcommand("verify", "Run every cross-check and emit one JSON line per check");
    check->add_option("--max-n", verify.max_n, "Largest qubit count")->capture_default_str();
    check->add_option("--trials", verify.trials, "Random trials per check")->capture_default_str();
    check->add_option("--seed", verify.seed, "Random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : stellar::kExitUsage;
    }

    if (*random) return emit(stellar::cmd_random(d, count, seed));
    if (*check) return stellar::cmd_verify(verify, std::cout, std::cerr);

    std::string text;
    if (!read_input(input, text)) return stellar::kExitUsage;
    if (*stars) return emit(stellar::cmd_stars(text));
    if (*perma) return emit(stellar::cmd_perma(text));
    return emit(stellar::cmd_metric(text, step));
}
