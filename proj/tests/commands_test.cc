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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "stellar/commands.h"
#include "stellar/geometry.h"

namespace stellar {
namespace {

bool all_finite(const json &j) {
    if (j.is_number_float()) return std::isfinite(j.get<double>());
    if (j.is_structured()) {
        for (const auto &x : j) {
            if (!all_finite(x)) return false;
        }
    }
    return true;
}

Complex z_of(const json &star) { return {star.at("z").at(0).get<double>(), star.at("z").at(1).get<double>()}; }

bool checks_pass(const json &doc) {
    for (const auto &c : doc.at("checks")) {
        if (!c.at("pass").get<bool>()) return false;
    }
    return true;
}

TEST(CmdStars, Examples) {
    const auto dicke = cmd_stars(R"({"d":3,"c":[[0,0],[1,0],[0,0]]})");
    EXPECT_EQ(dicke.exit_code, kExitOk);
    const json &s = dicke.document.at("stars");
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(z_of(s[0]), Complex(0.0));
    EXPECT_TRUE(s[1].at("inf").get<bool>());

    const auto ground = cmd_stars(R"({"d":2,"c":[[1,0],[0,0]]})");
    EXPECT_EQ(ground.exit_code, kExitOk);
    ASSERT_EQ(ground.document.at("stars").size(), 1u);
    EXPECT_EQ(z_of(ground.document.at("stars")[0]), Complex(0.0));

    const auto ghz = cmd_stars(R"({"d":4,"c":[[0.7071,0],[0,0],[0,0],[0.7071,0]]})");
    EXPECT_EQ(ghz.exit_code, kExitOk);
    ASSERT_EQ(ghz.document.at("stars").size(), 3u);
    for (const auto &star : ghz.document.at("stars")) {
        const Complex z = z_of(star);
        EXPECT_NEAR(std::abs(z * z * z - 1.0), 0.0, 1e-7);
        EXPECT_EQ(star.at("multiplicity").get<int>(), 1);
    }
}

TEST(CmdStars, MultiplicityAndSeparability) {
    const auto out = cmd_stars(R"({"d":3,"c":[[0.5,0],[0.7071067811865476,0],[0.5,0]]})");
    EXPECT_TRUE(out.document.at("separable").get<bool>());
    for (const auto &star : out.document.at("stars")) EXPECT_EQ(star.at("multiplicity").get<int>(), 2);
}

TEST(CmdStars, ArrayInputAnswersInKind) {
    const auto random = cmd_random(5, 100, 3);
    ASSERT_EQ(random.exit_code, kExitOk);
    const auto out = cmd_stars(random.document.dump());
    EXPECT_EQ(out.exit_code, kExitOk);
    ASSERT_TRUE(out.document.is_array());
    ASSERT_EQ(out.document.size(), 100u);
    for (const auto &doc : out.document) {
        EXPECT_EQ(doc.at("stars").size(), 4u);
        EXPECT_TRUE(checks_pass(doc));
        EXPECT_TRUE(all_finite(doc));
    }
}

TEST(CmdPerma, Examples) {
    const auto dicke = cmd_perma(R"({"d":3,"c":[[0,0],[1,0],[0,0]]})");
    EXPECT_EQ(dicke.exit_code, kExitOk);
    EXPECT_NEAR(dicke.document.at("p_d").get<double>(), 0.5, 1e-15);
    EXPECT_NEAR(dicke.document.at("concurrence").get<double>(), 1.0, 1e-15);

    const auto sep = cmd_perma(R"({"d":3,"c":[[0.5,0],[0.7071067811865476,0],[0.5,0]]})");
    EXPECT_EQ(sep.exit_code, kExitOk);
    EXPECT_NEAR(sep.document.at("p_d").get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(sep.document.at("concurrence").get<double>(), 0.0, 1e-12);

    const auto ghz = cmd_perma(R"({"d":4,"c":[[0.7071,0],[0,0],[0,0],[0.7071,0]]})");
    EXPECT_EQ(ghz.exit_code, kExitOk);
    EXPECT_NEAR(ghz.document.at("p_d").get<double>(), 0.25, 1e-10);
    EXPECT_TRUE(ghz.document.at("concurrence").is_null());
    EXPECT_NEAR(ghz.document.at("closed_forms").at("overlap").get<double>(), 0.25, 1e-10);
}

TEST(CmdPerma, DocumentShape) {
    const auto out = cmd_perma(cmd_random(5, 10, 5).document.dump());
    EXPECT_EQ(out.exit_code, kExitOk);
    for (const auto &doc : out.document) {
        EXPECT_EQ(doc.at("stars").size(), 4u);
        EXPECT_EQ(doc.at("bloch").size(), 4u);
        EXPECT_EQ(doc.at("permanent").size(), 2u);
        EXPECT_TRUE(doc.at("closed_forms").is_object());
        EXPECT_TRUE(all_finite(doc));
        EXPECT_TRUE(checks_pass(doc));
    }
    const auto big = cmd_perma(cmd_random(7, 1, 5).document.dump());
    EXPECT_TRUE(big.document.at(0).at("closed_forms").is_null());
}

TEST(CmdMetric, SingleQubit) {
    const auto out = cmd_metric(R"({"d":2,"c":[[0.6,0],[0.8,0]]})");
    EXPECT_EQ(out.exit_code, kExitOk);
    const json &m = out.document.at("metric");
    ASSERT_EQ(m.size(), 1u);
    const double g = m.at(0).at(0).at(0).get<double>();
    EXPECT_NEAR(g, metric_single_qubit(0.8 / 0.6), 1e-8);
}

TEST(CmdMetric, OrthogonalPairIsRotated) {
    const auto out = cmd_metric(R"({"d":3,"c":[[0,0],[1,0],[0,0]]})");
    EXPECT_EQ(out.exit_code, kExitOk);
    EXPECT_FALSE(out.document.at("chart").at("identity").get<bool>());
    EXPECT_EQ(out.document.at("metric").size(), 2u);
    EXPECT_TRUE(checks_pass(out.document));
    EXPECT_TRUE(all_finite(out.document));
}

TEST(CmdMetric, SeparableRejected) {
    const auto out = cmd_metric(R"({"d":3,"c":[[0.5,0],[0.7071067811865476,0],[0.5,0]]})");
    EXPECT_EQ(out.exit_code, kExitGeometry);
    EXPECT_EQ(out.document.at("error").get<std::string>(), "StarsTooClose");
}

TEST(ExitCodes, Contract) {
    EXPECT_EQ(cmd_stars("not json").exit_code, kExitUsage);
    EXPECT_EQ(cmd_stars(R"({"d":3,"c":[[1,0]]})").exit_code, kExitUsage);
    EXPECT_EQ(cmd_stars(R"({"d":2,"c":[[2,0],[0,0]]})").exit_code, kExitUsage);
    EXPECT_EQ(cmd_perma(cmd_random(22, 1, 1).document.dump()).exit_code, kExitSizeLimit);
    EXPECT_EQ(cmd_random(1, 1, 1).exit_code, kExitUsage);
    EXPECT_EQ(exit_code_for(ErrorCode::RootFindingFailed), kExitRootFinding);
    EXPECT_EQ(exit_code_for(ErrorCode::SizeLimit), kExitSizeLimit);
    EXPECT_EQ(exit_code_for(ErrorCode::StarsTooClose), kExitGeometry);
    EXPECT_EQ(exit_code_for(ErrorCode::StarAtInfinity), kExitGeometry);
    EXPECT_EQ(exit_code_for(ErrorCode::DegenerateRotation), kExitGeometry);
    EXPECT_EQ(exit_code_for(ErrorCode::ParseError), kExitUsage);
}

TEST(Documents, Deterministic) {
    const std::string input = cmd_random(6, 5, 11).document.dump();
    EXPECT_EQ(cmd_random(6, 5, 11).document.dump(), input);
    EXPECT_EQ(cmd_stars(input).document.dump(), cmd_stars(input).document.dump());
    EXPECT_EQ(cmd_perma(input).document.dump(), cmd_perma(input).document.dump());
    EXPECT_EQ(cmd_metric(input).document.dump(), cmd_metric(input).document.dump());
}

TEST(Documents, SerializationRoundTripIsBitIdentical) {
    const std::string input = cmd_random(5, 5, 13).document.dump();
    for (const auto &out : {cmd_stars(input), cmd_perma(input), cmd_metric(input)}) {
        const std::string text = out.document.dump();
        const json back = json::parse(text);
        EXPECT_EQ(back, out.document);
        EXPECT_EQ(back.dump(), text);
        EXPECT_EQ(json::parse(out.document.dump(2)).dump(), text);
    }
}

}  // namespace
}  // namespace stellar
