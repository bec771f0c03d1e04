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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "stellar/majorana.h"
#include "stellar/oracle.h"
#include "expect_error.h"
#include "test_util.h"

namespace stellar {
namespace {

using test_support::code_of;
using test_support::matched_distance;
using test_support::Rng;

SymmetricState state(std::vector<Complex> c) { return normalize(c); }

StarSet finite_stars(std::initializer_list<Complex> zs) {
    std::vector<Star> s;
    for (auto z : zs) s.push_back(Star::finite(z));
    return StarSet(std::move(s));
}

// Random multiset with stars at infinity and repeated stars mixed in.
StarSet awkward_stars(Rng &rng, int n) {
    std::vector<Star> s;
    while (static_cast<int>(s.size()) < n) {
        const int kind = rng.integer(0, 3);
        if (kind == 0) {
            s.push_back(Star::infinity());
        } else if (kind == 1 && !s.empty()) {
            s.push_back(s[static_cast<std::size_t>(rng.integer(0, static_cast<int>(s.size()) - 1))]);
        } else {
            s.push_back(rng.star());
        }
    }
    return StarSet(std::move(s));
}

TEST(MajoranaPolynomialTest, CoefficientsAndDegree) {
    const double r = std::sqrt(0.5);
    const MajoranaPolynomial p(state({r, 0.0, 0.0, r}));
    ASSERT_EQ(p.coefficients().size(), 4u);
    // c0 z^3 - sqrt3 c1 z^2 + sqrt3 c2 z - c3
    EXPECT_NEAR(std::abs(p.coefficients()[0] - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(p.coefficients()[3] + r), 0.0, 1e-15);
    EXPECT_EQ(p.k_max(), 3);
    EXPECT_NEAR(std::abs(p.evaluate(1.0)), 0.0, 1e-15);
    EXPECT_EQ(MajoranaPolynomial(state({1.0, 0.0, 0.0})).k_max(), 0);
    EXPECT_EQ(MajoranaPolynomial(state({0.0, 1.0, 0.0})).k_max(), 1);
}

TEST(StarsFromState, Examples) {
    const auto ground = stars_from_state(state({1.0, 0.0, 0.0}));
    EXPECT_LT(matched_distance(ground, finite_stars({0.0, 0.0})), 1e-15);

    const auto dicke = stars_from_state(state({0.0, 1.0, 0.0}));
    EXPECT_LT(matched_distance(dicke, StarSet({Star::finite(0.0), Star::infinity()})), 1e-15);
    EXPECT_TRUE(dicke[1].is_infinite());  // infinity sorts last

    const auto sep = stars_from_state(state({0.5, std::sqrt(0.5), 0.5}));
    EXPECT_LT(matched_distance(sep, finite_stars({1.0, 1.0})), 1e-12);

    const double r = std::sqrt(0.5);
    const auto ghz = stars_from_state(state({r, 0.0, 0.0, r}));
    const Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
    EXPECT_LT(matched_distance(ghz, finite_stars({1.0, w, std::conj(w)})), 1e-12);
}

TEST(StarsFromState, AllAtInfinity) {
    const auto top = stars_from_state(state({0.0, 0.0, 1.0}));
    EXPECT_TRUE(top[0].is_infinite());
    EXPECT_TRUE(top[1].is_infinite());
}

TEST(StarsFromState, ResidualsWithinTolerance) {
    Rng rng(71);
    for (int n = 1; n <= 20; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto s = rng.state(n);
            const MajoranaPolynomial p(s);
            const auto stars = stars_from_state(s);
            ASSERT_EQ(stars.size(), n);
            for (const auto &star : stars.stars) EXPECT_LE(p.relative_residual(star), kDefaultRootTol);
        }
    }
}

TEST(StarsFromState, SizeLimit) {
    EXPECT_EQ(code_of([] { stars_from_state(normalize(std::vector<Complex>(22, 1.0))); }), ErrorCode::SizeLimit);
}

TEST(StarsFromState, Deterministic) {
    Rng rng(73);
    const auto s = rng.state(9);
    const auto a = stars_from_state(s);
    const auto b = stars_from_state(s);
    for (int i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].alpha(), b[i].alpha());
        EXPECT_EQ(a[i].beta(), b[i].beta());
    }
}

TEST(StateFromStars, Examples) {
    const auto ground = state_from_stars(finite_stars({0.0, 0.0, 0.0, 0.0}));
    EXPECT_NEAR(fidelity(ground, state({1.0, 0.0, 0.0, 0.0, 0.0})), 1.0, 1e-15);
    const auto sep = state_from_stars(finite_stars({1.0, 1.0}));
    EXPECT_NEAR(std::abs(sep[0] - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(sep[1] - std::sqrt(0.5)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(sep[2] - 0.5), 0.0, 1e-15);
    const auto dicke = state_from_stars(StarSet({Star::finite(0.0), Star::infinity()}));
    EXPECT_NEAR(fidelity(dicke, state({0.0, 1.0, 0.0})), 1.0, 1e-15);
}

TEST(StateFromStars, AgreesWithSymmetrizedProduct) {
    Rng rng(79);
    for (int n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const StarSet stars = trial < 3 ? awkward_stars(rng, n) : rng.stars(n);
            const auto oracle_state = normalize(oracle::project(oracle::symmetrized_product(stars).state));
            EXPECT_GE(fidelity(state_from_stars(stars), oracle_state), 1.0 - 1e-10) << "n=" << n;
        }
    }
}

TEST(StateFromStars, PermutationInvariant) {
    Rng rng(83);
    for (int n = 2; n <= 10; ++n) {
        StarSet stars = rng.stars(n);
        const auto a = state_from_stars(stars);
        std::shuffle(stars.stars.begin(), stars.stars.end(), rng.engine());
        EXPECT_GE(fidelity(a, state_from_stars(stars)), 1.0 - 1e-12);
    }
}

TEST(RoundTrip, StateStarsState) {
    Rng rng(89);
    for (int d = 3; d <= 11; ++d) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto s = rng.state(d - 1);
            EXPECT_GE(fidelity(state_from_stars(stars_from_state(s)), s), 1.0 - 1e-9) << "d=" << d;
        }
    }
}

TEST(RoundTrip, StarsStateStars) {
    Rng rng(97);
    for (int n = 1; n <= 10; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            const StarSet stars = trial % 2 == 0 ? awkward_stars(rng, n) : rng.stars(n);
            const auto back = stars_from_state(state_from_stars(stars));
            EXPECT_LE(matched_distance(stars, back), 1e-7) << "n=" << n << " trial=" << trial;
        }
    }
}

TEST(RoundTrip, SeparableUpToTwenty) {
    Rng rng(101);
    for (int n = 2; n <= 20; ++n) {
        const Star s = rng.star();
        const StarSet stars(std::vector<Star>(static_cast<std::size_t>(n), s));
        const auto st = coherent_state(n, s);
        EXPECT_LE(matched_distance(stars, stars_from_state(st)), 1e-7) << "n=" << n;
        const auto sep = is_separable(st);
        EXPECT_TRUE(sep.separable) << "n=" << n;
    }
}

TEST(QuadraticStars, MatchGeneralRootFinder) {
    Rng rng(103);
    for (int trial = 0; trial < 500; ++trial) {
        const auto s = rng.state(2);
        const auto roots = quadratic_stars(s);
        const StarSet closed({Star::finite(roots[0]), Star::finite(roots[1])});
        EXPECT_LE(matched_distance(closed, stars_from_state(s)), 1e-10);
    }
    EXPECT_EQ(code_of([] { quadratic_stars(normalize(std::vector<Complex>{0.0, 1.0, 0.0})); }), ErrorCode::RangeError);
    EXPECT_EQ(code_of([] { quadratic_stars(normalize(std::vector<Complex>{1.0, 1.0})); }),
              ErrorCode::DimensionMismatch);
}

TEST(BargmannEval, Examples) {
    EXPECT_NEAR(std::abs(bargmann_eval(state({1.0, 0.0, 0.0}), 0.0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(bargmann_eval(state({0.0, 1.0, 0.0}), 1.0) - std::sqrt(0.5)), 0.0, 1e-15);
    for (const Complex z : {Complex(0.0), Complex(0.3, -2.0), Complex(5.0, 1.0)}) {
        EXPECT_NEAR(std::abs(bargmann_eval(state({0.0, 0.0, 1.0}), z) - z * z / (1.0 + std::norm(z))), 0.0, 1e-14);
    }
}

TEST(BargmannEval, VanishesAtMappedStars) {
    Rng rng(107);
    for (int n = 1; n <= 8; ++n) {
        const auto s = rng.state(n);
        for (const auto &star : stars_from_state(s).stars) {
            if (star.is_infinite() || std::abs(star.z()) < 1e-12) continue;
            const Complex w = -1.0 / star.z();
            EXPECT_LT(std::abs(bargmann_eval(s, w)), 1e-8);
        }
    }
}

TEST(CoherentStateTest, MatchesProductOfStars) {
    Rng rng(109);
    for (int n = 1; n <= 8; ++n) {
        const Star s = rng.star();
        const StarSet stars(std::vector<Star>(static_cast<std::size_t>(n), s));
        EXPECT_GE(fidelity(coherent_state(n, s), state_from_stars(stars)), 1.0 - 1e-12);
    }
}

TEST(IsSeparable, Examples) {
    const Complex z(0.4, -1.2);
    const auto sep = is_separable(coherent_state(5, Star::finite(z)));
    EXPECT_TRUE(sep.separable);
    ASSERT_TRUE(sep.witness.has_value());
    EXPECT_LT(chordal_distance(*sep.witness, Star::finite(z)), 1e-9);

    const auto ent = is_separable(state({0.0, 1.0, 0.0}));
    EXPECT_FALSE(ent.separable);
    EXPECT_FALSE(ent.witness.has_value());
    EXPECT_NEAR(ent.max_chordal, 1.0, 1e-15);

    const auto ground = is_separable(state({1.0, 0.0, 0.0, 0.0}));
    EXPECT_TRUE(ground.separable);
    EXPECT_LT(std::abs(ground.witness->z()), 1e-15);
}

TEST(IsSeparable, RandomStatesAreEntangled) {
    Rng rng(113);
    for (int n = 2; n <= 10; ++n) EXPECT_FALSE(is_separable(rng.state(n)).separable);
}

TEST(StarMultiplicities, CountsNeighbours) {
    const StarSet s({Star::finite(1.0), Star::finite(1.0), Star::infinity(), Star::finite(1.0 + 1e-9)});
    EXPECT_EQ(star_multiplicities(s), (std::vector<int>{3, 3, 1, 3}));
}

}  // namespace
}  // namespace stellar
