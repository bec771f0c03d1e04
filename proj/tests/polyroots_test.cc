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
#include <vector>

#include "stellar/polyroots.h"
#include "expect_error.h"
#include "test_util.h"

namespace stellar::poly {
namespace {

using stellar::test_support::code_of;
using stellar::test_support::poly_from_roots;
using stellar::test_support::Rng;

// Largest distance from a wanted root to its greedy nearest unused found root.
double max_root_error(std::vector<Complex> found, const std::vector<Complex> &want) {
    double worst = 0.0;
    for (const auto &w : want) {
        auto it = std::min_element(found.begin(), found.end(),
                                   [&](Complex a, Complex b) { return std::abs(a - w) < std::abs(b - w); });
        if (it == found.end()) return 1e300;
        worst = std::max(worst, std::abs(*it - w));
        found.erase(it);
    }
    return worst;
}

TEST(FindRoots, Quadratic) {
    const std::vector<Complex> p{-1.0, 0.0, 1.0};  // x^2 - 1
    const auto r = find_roots(p);
    ASSERT_EQ(r.roots.size(), 2u);
    EXPECT_LT(max_root_error(r.roots, {1.0, -1.0}), 1e-14);
    EXPECT_EQ(r.multiplicity, (std::vector<int>{1, 1}));
}

TEST(FindRoots, SplitsExactZeroRootsAndDropsHighZeros) {
    const std::vector<Complex> p{0.0, 0.0, -2.0, 2.0, 0.0, 0.0};  // 2x^2 (x - 1)
    const auto r = find_roots(p);
    ASSERT_EQ(r.roots.size(), 3u);
    EXPECT_LT(max_root_error(r.roots, {0.0, 0.0, 1.0}), 1e-14);
}

TEST(FindRoots, RejectsZeroPolynomial) {
    const std::vector<Complex> p{0.0, 0.0};
    EXPECT_EQ(code_of([&] { find_roots(p); }), ErrorCode::RootFindingFailed);
}

TEST(FindRoots, RandomRootsRecovered) {
    Rng rng(23);
    for (int n = 1; n <= 20; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Complex> want;
            for (int i = 0; i < n; ++i) want.push_back(rng.gauss());
            const auto p = poly_from_roots(want);
            const auto r = find_roots(p);
            ASSERT_EQ(static_cast<int>(r.roots.size()), n);
            for (const auto &x : r.roots) EXPECT_LT(relative_residual(p, x), 1e-12);
            EXPECT_LT(max_root_error(r.roots, want), 1e-6) << "n=" << n;
        }
    }
}

TEST(FindRoots, AgreesWithCompanionMatrix) {
    Rng rng(29);
    for (int n = 2; n <= 12; ++n) {
        std::vector<Complex> p;
        for (int k = 0; k <= n; ++k) p.push_back(rng.gauss());
        const auto r = find_roots(p);
        EXPECT_LT(max_root_error(r.roots, companion_roots(p)), 1e-8) << "n=" << n;
    }
}

TEST(FindRoots, MultipleRootsClustered) {
    const Complex a(0.7, -0.2);
    const Complex b(-1.5, 0.4);
    for (int m = 2; m <= 8; ++m) {
        std::vector<Complex> want(static_cast<std::size_t>(m), a);
        want.push_back(b);
        const auto r = find_roots(poly_from_roots(want));
        ASSERT_EQ(static_cast<int>(r.roots.size()), m + 1);
        EXPECT_LT(max_root_error(r.roots, want), 1e-9) << "m=" << m;
        EXPECT_EQ(std::count(r.multiplicity.begin(), r.multiplicity.end(), m), m) << "m=" << m;
    }
}

TEST(FindRoots, FullyDegenerateRoot) {
    const Complex z(1.0, 1.0);
    for (int n = 2; n <= 20; ++n) {
        const auto r = find_roots(poly_from_roots(std::vector<Complex>(static_cast<std::size_t>(n), z)));
        EXPECT_LT(max_root_error(r.roots, std::vector<Complex>(static_cast<std::size_t>(n), z)), 1e-12);
        for (int m : r.multiplicity) EXPECT_EQ(m, n);
    }
}

TEST(FindRoots, DeterministicForSeed) {
    Rng rng(31);
    std::vector<Complex> p;
    for (int k = 0; k <= 9; ++k) p.push_back(rng.gauss());
    const auto a = find_roots(p);
    const auto b = find_roots(p);
    EXPECT_EQ(a.roots, b.roots);
}

TEST(Evaluate, HornerMatchesDirectSum) {
    const std::vector<Complex> p{1.0, Complex(0, 2), -3.0};
    const Complex x(0.5, -1.0);
    EXPECT_LT(std::abs(evaluate(p, x) - (1.0 + Complex(0, 2) * x - 3.0 * x * x)), 1e-15);
    EXPECT_EQ(relative_residual(p, 0.0), 1.0);
}

TEST(Chordal, FiniteFormula) {
    EXPECT_NEAR(chordal(0.0, 1.0), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(chordal(Complex(2, 3), Complex(2, 3)), 0.0);
}

}  // namespace
}  // namespace stellar::poly
