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
#include <limits>
#include <numbers>
#include <vector>

#include "stellar/core.h"
#include "stellar/error.h"
#include "expect_error.h"
#include "test_util.h"

namespace stellar {
namespace {

using test_support::code_of;
using test_support::Rng;

void expect_amplitudes(const SymmetricState &s, const std::vector<Complex> &want, double tol = 1e-12) {
    ASSERT_EQ(s.dim(), static_cast<int>(want.size()));
    for (int k = 0; k < s.dim(); ++k) {
        EXPECT_NEAR(std::abs(s.amplitudes()[k] - want[k]), 0.0, tol) << "k=" << k;
    }
}

TEST(Binomial, SmallValues) {
    EXPECT_EQ(binomial(0, 0), 1.0);
    EXPECT_EQ(binomial(4, 2), 6.0);
    EXPECT_EQ(binomial(20, 10), 184756.0);
    EXPECT_EQ(binomial(3, 4), 0.0);
}

TEST(Normalize, Examples) {
    const std::vector<Complex> a{2.0, 0.0, 0.0};
    expect_amplitudes(normalize(a), {1.0, 0.0, 0.0});
    const std::vector<Complex> b{0.0, Complex(0, 1), 0.0};
    expect_amplitudes(normalize(b), {0.0, 1.0, 0.0});
    const std::vector<Complex> c{1.0, 1.0};
    expect_amplitudes(normalize(c), {std::sqrt(0.5), std::sqrt(0.5)});
}

TEST(Normalize, RejectsZeroAndShortVectors) {
    const std::vector<Complex> zero{0.0, 0.0, 0.0};
    EXPECT_EQ(code_of([&] { normalize(zero); }), ErrorCode::AllZero);
    const std::vector<Complex> one{1.0};
    EXPECT_EQ(code_of([&] { normalize(one); }), ErrorCode::DimensionMismatch);
}

TEST(Normalize, UnitNormAndPhaseFixed) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = rng.state(rng.integer(1, 12));
        double norm = 0.0;
        for (auto c : s.amplitudes()) norm += std::norm(c);
        EXPECT_NEAR(norm, 1.0, 1e-12);
        EXPECT_EQ(s.amplitudes()[0].imag(), 0.0);
        EXPECT_GT(s.amplitudes()[0].real(), 0.0);
    }
}

TEST(FromAmplitudes, RenormalizesOnlyInsideWindow) {
    const double x = std::sqrt(0.5) * (1.0 + 4e-7);
    const auto s = SymmetricState::from_amplitudes({x, x});
    EXPECT_NEAR(std::abs(s.amplitudes()[0]), std::sqrt(0.5), 1e-15);
    EXPECT_EQ(code_of([] { SymmetricState::from_amplitudes({1.01, 0.0}); }), ErrorCode::NotNormalized);
}

TEST(StarTest, PhaseFixedUnitRepresentative) {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Star s = Star::homogeneous(rng.gauss(), rng.gauss());
        EXPECT_NEAR(std::norm(s.alpha()) + std::norm(s.beta()), 1.0, 1e-12);
        EXPECT_EQ(s.alpha().imag(), 0.0);
        EXPECT_GE(s.alpha().real(), 0.0);
    }
    const Star inf = Star::infinity();
    EXPECT_TRUE(inf.is_infinite());
    EXPECT_EQ(inf.beta(), Complex(1.0));
    EXPECT_EQ(Star::homogeneous(0.0, Complex(0, 3)).beta(), Complex(1.0));
    EXPECT_EQ(code_of([&] { (void)inf.z(); }), ErrorCode::StarAtInfinity);
    EXPECT_NEAR(std::abs(Star::finite(Complex(2, -1)).z() - Complex(2, -1)), 0.0, 1e-14);
}

TEST(Overlap, Examples) {
    const Star zero = Star::finite(0.0);
    EXPECT_NEAR(std::abs(overlap(zero, zero) - 1.0), 0.0, 1e-15);
    EXPECT_EQ(overlap(zero, Star::infinity()), Complex(0.0));
    const Complex z(0.3, -1.7);
    const Star a = Star::finite(z);
    const Star b = Star::finite(-1.0 / std::conj(z));
    EXPECT_LT(std::abs(overlap(a, b)), 1e-15);
}

TEST(Overlap, MatchesStereographicFormula) {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Complex za = rng.gauss();
        const Complex zb = rng.gauss();
        const Complex want =
            (1.0 + std::conj(za) * zb) / std::sqrt((1.0 + std::norm(za)) * (1.0 + std::norm(zb)));
        EXPECT_LT(std::abs(overlap(Star::finite(za), Star::finite(zb)) - want), 1e-14);
    }
}

TEST(Overlap, ConjugateSymmetricAndBounded) {
    Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const Star a = rng.star();
        const Star b = trial % 10 == 0 ? Star::infinity() : rng.star();
        EXPECT_LT(std::abs(overlap(a, b) - std::conj(overlap(b, a))), 1e-15);
        EXPECT_LE(std::abs(overlap(a, b)), 1.0 + 1e-15);
    }
}

TEST(Antipode, ExactlyOrthogonal) {
    Rng rng(9);
    std::vector<Star> stars{Star::infinity(), Star::finite(0.0), Star::finite(1.0)};
    for (int i = 0; i < 200; ++i) stars.push_back(rng.star());
    for (const auto &s : stars) {
        // The unrotated pair (-conj(beta), conj(alpha)) is orthogonal exactly; the
        // phase-fixed representative picks up rounding from the phase rotation.
        const Complex raw = std::conj(s.alpha()) * -std::conj(s.beta()) + std::conj(s.beta()) * std::conj(s.alpha());
        EXPECT_EQ(raw, Complex(0.0));
        EXPECT_LT(std::abs(overlap(s, antipode(s))), 4 * std::numeric_limits<double>::epsilon());
    }
    EXPECT_EQ(overlap(Star::infinity(), antipode(Star::infinity())), Complex(0.0));
    EXPECT_EQ(overlap(Star::finite(0.0), antipode(Star::finite(0.0))), Complex(0.0));
    EXPECT_EQ(antipode(Star::infinity()).alpha(), Complex(1.0));
    EXPECT_TRUE(antipode(Star::finite(0.0)).is_infinite());
}

TEST(ChordalDistance, MatchesReference) {
    Rng rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const Star a = rng.star();
        const Star b = trial % 7 == 0 ? Star::infinity() : rng.star();
        EXPECT_NEAR(chordal_distance(a, b), test_support::chordal_reference(a, b), 1e-14);
    }
    EXPECT_NEAR(chordal_distance(Star::finite(2.0), Star::finite(2.0001)), 1e-4 / std::sqrt(5.0 * 5.00040001),
                1e-15);
    EXPECT_NEAR(chordal_distance(Star::finite(0.0), Star::infinity()), 1.0, 1e-15);
}

TEST(StarSetTest, FromStereographicPoints) {
    const std::vector<Complex> zs{0.0, 1.0, Complex(0, -2)};
    const StarSet s = star_set(zs);
    ASSERT_EQ(s.size(), 3);
    EXPECT_FALSE(s.any_infinite());
    EXPECT_NEAR(std::abs(s[2].z() - Complex(0, -2)), 0.0, 1e-14);
    EXPECT_TRUE(StarSet({Star::finite(0.0), Star::infinity()}).any_infinite());
}

TEST(Fidelity, Examples) {
    const auto a = normalize(std::vector<Complex>{1.0, 0.0, 0.0});
    const auto b = normalize(std::vector<Complex>{0.0, 1.0, 0.0});
    EXPECT_NEAR(fidelity(a, a), 1.0, 1e-15);
    EXPECT_NEAR(fidelity(a, b), 0.0, 1e-15);
    const auto c = normalize(std::vector<Complex>{1.0, 0.0});
    const auto e = normalize(std::vector<Complex>{1.0, 1.0});
    EXPECT_NEAR(fidelity(c, e), std::sqrt(0.5), 1e-15);
    EXPECT_EQ(code_of([&] { fidelity(a, c); }), ErrorCode::DimensionMismatch);
}

TEST(Fidelity, SymmetricAndPhaseInvariant) {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.integer(1, 8);
        const auto raw = rng.amplitudes(n + 1);
        const auto a = normalize(raw);
        const auto b = rng.state(n);
        const Complex phase = std::polar(1.0, 2 * std::numbers::pi * rng.uniform());
        std::vector<Complex> rotated;
        for (auto c : raw) rotated.push_back(phase * c);
        EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-15);
        EXPECT_NEAR(fidelity(normalize(rotated), b), fidelity(a, b), 1e-14);
        EXPECT_LE(fidelity(a, b), 1.0 + 1e-15);
    }
}

TEST(ElementarySymmetric, Examples) {
    const Complex z(0.4, 1.3);
    const std::vector<Complex> triple{z, z, z};
    EXPECT_EQ(elementary_symmetric(0, triple), Complex(1.0));
    EXPECT_LT(std::abs(elementary_symmetric(2, triple) - 3.0 * z * z), 1e-14);
    const std::vector<Complex> ints{1.0, 2.0, 3.0};
    EXPECT_EQ(elementary_symmetric(2, ints), Complex(11.0));
    EXPECT_EQ(elementary_symmetric(3, ints), Complex(6.0));
    EXPECT_EQ(code_of([&] { elementary_symmetric(4, ints); }), ErrorCode::IndexOutOfRange);
    EXPECT_EQ(code_of([&] { elementary_symmetric(-1, ints); }), ErrorCode::IndexOutOfRange);
}

TEST(ElementarySymmetric, Vieta) {
    Rng rng(19);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Complex> roots;
            for (int i = 0; i < n; ++i) roots.push_back(rng.gauss());
            const auto p = test_support::poly_from_roots(roots);  // ascending, monic
            const auto all = elementary_symmetric_all(roots);
            ASSERT_EQ(static_cast<int>(all.size()), n + 1);
            for (int k = 0; k <= n; ++k) {
                const Complex coeff = p[static_cast<std::size_t>(n - k)];
                const Complex want = (k % 2 == 0 ? 1.0 : -1.0) * elementary_symmetric(k, roots);
                EXPECT_LT(std::abs(coeff - want), 1e-12 * (1.0 + std::abs(coeff)));
                EXPECT_LT(std::abs(all[static_cast<std::size_t>(k)] - elementary_symmetric(k, roots)), 1e-12);
            }
        }
    }
}

TEST(ErrorTest, CodeNames) {
    EXPECT_EQ(error_code_name(ErrorCode::StarsTooClose), "StarsTooClose");
    EXPECT_EQ(error_code_name(ErrorCode::SizeLimit), "SizeLimit");
    const Error e(ErrorCode::RangeError, "bad");
    EXPECT_EQ(e.code(), ErrorCode::RangeError);
}

}  // namespace
}  // namespace stellar
