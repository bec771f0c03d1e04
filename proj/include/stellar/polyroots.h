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

#ifndef STELLAR_POLYROOTS_H
#define STELLAR_POLYROOTS_H

#include <cstdint>
#include <span>
#include <vector>

#include "stellar/core.h"

namespace stellar::poly {

struct RootOptions {
    int max_iterations = 200;
    std::uint64_t seed = 0x5eedULL;
    /// Maximum relative residual |p(x)| / sum_k |a_k||x|^k accepted for a root.
    double residual_tol = 1e-8;
    /// Roots closer than this (chordal metric of the Riemann sphere) are merged.
    double cluster_radius = 1e-6;
    /// Relative size of the Taylor coefficients p^(j)(c)/j!, j < m, at which a
    /// group of m roots is accepted as one m-fold root at its centroid c.
    double multiplicity_tol = 1e-11;
};

struct RootResult {
    /// Each root repeated according to its multiplicity; size == degree.
    std::vector<Complex> roots;
    /// Cluster size of the corresponding entry of roots.
    std::vector<int> multiplicity;
    int iterations = 0;
    bool used_companion_fallback = false;
};

/// p(x) = sum_k coeffs[k] x^k.
Complex evaluate(std::span<const Complex> coeffs, Complex x);

/// |p(x)| / sum_k |a_k| |x|^k: the relative backward error of x as a root.
double relative_residual(std::span<const Complex> coeffs, Complex x);

/// All roots of a polynomial given in ascending powers, by Aberth-Ehrlich
/// simultaneous iteration from Newton-polygon starting circles, with a
/// companion-matrix eigenvalue fallback, cluster merging and Newton polishing.
/// Trailing zero coefficients (high powers) are dropped; exact zero roots
/// are split off before iterating. Throws RootFindingFailed.
RootResult find_roots(std::span<const Complex> coeffs, const RootOptions &options = {});

/// Eigenvalues of the companion matrix; exposed for tests.
std::vector<Complex> companion_roots(std::span<const Complex> coeffs);

/// Chordal distance between two points of the extended plane (finite inputs).
double chordal(Complex a, Complex b);

}  // namespace stellar::poly

#endif
