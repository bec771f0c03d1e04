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

#ifndef STELLAR_MAJORANA_H
#define STELLAR_MAJORANA_H

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "stellar/core.h"

namespace stellar {

inline constexpr int kMaxStarQubits = 20;
inline constexpr double kDefaultRootTol = 1e-8;
inline constexpr double kDefaultSeparabilityTol = 1e-6;

/// sum_k (-1)^k sqrt(C(N,k)) c_k z^(N-k), whose roots are the stars, together
/// with the Bargmann polynomial sum_k sqrt(C(N,k)) c_k w^k whose zeros w map to
/// the stars by z = -1/w.
class MajoranaPolynomial {
   public:
    explicit MajoranaPolynomial(const SymmetricState &state);

    int degree_nominal() const { return n_; }
    /// a_k, the coefficient of z^(N-k).
    const std::vector<Complex> &coefficients() const { return majorana_; }
    /// d_k, the coefficient of w^k.
    const std::vector<Complex> &bargmann_coefficients() const { return bargmann_; }
    /// Largest k with c_k != 0: the degree of the Bargmann polynomial.
    int k_max() const { return k_max_; }

    Complex evaluate(Complex z) const;
    /// |sum_k a_k alpha^k beta^(N-k)| / sum_k |a_k||alpha|^k|beta|^(N-k): the
    /// homogeneous form, so the star at infinity is covered too.
    double relative_residual(const Star &star) const;

   private:
    int n_;
    int k_max_;
    std::vector<Complex> majorana_;
    std::vector<Complex> bargmann_;
};

struct StarOptions {
    double tol = kDefaultRootTol;
    std::uint64_t seed = 0x5eedULL;
};

/// The N stars of a state: zeros of the Bargmann polynomial mapped through
/// z = -1/w (w = 0 giving the star at infinity), padded with N - k_max stars at
/// z = 0. Sorted (finite stars by real then imaginary part, infinity last).
/// Throws RootFindingFailed, or SizeLimit for N > 20.
StarSet stars_from_state(const SymmetricState &state, const StarOptions &options = {});

/// c_k proportional to e_k / sqrt(C(N,k)) where e_k is the homogeneous
/// elementary symmetric form sum_{|S|=k} prod_{i in S} beta_i prod_{i not in S} alpha_i.
SymmetricState state_from_stars(const StarSet &stars);

/// psi(z) = (1 + |z|^2)^(-N/2) sum_k sqrt(C(N,k)) c_k z^k.
Complex bargmann_eval(const SymmetricState &state, Complex z);

/// |z>^(x)N in Dicke coordinates: c_k = sqrt(C(N,k)) alpha^(N-k) beta^k.
SymmetricState coherent_state(int n, const Star &star);

struct Separability {
    bool separable = false;
    std::optional<Star> witness;
    double max_chordal = 0.0;  // largest pairwise chordal distance among the stars
};

Separability is_separable(const SymmetricState &state, double tol = kDefaultSeparabilityTol,
                          const StarOptions &options = {});

/// For each star, how many stars of the set lie within radius of it (itself included).
std::vector<int> star_multiplicities(const StarSet &stars, double radius = 1e-6);

/// The two roots (c1 +- sqrt(c1^2 - 2 c0 c2)) / (sqrt(2) c0) of a d = 3 state.
/// Throws DimensionMismatch unless d = 3 and RangeError when c0 = 0.
std::array<Complex, 2> quadratic_stars(const SymmetricState &state);

}  // namespace stellar

#endif
