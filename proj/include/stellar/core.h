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

#ifndef STELLAR_CORE_H
#define STELLAR_CORE_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "stellar/error.h"

namespace stellar {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
/// Inputs whose norm is off by more than this are rejected rather than rescaled.
inline constexpr double kRenormalizeWindow = 1e-6;

/// Binomial coefficient C(n, k) as a double; exact for the sizes used here.
double binomial(int n, int k);

/// x^p by repeated squaring, with 0^0 = 1.
Complex ipow(Complex x, int p);

/// A state of the symmetric subspace of N qubits, stored as amplitudes over the
/// Dicke basis |N;0>, ..., |N;N>. Always unit norm, with the first nonzero
/// amplitude real and positive.
class SymmetricState {
   public:
    /// Checked construction. Silently renormalizes when the input norm is within
    /// kRenormalizeWindow of one; throws NotNormalized otherwise.
    static SymmetricState from_amplitudes(std::vector<Complex> amplitudes);

    int n_qubits() const { return static_cast<int>(amplitudes_.size()) - 1; }
    int dim() const { return static_cast<int>(amplitudes_.size()); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex &operator[](int k) const { return amplitudes_[static_cast<std::size_t>(k)]; }

   private:
    explicit SymmetricState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}
    friend SymmetricState normalize(std::span<const Complex> amplitudes);

    std::vector<Complex> amplitudes_;
};

/// Rescales to unit norm and fixes the global phase. Throws AllZero, or
/// DimensionMismatch for fewer than two amplitudes.
SymmetricState normalize(std::span<const Complex> amplitudes);

/// A point of the Riemann sphere in homogeneous coordinates: the qubit
/// alpha|0> + beta|1>. Finite z corresponds to (1, z) up to scale; infinity is (0, 1).
class Star {
   public:
    /// The north pole, z = 0.
    Star() = default;

    static Star finite(Complex z);
    static Star infinity();
    /// Normalizes (alpha, beta) and fixes its phase. Throws AllZero for (0, 0).
    static Star homogeneous(Complex alpha, Complex beta);

    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }
    bool is_infinite() const { return alpha_ == Complex(0.0); }
    /// Stereographic coordinate beta/alpha. Throws StarAtInfinity.
    Complex z() const;

   private:
    Star(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {}

    Complex alpha_{1.0, 0.0};
    Complex beta_{0.0, 0.0};
};

/// The orthogonal qubit, z -> -1/conj(z).
Star antipode(const Star &s);

/// <a|b> = conj(alpha_a) alpha_b + conj(beta_a) beta_b.
Complex overlap(const Star &a, const Star &b);

/// Chordal metric of the Riemann sphere, sqrt(1 - |<a|b>|^2), in [0, 1].
double chordal_distance(const Star &a, const Star &b);

/// Multiset of N stars. source_degree is the number of finite Bargmann zeros
/// the set was built from (N when constructed directly).
struct StarSet {
    std::vector<Star> stars;
    int source_degree = 0;

    StarSet() = default;
    explicit StarSet(std::vector<Star> s) : stars(std::move(s)), source_degree(static_cast<int>(stars.size())) {}
    StarSet(std::vector<Star> s, int degree) : stars(std::move(s)), source_degree(degree) {}

    int size() const { return static_cast<int>(stars.size()); }
    const Star &operator[](int i) const { return stars[static_cast<std::size_t>(i)]; }
    bool any_infinite() const;
};

/// Convenience for finite constellations.
StarSet star_set(std::span<const Complex> zs);

/// Pairwise coherent-state overlaps A[i][j] = <z_i|z_j>.
struct GramMatrix {
    Eigen::MatrixXcd entries;

    int dim() const { return static_cast<int>(entries.rows()); }
    Complex operator()(int i, int j) const { return entries(i, j); }
};

/// |<a|b>| over Dicke amplitudes. Throws DimensionMismatch.
double fidelity(const SymmetricState &a, const SymmetricState &b);

/// s_k(values): sum over k-subsets of the products of their members, by the
/// O(N^2) product-expansion recurrence. Throws IndexOutOfRange unless 0 <= k <= N.
Complex elementary_symmetric(int k, std::span<const Complex> values);

/// All of s_0..s_N at once.
std::vector<Complex> elementary_symmetric_all(std::span<const Complex> values);

}  // namespace stellar

#endif
