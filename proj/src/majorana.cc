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

#include "stellar/majorana.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "stellar/polyroots.h"

namespace stellar {

MajoranaPolynomial::MajoranaPolynomial(const SymmetricState &state) : n_(state.n_qubits()), k_max_(0) {
    for (int k = 0; k <= n_; ++k) {
        const double root_binom = std::sqrt(binomial(n_, k));
        const Complex d = root_binom * state[k];
        bargmann_.push_back(d);
        majorana_.push_back((k % 2 == 0 ? 1.0 : -1.0) * d);
        if (state[k] != Complex(0.0)) k_max_ = k;
    }
}

Complex MajoranaPolynomial::evaluate(Complex z) const {
    Complex p = 0.0;
    for (int k = 0; k <= n_; ++k) p = p * z + majorana_[static_cast<std::size_t>(k)];
    return p;
}

double MajoranaPolynomial::relative_residual(const Star &star) const {
    Complex value = 0.0;
    double scale = 0.0;
    const Complex a = star.alpha();
    const Complex b = star.beta();
    for (int k = 0; k <= n_; ++k) {
        const Complex term_basis = ipow(a, k) * ipow(b, n_ - k);
        value += majorana_[static_cast<std::size_t>(k)] * term_basis;
        scale += std::abs(majorana_[static_cast<std::size_t>(k)]) * std::abs(term_basis);
    }
    return scale == 0.0 ? 0.0 : std::abs(value) / scale;
}

namespace {

bool star_order(const Star &x, const Star &y) {
    if (x.is_infinite() != y.is_infinite()) return y.is_infinite();
    if (x.is_infinite()) return false;
    const Complex zx = x.z();
    const Complex zy = y.z();
    if (zx.real() != zy.real()) return zx.real() < zy.real();
    return zx.imag() < zy.imag();
}

}  // namespace

StarSet stars_from_state(const SymmetricState &state, const StarOptions &options) {
    const int n = state.n_qubits();
    if (n > kMaxStarQubits) {
        throw Error(ErrorCode::SizeLimit,
                    "star dictionary supports N <= " + std::to_string(kMaxStarQubits) + ", got " + std::to_string(n));
    }
    const MajoranaPolynomial poly(state);
    const auto &d = poly.bargmann_coefficients();

    poly::RootOptions root_options;
    root_options.seed = options.seed;
    root_options.residual_tol = options.tol;
    const auto zeros = poly::find_roots(std::span<const Complex>(d.data(), static_cast<std::size_t>(poly.k_max()) + 1),
                                        root_options);

    std::vector<Star> stars;
    stars.reserve(static_cast<std::size_t>(n));
    for (const auto &w : zeros.roots) {
        // z = -1/w as the homogeneous pair (w, -1); w = 0 is the star at infinity.
        stars.push_back(Star::homogeneous(w, Complex(-1.0)));
    }
    while (static_cast<int>(stars.size()) < n) stars.push_back(Star::finite(0.0));

    for (const auto &s : stars) {
        const double res = poly.relative_residual(s);
        if (!(res <= options.tol)) {
            throw Error(ErrorCode::RootFindingFailed,
                        "star residual " + std::to_string(res) + " exceeds " + std::to_string(options.tol));
        }
    }
    std::sort(stars.begin(), stars.end(), star_order);
    return StarSet(std::move(stars), poly.k_max());
}

SymmetricState state_from_stars(const StarSet &stars) {
    const int n = stars.size();
    if (n < 1) {
        throw Error(ErrorCode::DimensionMismatch, "state_from_stars needs at least one star");
    }
    // Coefficients of prod_i (alpha_i + beta_i t).
    std::vector<Complex> e(static_cast<std::size_t>(n) + 1, Complex(0.0));
    e[0] = 1.0;
    for (int i = 0; i < n; ++i) {
        const Complex a = stars[i].alpha();
        const Complex b = stars[i].beta();
        for (int k = i + 1; k >= 1; --k) {
            e[static_cast<std::size_t>(k)] = a * e[static_cast<std::size_t>(k)] + b * e[static_cast<std::size_t>(k) - 1];
        }
        e[0] *= a;
    }
    std::vector<Complex> c(e.size());
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)] / std::sqrt(binomial(n, k));
    return normalize(c);
}

Complex bargmann_eval(const SymmetricState &state, Complex z) {
    const int n = state.n_qubits();
    Complex p = 0.0;
    for (int k = n; k >= 0; --k) p = p * z + std::sqrt(binomial(n, k)) * state[k];
    return p * std::pow(1.0 + std::norm(z), -0.5 * n);
}

SymmetricState coherent_state(int n, const Star &star) {
    if (n < 1) {
        throw Error(ErrorCode::DimensionMismatch, "coherent state needs N >= 1");
    }
    std::vector<Complex> c;
    for (int k = 0; k <= n; ++k) {
        c.push_back(std::sqrt(binomial(n, k)) * ipow(star.alpha(), n - k) * ipow(star.beta(), k));
    }
    return normalize(c);
}

Separability is_separable(const SymmetricState &state, double tol, const StarOptions &options) {
    const StarSet stars = stars_from_state(state, options);
    Separability out;
    for (int i = 0; i < stars.size(); ++i) {
        for (int j = i + 1; j < stars.size(); ++j) {
            out.max_chordal = std::max(out.max_chordal, chordal_distance(stars[i], stars[j]));
        }
    }
    out.separable = out.max_chordal <= tol;
    if (out.separable) out.witness = stars[0];
    return out;
}

std::vector<int> star_multiplicities(const StarSet &stars, double radius) {
    std::vector<int> out;
    for (int i = 0; i < stars.size(); ++i) {
        int count = 0;
        for (int j = 0; j < stars.size(); ++j) {
            if (chordal_distance(stars[i], stars[j]) <= radius) ++count;
        }
        out.push_back(count);
    }
    return out;
}

std::array<Complex, 2> quadratic_stars(const SymmetricState &state) {
    if (state.dim() != 3) {
        throw Error(ErrorCode::DimensionMismatch, "quadratic closed form needs d = 3");
    }
    if (state[0] == Complex(0.0)) {
        throw Error(ErrorCode::RangeError, "quadratic closed form needs c0 != 0");
    }
    const Complex disc = std::sqrt(state[1] * state[1] - 2.0 * state[0] * state[2]);
    const Complex denom = std::sqrt(2.0) * state[0];
    return {(state[1] + disc) / denom, (state[1] - disc) / denom};
}

}  // namespace stellar
