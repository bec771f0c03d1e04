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

#include "stellar/core.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace stellar {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::AllZero: return "AllZero";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::RangeError: return "RangeError";
        case ErrorCode::ExpmNoConvergence: return "ExpmNoConvergence";
        case ErrorCode::RootFindingFailed: return "RootFindingFailed";
        case ErrorCode::SizeLimit: return "SizeLimit";
        case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorCode::StarAtInfinity: return "StarAtInfinity";
        case ErrorCode::StarsTooClose: return "StarsTooClose";
        case ErrorCode::DegenerateRotation: return "DegenerateRotation";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double result = 1.0;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return std::round(result);
}

Complex ipow(Complex x, int p) {
    Complex result = 1.0;
    while (p > 0) {
        if (p & 1) result *= x;
        x *= x;
        p >>= 1;
    }
    return result;
}

namespace {

double norm2(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto &c : v) s += std::norm(c);
    return s;
}

// Multiplies by conj(phase of first nonzero entry) so that entry becomes real positive.
void fix_phase(std::vector<Complex> &v) {
    auto first = std::find_if(v.begin(), v.end(), [](const Complex &c) { return c != Complex(0.0); });
    if (first == v.end()) return;
    const double mag = std::abs(*first);
    const Complex rot = std::conj(*first) / mag;
    for (auto it = first + 1; it != v.end(); ++it) *it *= rot;
    *first = Complex(mag, 0.0);
}

}  // namespace

SymmetricState normalize(std::span<const Complex> amplitudes) {
    if (amplitudes.size() < 2) {
        throw Error(ErrorCode::DimensionMismatch, "a symmetric state needs d = N + 1 >= 2 amplitudes");
    }
    double n2 = norm2(amplitudes);
    if (n2 == 0.0) {
        throw Error(ErrorCode::AllZero, "every amplitude is zero");
    }
    if (!std::isfinite(n2)) {
        throw Error(ErrorCode::RangeError, "non-finite amplitude");
    }
    double scale = 1.0 / std::sqrt(n2);
    std::vector<Complex> v(amplitudes.begin(), amplitudes.end());
    for (auto &c : v) c *= scale;
    fix_phase(v);
    return SymmetricState(std::move(v));
}

SymmetricState SymmetricState::from_amplitudes(std::vector<Complex> amplitudes) {
    if (amplitudes.size() < 2) {
        throw Error(ErrorCode::DimensionMismatch, "a symmetric state needs d = N + 1 >= 2 amplitudes");
    }
    double n = std::sqrt(norm2(amplitudes));
    if (n == 0.0) {
        throw Error(ErrorCode::AllZero, "every amplitude is zero");
    }
    if (std::abs(n - 1.0) > kRenormalizeWindow) {
        throw Error(ErrorCode::NotNormalized, "amplitude norm " + std::to_string(n) + " is not within 1e-6 of 1");
    }
    return normalize(amplitudes);
}

Star Star::finite(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::RangeError, "finite star needs a finite coordinate");
    }
    return homogeneous(Complex(1.0), z);
}

Star Star::infinity() { return Star(Complex(0.0), Complex(1.0)); }

Star Star::homogeneous(Complex alpha, Complex beta) {
    double n = std::hypot(std::abs(alpha), std::abs(beta));
    if (n == 0.0) {
        throw Error(ErrorCode::AllZero, "star with zero homogeneous coordinates");
    }
    alpha /= n;
    beta /= n;
    if (alpha != Complex(0.0)) {
        Complex rot = std::conj(alpha) / std::abs(alpha);
        return Star(Complex(std::abs(alpha), 0.0), beta * rot);
    }
    return Star(Complex(0.0), Complex(std::abs(beta), 0.0));
}

Complex Star::z() const {
    if (is_infinite()) {
        throw Error(ErrorCode::StarAtInfinity, "star at infinity has no stereographic coordinate");
    }
    return beta_ / alpha_;
}

Star antipode(const Star &s) { return Star::homogeneous(-std::conj(s.beta()), std::conj(s.alpha())); }

Complex overlap(const Star &a, const Star &b) {
    return std::conj(a.alpha()) * b.alpha() + std::conj(a.beta()) * b.beta();
}

double chordal_distance(const Star &a, const Star &b) {
    // |alpha_a beta_b - beta_a alpha_b| equals sqrt(1 - |<a|b>|^2) for unit vectors
    // and does not lose precision when the stars nearly coincide.
    return std::min(1.0, std::abs(a.alpha() * b.beta() - a.beta() * b.alpha()));
}

bool StarSet::any_infinite() const {
    return std::any_of(stars.begin(), stars.end(), [](const Star &s) { return s.is_infinite(); });
}

StarSet star_set(std::span<const Complex> zs) {
    std::vector<Star> stars;
    stars.reserve(zs.size());
    for (const auto &z : zs) stars.push_back(Star::finite(z));
    return StarSet(std::move(stars));
}

double fidelity(const SymmetricState &a, const SymmetricState &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "states of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
    Complex ip = 0.0;
    for (int k = 0; k < a.dim(); ++k) ip += std::conj(a[k]) * b[k];
    return std::min(1.0, std::abs(ip));
}

std::vector<Complex> elementary_symmetric_all(std::span<const Complex> values) {
    // Coefficients of prod_i (1 + v_i t), built one factor at a time.
    std::vector<Complex> s(values.size() + 1, Complex(0.0));
    s[0] = 1.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t k = i + 1; k >= 1; --k) {
            s[k] += values[i] * s[k - 1];
        }
    }
    return s;
}

Complex elementary_symmetric(int k, std::span<const Complex> values) {
    if (k < 0 || k > static_cast<int>(values.size())) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "k = " + std::to_string(k) + " outside [0, " + std::to_string(values.size()) + "]");
    }
    return elementary_symmetric_all(values)[static_cast<std::size_t>(k)];
}

}  // namespace stellar
