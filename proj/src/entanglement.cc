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

#include "stellar/entanglement.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "stellar/majorana.h"

namespace stellar {

namespace {

using Wide = long double;
using WideComplex = std::complex<Wide>;

// Neumaier's variant of Kahan summation, applied to each component.
class CompensatedSum {
   public:
    void add(WideComplex x) {
        add_part(re_, re_c_, x.real());
        add_part(im_, im_c_, x.imag());
    }
    WideComplex value() const { return {re_ + re_c_, im_ + im_c_}; }

   private:
    static void add_part(Wide &sum, Wide &comp, Wide x) {
        const Wide t = sum + x;
        if (std::fabs(sum) >= std::fabs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    Wide re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

WideComplex product(const std::vector<WideComplex> &v) {
    WideComplex p = 1;
    for (const auto &x : v) p *= x;
    return p;
}

Complex narrow(WideComplex x) { return {static_cast<double>(x.real()), static_cast<double>(x.imag())}; }

void require_size(const Eigen::MatrixXcd &m, const char *method) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "permanent of a non-square matrix");
    }
    if (m.rows() > kMaxPermanentSize) {
        throw Error(ErrorCode::SizeLimit, std::string(method) + " permanent supports N <= " +
                                              std::to_string(kMaxPermanentSize) + ", got " + std::to_string(m.rows()));
    }
}

void require_square(const Eigen::MatrixXcd &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "permanent of a non-square matrix");
    }
}

}  // namespace

GramMatrix gram(const StarSet &stars) {
    const int n = stars.size();
    GramMatrix g{Eigen::MatrixXcd(n, n)};
    for (int i = 0; i < n; ++i) {
        g.entries(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            const Complex o = overlap(stars[i], stars[j]);
            g.entries(i, j) = o;
            g.entries(j, i) = std::conj(o);
        }
    }
    return g;
}

Complex permanent(const Eigen::MatrixXcd &matrix) {
    require_size(matrix, "Glynn");
    const int n = static_cast<int>(matrix.rows());
    if (n == 0) return 1.0;

    // perm(A) = 2^(1-n) sum_delta (prod_k delta_k) prod_i sum_j delta_j A[i][j] over
    // delta in {+1,-1}^n with delta_0 = +1. Gray-code order flips one sign per step.
    std::vector<WideComplex> row_sums(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        WideComplex r = 0;
        for (int j = 0; j < n; ++j) r += WideComplex(matrix(i, j));
        row_sums[static_cast<std::size_t>(i)] = r;
    }
    CompensatedSum total;
    total.add(product(row_sums));
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < count; ++k) {
        const int flip = std::countr_zero(k);
        const std::uint64_t bit = std::uint64_t{1} << flip;
        gray ^= bit;
        const int column = flip + 1;
        const Wide step = (gray & bit) ? -2 : 2;
        for (int i = 0; i < n; ++i) row_sums[static_cast<std::size_t>(i)] += step * WideComplex(matrix(i, column));
        const WideComplex term = product(row_sums);
        total.add((std::popcount(gray) & 1) ? -term : term);
    }
    return narrow(total.value() / std::ldexp(Wide(1), n - 1));
}

Complex permanent_ryser(const Eigen::MatrixXcd &matrix) {
    require_size(matrix, "Ryser");
    const int n = static_cast<int>(matrix.rows());
    if (n == 0) return 1.0;

    // perm(A) = (-1)^n sum_{S nonempty} (-1)^|S| prod_i sum_{j in S} A[i][j].
    // Consecutive subsets in Gray-code order differ by one column, so the row
    // sums are updated in O(n) per subset.
    std::vector<WideComplex> row_sums(static_cast<std::size_t>(n), WideComplex(0));
    CompensatedSum total;
    const std::uint64_t count = std::uint64_t{1} << n;
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < count; ++k) {
        const int column = std::countr_zero(k);
        const std::uint64_t bit = std::uint64_t{1} << column;
        gray ^= bit;
        const Wide direction = (gray & bit) ? 1 : -1;
        for (int i = 0; i < n; ++i) row_sums[static_cast<std::size_t>(i)] += direction * WideComplex(matrix(i, column));
        const WideComplex term = product(row_sums);
        total.add((std::popcount(gray) & 1) ? -term : term);
    }
    const WideComplex result = total.value();
    return narrow((n % 2 == 0) ? result : -result);
}

Complex permanent(const GramMatrix &matrix) { return permanent(matrix.entries); }

Complex permanent_naive(const Eigen::MatrixXcd &matrix) {
    require_square(matrix);
    const int n = static_cast<int>(matrix.rows());
    if (n > kMaxNaivePermanentSize) {
        throw Error(ErrorCode::SizeLimit, "naive permanent supports N <= " + std::to_string(kMaxNaivePermanentSize));
    }
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    CompensatedSum total;
    do {
        WideComplex term = 1;
        for (int i = 0; i < n; ++i) term *= WideComplex(matrix(i, sigma[static_cast<std::size_t>(i)]));
        total.add(term);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return narrow(total.value());
}

BlochVector bloch_vector(const Star &star) {
    // With alpha real: (z + conj z)/(1 + |z|^2) = 2 Re(conj(alpha) beta), etc.
    const Complex cross = std::conj(star.alpha()) * star.beta();
    return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(star.alpha()) - std::norm(star.beta())};
}

double dot(const BlochVector &a, const BlochVector &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double concurrence_d3(const SymmetricState &state) {
    if (state.dim() != 3) {
        throw Error(ErrorCode::DimensionMismatch, "concurrence is defined here for d = 3 only, got d = " +
                                                      std::to_string(state.dim()));
    }
    return std::abs(state[1] * state[1] - 2.0 * state[0] * state[2]);
}

EntanglementReport perma_concurrence(const StarSet &stars) {
    const int n = stars.size();
    if (n < 1) {
        throw Error(ErrorCode::DimensionMismatch, "perma-concurrence needs at least one star");
    }
    EntanglementReport report;
    report.permanent = permanent(gram(stars));
    double factorial = 1.0;
    for (int i = 2; i <= n; ++i) factorial *= i;
    report.p_d = report.permanent.real() / factorial;
    if (n == 2) report.concurrence = concurrence_d3(state_from_stars(stars));

    std::vector<BlochVector> bloch;
    for (const auto &s : stars.stars) bloch.push_back(bloch_vector(s));
    report.bloch_pair_products.resize(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            report.bloch_pair_products(i, j) = dot(bloch[static_cast<std::size_t>(i)], bloch[static_cast<std::size_t>(j)]);
        }
    }
    return report;
}

ClosedFormP closed_form_p(const StarSet &stars) {
    const int n = stars.size();
    if (n < 2 || n > 4) {
        throw Error(ErrorCode::UnsupportedDimension,
                    "closed forms exist for N = 2, 3, 4 only, got N = " + std::to_string(n));
    }
    auto o = [&](int i, int j) { return overlap(stars[i], stars[j]); };
    auto x = [&](int i, int j) { return std::norm(o(i, j)); };
    auto nn = [&](int i, int j) { return dot(bloch_vector(stars[i]), bloch_vector(stars[j])); };

    ClosedFormP out;
    out.n_qubits = n;
    if (n == 2) {
        out.overlap_form = 0.5 * (1.0 + x(0, 1));
        out.bloch_form = 0.25 * (3.0 + nn(0, 1));
    } else if (n == 3) {
        const Complex triple = o(0, 1) * o(1, 2) * o(2, 0);
        const Complex reverse = o(0, 2) * o(2, 1) * o(1, 0);
        out.overlap_form = (1.0 + x(0, 1) + x(1, 2) + x(2, 0) + (triple + reverse).real()) / 6.0;
        out.bloch_form = (3.0 + nn(0, 1) + nn(1, 2) + nn(2, 0)) / 6.0;
        out.reduced_form = (x(0, 1) + x(1, 2) + x(2, 0)) / 3.0;
    } else {
        const double pairs = x(0, 1) + x(0, 2) + x(0, 3) + x(1, 2) + x(1, 3) + x(2, 3);
        const double matched = x(0, 1) * x(2, 3) + x(0, 2) * x(1, 3) + x(0, 3) * x(1, 2);
        out.overlap_form = (-6.0 + 4.0 * pairs + 2.0 * matched) / 24.0;
        const double dots = nn(0, 1) + nn(0, 2) + nn(0, 3) + nn(1, 2) + nn(1, 3) + nn(2, 3);
        const double dot_pairs = nn(0, 1) * nn(2, 3) + nn(0, 2) * nn(1, 3) + nn(0, 3) * nn(1, 2);
        out.bloch_form = (7.5 + 2.5 * dots + 0.5 * dot_pairs) / 24.0;
    }
    return out;
}

}  // namespace stellar
