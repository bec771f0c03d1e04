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

#ifndef STELLAR_ENTANGLEMENT_H
#define STELLAR_ENTANGLEMENT_H

#include <array>
#include <optional>

#include "stellar/core.h"

namespace stellar {

inline constexpr int kMaxPermanentSize = 24;
inline constexpr int kMaxNaivePermanentSize = 10;

using BlochVector = std::array<double, 3>;

struct EntanglementReport {
    /// perm(A_N) / N!, the perma-concurrence.
    double p_d = 0.0;
    Complex permanent;
    /// |c1^2 - 2 c0 c2|, present only for two stars (d = 3).
    std::optional<double> concurrence;
    /// n_i . n_j for every pair of stars.
    Eigen::MatrixXd bloch_pair_products;
};

GramMatrix gram(const StarSet &stars);

/// Glynn's formula over sign vectors visited in Gray-code order, O(2^N N), with
/// extended-precision row sums and compensated accumulation. Throws SizeLimit
/// for N > 24 and DimensionMismatch for a non-square matrix.
Complex permanent(const Eigen::MatrixXcd &matrix);
Complex permanent(const GramMatrix &matrix);

/// Ryser inclusion-exclusion over column subsets in Gray-code order, with the
/// same precision and limits; an independent O(2^N N) route for cross-checks.
Complex permanent_ryser(const Eigen::MatrixXcd &matrix);

/// Direct sum over S_N of prod_i A[i][sigma(i)]. Throws SizeLimit for N > 10.
Complex permanent_naive(const Eigen::MatrixXcd &matrix);

EntanglementReport perma_concurrence(const StarSet &stars);

/// |c1^2 - 2 c0 c2|. Throws DimensionMismatch unless d = 3.
double concurrence_d3(const SymmetricState &state);

/// Closed-form P_d for two, three and four stars. overlap_form uses the pairwise
/// (and, for three stars, triple) overlaps; bloch_form uses n_i . n_j only.
/// For three stars reduced_form is (|<1|2>|^2 + |<2|3>|^2 + |<3|1>|^2) / 3.
struct ClosedFormP {
    int n_qubits = 0;
    double overlap_form = 0.0;
    double bloch_form = 0.0;
    std::optional<double> reduced_form;
};

/// Throws UnsupportedDimension unless N is 2, 3 or 4.
ClosedFormP closed_form_p(const StarSet &stars);

/// ((z + conj z), -i (z - conj z), 1 - |z|^2) / (1 + |z|^2), computed from the
/// homogeneous coordinates; (0, 0, -1) at infinity.
BlochVector bloch_vector(const Star &star);

double dot(const BlochVector &a, const BlochVector &b);

}  // namespace stellar

#endif
