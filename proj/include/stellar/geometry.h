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

#ifndef STELLAR_GEOMETRY_H
#define STELLAR_GEOMETRY_H

#include <optional>

#include "stellar/core.h"

namespace stellar {

inline constexpr double kDefaultMetricStep = 1e-5;
/// Stars closer than this multiple of the step are rejected by metric_symmetric.
inline constexpr double kCollisionFactor = 10.0;
inline constexpr double kHermitianTolerance = 1e-6;

/// g[i][j] = d^2 K / dz_i dconj(z_j) in the Wirtinger convention.
struct MetricTensor {
    Eigen::MatrixXcd entries;
    /// max |g[i][j] - conj(g[j][i])| before symmetrization; zero for closed forms.
    double hermitian_residual = 0.0;

    int dim() const { return static_cast<int>(entries.rows()); }
};

/// perm(Gram) / N! for finite or infinite stars.
double perma_value(const StarSet &stars);

/// K = ln P_d + sum_i ln(1 + |z_i|^2). Throws StarAtInfinity.
double kahler_potential(const StarSet &stars);

/// 1 / (1 + |z|^2)^2.
double metric_single_qubit(Complex z);

/// diag(1 / (1 + |z_i|^2)^2). Throws StarAtInfinity.
MetricTensor metric_separable(const StarSet &stars);

/// Central differences of ln P_d combined into the mixed Wirtinger derivative,
/// plus the analytic single-qubit diagonal, then Hermitian-symmetrized.
/// Throws StarAtInfinity, StarsTooClose (some pair within 10 * step), RangeError (step <= 0).
MetricTensor metric_symmetric(const StarSet &stars, double step = kDefaultMetricStep);

/// Smallest eigenvalue of the (Hermitian) metric.
double min_eigenvalue(const MetricTensor &metric);

/// Step-halving diagnostic. Entries at h, h/2 and h/4 give a Richardson
/// reference R = (4 g(h/4) - g(h/2)) / 3; ratio = max|g(h) - R| / max|g(h/2) - R|,
/// which tends to 4 for an O(h^2) stencil. Empty when both errors vanish
/// (for example N = 1, where ln P_d is constant).
struct StepHalving {
    double step = 0.0;
    double max_change = 0.0;  // max |g(h) - g(h/2)|
    std::optional<double> ratio;
};

StepHalving step_halving(const StarSet &stars, double step);

/// U = [[conj(a_t), conj(b_t)], [-b_t, a_t]] for the target (a_t, b_t). Acting on
/// (alpha, beta) it sends the target to z = 0 and its antipode to infinity.
struct ChartRotation {
    Star target;
    Eigen::Matrix2cd unitary;  // acts on (alpha, beta)

    Star apply(const Star &s) const;
};

ChartRotation chart_rotation(const Star &target);

struct RotatedChart {
    StarSet stars;
    ChartRotation rotation;
};

/// Rotates the constellation so that target lands at z = 0. Throws
/// DegenerateRotation when a star is antipodal to the target, since that star
/// would land at infinity.
RotatedChart rotate_chart(const StarSet &stars, const Star &target);

/// Identity when every star is already finite; otherwise the grid point that is
/// farthest (in the worst case over the stars) from every star's antipode.
Star choose_chart_target(const StarSet &stars);

}  // namespace stellar

#endif
