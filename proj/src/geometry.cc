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

#include "stellar/geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stellar/entanglement.h"

namespace stellar {

namespace {

void require_finite(const StarSet &stars) {
    if (stars.any_infinite()) {
        throw Error(ErrorCode::StarAtInfinity, "the stereographic chart excludes infinity; rotate the constellation first");
    }
}

std::vector<Complex> coordinates(const StarSet &stars) {
    std::vector<Complex> z;
    for (const auto &s : stars.stars) z.push_back(s.z());
    return z;
}

double log_p(const std::vector<Complex> &z) { return std::log(perma_value(star_set(z))); }

// Real coordinate u in [0, 2N): even u is Re z_{u/2}, odd u is Im z_{u/2}.
void shift(std::vector<Complex> &z, int u, double h) {
    auto &c = z[static_cast<std::size_t>(u / 2)];
    c += (u % 2 == 0) ? Complex(h, 0.0) : Complex(0.0, h);
}

// Central second difference d^2 f / du dv.
double second_difference(const std::vector<Complex> &z, int u, int v, double h, double f0) {
    if (u == v) {
        auto plus = z;
        auto minus = z;
        shift(plus, u, h);
        shift(minus, u, -h);
        return (log_p(plus) - 2.0 * f0 + log_p(minus)) / (h * h);
    }
    auto at = [&](double su, double sv) {
        auto w = z;
        shift(w, u, su * h);
        shift(w, v, sv * h);
        return log_p(w);
    };
    return (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * h * h);
}

// Wirtinger Hessian of ln P_d, before symmetrization.
Eigen::MatrixXcd log_p_hessian(const std::vector<Complex> &z, double h) {
    const int n = static_cast<int>(z.size());
    const double f0 = log_p(z);
    Eigen::MatrixXd real_hessian(2 * n, 2 * n);
    for (int u = 0; u < 2 * n; ++u) {
        for (int v = 0; v < 2 * n; ++v) real_hessian(u, v) = second_difference(z, u, v, h, f0);
    }
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double xx = real_hessian(2 * i, 2 * j);
            const double yy = real_hessian(2 * i + 1, 2 * j + 1);
            const double xy = real_hessian(2 * i, 2 * j + 1);
            const double yx = real_hessian(2 * i + 1, 2 * j);
            g(i, j) = Complex(0.25 * (xx + yy), 0.25 * (xy - yx));
        }
    }
    return g;
}

void check_collisions(const StarSet &stars, double step) {
    const double limit = kCollisionFactor * step;
    for (int i = 0; i < stars.size(); ++i) {
        for (int j = i + 1; j < stars.size(); ++j) {
            const double d = chordal_distance(stars[i], stars[j]);
            if (d <= limit) {
                throw Error(ErrorCode::StarsTooClose, "stars " + std::to_string(i) + " and " + std::to_string(j) +
                                                          " are " + std::to_string(d) + " apart (limit " +
                                                          std::to_string(limit) + ")");
            }
        }
    }
}

}  // namespace

double perma_value(const StarSet &stars) {
    double factorial = 1.0;
    for (int i = 2; i <= stars.size(); ++i) factorial *= i;
    return permanent(gram(stars)).real() / factorial;
}

double kahler_potential(const StarSet &stars) {
    require_finite(stars);
    double k = std::log(perma_value(stars));
    for (const auto &s : stars.stars) k += std::log1p(std::norm(s.z()));
    return k;
}

double metric_single_qubit(Complex z) {
    const double d = 1.0 + std::norm(z);
    return 1.0 / (d * d);
}

MetricTensor metric_separable(const StarSet &stars) {
    require_finite(stars);
    const int n = stars.size();
    MetricTensor m{Eigen::MatrixXcd::Zero(n, n)};
    for (int i = 0; i < n; ++i) m.entries(i, i) = metric_single_qubit(stars[i].z());
    return m;
}

MetricTensor metric_symmetric(const StarSet &stars, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw Error(ErrorCode::RangeError, "finite-difference step must be positive");
    }
    require_finite(stars);
    check_collisions(stars, step);
    const auto z = coordinates(stars);

    MetricTensor m;
    m.entries = log_p_hessian(z, step);
    m.hermitian_residual = (m.entries - m.entries.adjoint()).cwiseAbs().maxCoeff();
    m.entries = 0.5 * (m.entries + m.entries.adjoint()).eval();
    for (int i = 0; i < m.dim(); ++i) m.entries(i, i) += metric_single_qubit(z[static_cast<std::size_t>(i)]);
    return m;
}

double min_eigenvalue(const MetricTensor &metric) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(metric.entries, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

StepHalving step_halving(const StarSet &stars, double step) {
    const auto g1 = metric_symmetric(stars, step).entries;
    const auto g2 = metric_symmetric(stars, step / 2).entries;
    const auto g4 = metric_symmetric(stars, step / 4).entries;
    const Eigen::MatrixXcd reference = (4.0 * g4 - g2) / 3.0;

    StepHalving out;
    out.step = step;
    out.max_change = (g1 - g2).cwiseAbs().maxCoeff();
    const double e1 = (g1 - reference).cwiseAbs().maxCoeff();
    const double e2 = (g2 - reference).cwiseAbs().maxCoeff();
    if (e2 > 0.0) out.ratio = e1 / e2;
    return out;
}

Star ChartRotation::apply(const Star &s) const {
    const Eigen::Vector2cd v = unitary * Eigen::Vector2cd(s.alpha(), s.beta());
    return Star::homogeneous(v(0), v(1));
}

ChartRotation chart_rotation(const Star &target) {
    ChartRotation r{target, Eigen::Matrix2cd()};
    const Complex a = target.alpha();
    const Complex b = target.beta();
    r.unitary << std::conj(a), std::conj(b), -b, a;
    return r;
}

RotatedChart rotate_chart(const StarSet &stars, const Star &target) {
    const auto rotation = chart_rotation(target);
    std::vector<Star> out;
    for (int i = 0; i < stars.size(); ++i) {
        // The new alpha is <target|star>; it vanishes exactly for the antipode.
        if (std::abs(overlap(target, stars[i])) <= kNormTolerance) {
            throw Error(ErrorCode::DegenerateRotation,
                        "star " + std::to_string(i) + " is antipodal to the rotation target");
        }
        out.push_back(rotation.apply(stars[i]));
    }
    return {StarSet(std::move(out), stars.source_degree), rotation};
}

Star choose_chart_target(const StarSet &stars) {
    if (!stars.any_infinite()) return Star();
    // Fibonacci lattice on the sphere; pick the point whose worst overlap with
    // any star is largest, so that every rotated star stays well inside the chart.
    constexpr int kGrid = 256;
    Star best;
    double best_score = -1.0;
    for (int k = 0; k < kGrid; ++k) {
        const double cos_theta = 1.0 - 2.0 * (k + 0.5) / kGrid;
        const double theta = std::acos(cos_theta);
        const double phi = k * std::numbers::pi * (3.0 - std::sqrt(5.0));
        const Star candidate = Star::homogeneous(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi));
        double score = 1.0;
        for (const auto &s : stars.stars) score = std::min(score, std::abs(overlap(candidate, s)));
        if (score > best_score) {
            best_score = score;
            best = candidate;
        }
    }
    return best;
}

}  // namespace stellar
