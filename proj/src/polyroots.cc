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

#include "stellar/polyroots.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

namespace stellar::poly {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct HornerResult {
    Complex value;
    Complex derivative;
    double scale;  // sum_k |a_k| |x|^k
};

HornerResult horner(std::span<const Complex> a, Complex x) {
    Complex p = a.back();
    Complex dp = 0.0;
    double s = std::abs(a.back());
    const double ax = std::abs(x);
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        dp = dp * x + p;
        p = p * x + a[k];
        s = s * ax + std::abs(a[k]);
    }
    return {p, dp, s};
}

// Starting radii from the upper convex hull of (k, log|a_k|).
std::vector<Complex> initial_guesses(std::span<const Complex> a, std::mt19937_64 &rng) {
    const int m = static_cast<int>(a.size()) - 1;
    std::vector<int> hull;
    for (int k = 0; k <= m; ++k) {
        if (a[static_cast<std::size_t>(k)] == Complex(0.0)) continue;
        const double y = std::log(std::abs(a[static_cast<std::size_t>(k)]));
        while (hull.size() >= 2) {
            const int i = hull[hull.size() - 2];
            const int j = hull.back();
            const double yi = std::log(std::abs(a[static_cast<std::size_t>(i)]));
            const double yj = std::log(std::abs(a[static_cast<std::size_t>(j)]));
            // Drop j if it lies on or below the chord from i to k.
            if ((yj - yi) * (k - i) <= (y - yi) * (j - i)) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(k);
    }

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double offset = 2.0 * std::numbers::pi * unit(rng);
    std::vector<Complex> guesses;
    guesses.reserve(static_cast<std::size_t>(m));
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        const int lo = hull[e];
        const int hi = hull[e + 1];
        const int count = hi - lo;
        const double radius =
            std::pow(std::abs(a[static_cast<std::size_t>(lo)]) / std::abs(a[static_cast<std::size_t>(hi)]),
                     1.0 / count);
        for (int j = 0; j < count; ++j) {
            const double jitter = 0.25 * (unit(rng) - 0.5);
            const double angle = 2.0 * std::numbers::pi * (j + jitter) / count + offset +
                                 2.0 * std::numbers::pi * static_cast<double>(guesses.size()) / m;
            guesses.push_back(std::polar(radius, angle));
        }
    }
    return guesses;
}

// Taylor coefficients p^(j)(c)/j!, j = 0..count-1, by repeated synthetic division.
std::vector<Complex> taylor_coefficients(std::span<const Complex> a, Complex c, int count) {
    std::vector<Complex> q(a.begin(), a.end());
    std::vector<Complex> out;
    for (int j = 0; j < count && !q.empty(); ++j) {
        Complex carry = 0.0;
        for (std::size_t k = q.size(); k-- > 0;) {
            const Complex next = q[k] + carry * c;
            q[k] = carry;
            carry = next;
        }
        out.push_back(carry);
        q.pop_back();
    }
    return out;
}

std::vector<double> taylor_scales(std::span<const Complex> a, double c, int count) {
    std::vector<double> q;
    for (const auto &x : a) q.push_back(std::abs(x));
    std::vector<double> out;
    for (int j = 0; j < count && !q.empty(); ++j) {
        double carry = 0.0;
        for (std::size_t k = q.size(); k-- > 0;) {
            const double next = q[k] + carry * c;
            q[k] = carry;
            carry = next;
        }
        out.push_back(carry);
        q.pop_back();
    }
    return out;
}

bool is_multiple_root(std::span<const Complex> a, Complex c, int multiplicity, double tol) {
    const auto b = taylor_coefficients(a, c, multiplicity);
    const auto s = taylor_scales(a, std::abs(c), multiplicity);
    for (int j = 0; j < multiplicity; ++j) {
        if (std::abs(b[static_cast<std::size_t>(j)]) > tol * s[static_cast<std::size_t>(j)]) return false;
    }
    return true;
}

// A k-fold root of p is a simple root of p^(k-1). Newton on p^(k-1) from the
// cluster centroid recovers it to near machine precision.
Complex refine_multiple_root(std::span<const Complex> a, Complex c, int multiplicity) {
    for (int it = 0; it < 30; ++it) {
        const auto b = taylor_coefficients(a, c, multiplicity + 1);
        if (static_cast<int>(b.size()) <= multiplicity) break;
        const Complex slope = static_cast<double>(multiplicity) * b[static_cast<std::size_t>(multiplicity)];
        if (slope == Complex(0.0)) break;
        const Complex step = b[static_cast<std::size_t>(multiplicity) - 1] / slope;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        c -= step;
        if (std::abs(step) <= kEps * std::max(1.0, std::abs(c))) break;
    }
    return c;
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
};

struct Clusters {
    std::vector<int> label;
    std::vector<Complex> center;
};

// Merges groups of roots that either sit within cluster_radius of each other or
// pass the multiplicity test at their refined center. Groups are grown in order
// of increasing pairwise distance, so candidate clusters form a nested family
// and every root ends up in the largest accepted group that contains it.

Clusters cluster_roots(std::span<const Complex> a, const std::vector<Complex> &roots, const RootOptions &options) {
    const int m = static_cast<int>(roots.size());
    Clusters out{std::vector<int>(static_cast<std::size_t>(m)), roots};
    std::iota(out.label.begin(), out.label.end(), 0);
    if (m < 2) return out;

    struct Edge {
        double d;
        int i;
        int j;
    };
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) edges.push_back({chordal(roots[static_cast<std::size_t>(i)], roots[static_cast<std::size_t>(j)]), i, j});
    }
    std::sort(edges.begin(), edges.end(), [](const Edge &x, const Edge &y) { return x.d < y.d; });

    DisjointSets sets(m);
    for (const auto &e : edges) {
        if (e.d > 0.5) break;
        const int ri = sets.find(e.i);
        const int rj = sets.find(e.j);
        if (ri == rj) continue;
        sets.parent[static_cast<std::size_t>(rj)] = ri;

        std::vector<int> members;
        for (int k = 0; k < m; ++k) {
            if (sets.find(k) == ri) members.push_back(k);
        }
        double diameter = 0.0;
        Complex centroid = 0.0;
        for (int x : members) {
            centroid += roots[static_cast<std::size_t>(x)];
            for (int y : members) diameter = std::max(diameter, chordal(roots[static_cast<std::size_t>(x)], roots[static_cast<std::size_t>(y)]));
        }
        const int k = static_cast<int>(members.size());
        centroid /= static_cast<double>(k);
        Complex center = refine_multiple_root(a, centroid, k);
        const bool near = chordal(center, centroid) <= std::max(diameter, options.cluster_radius);
        bool accept = near && is_multiple_root(a, center, k, options.multiplicity_tol);
        if (!accept && diameter <= options.cluster_radius) {
            accept = true;
            if (!near) center = centroid;
        }
        if (accept) {
            for (int x : members) {
                out.label[static_cast<std::size_t>(x)] = members.front();
                out.center[static_cast<std::size_t>(x)] = center;
            }
        }
    }
    return out;
}

Complex newton_polish(std::span<const Complex> a, Complex x) {
    auto h = horner(a, x);
    for (int it = 0; it < 5; ++it) {
        if (h.derivative == Complex(0.0) || std::abs(h.value) == 0.0) break;
        const Complex next = x - h.value / h.derivative;
        const auto hn = horner(a, next);
        if (!(std::abs(hn.value) < std::abs(h.value))) break;
        x = next;
        h = hn;
    }
    return x;
}

}  // namespace

double chordal(Complex a, Complex b) {
    return std::abs(a - b) / std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
}

Complex evaluate(std::span<const Complex> coeffs, Complex x) {
    if (coeffs.empty()) return 0.0;
    return horner(coeffs, x).value;
}

double relative_residual(std::span<const Complex> coeffs, Complex x) {
    if (coeffs.empty()) return 0.0;
    const auto h = horner(coeffs, x);
    return h.scale == 0.0 ? 0.0 : std::abs(h.value) / h.scale;
}

std::vector<Complex> companion_roots(std::span<const Complex> coeffs) {
    const int m = static_cast<int>(coeffs.size()) - 1;
    if (m < 1) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < m; ++i) companion(i, m - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<Complex> out;
    for (int i = 0; i < m; ++i) out.push_back(solver.eigenvalues()(i));
    return out;
}

RootResult find_roots(std::span<const Complex> coeffs, const RootOptions &options) {
    std::size_t top = coeffs.size();
    while (top > 0 && coeffs[top - 1] == Complex(0.0)) --top;
    if (top == 0) {
        throw Error(ErrorCode::RootFindingFailed, "zero polynomial has no well-defined roots");
    }
    std::size_t zeros = 0;
    while (coeffs[zeros] == Complex(0.0)) ++zeros;
    const std::span<const Complex> a = coeffs.subspan(zeros, top - zeros);
    const int m = static_cast<int>(a.size()) - 1;

    RootResult result;
    std::vector<Complex> roots;
    if (m == 1) {
        roots.push_back(-a[0] / a[1]);
    } else if (m > 1) {
        std::mt19937_64 rng(options.seed);
        roots = initial_guesses(a, rng);
        std::vector<bool> done(static_cast<std::size_t>(m), false);
        const double stop = 4.0 * m * kEps;
        bool converged = false;
        for (int it = 1; it <= options.max_iterations && !converged; ++it) {
            result.iterations = it;
            converged = true;
            for (int i = 0; i < m; ++i) {
                if (done[static_cast<std::size_t>(i)]) continue;
                Complex &x = roots[static_cast<std::size_t>(i)];
                const auto h = horner(a, x);
                if (std::abs(h.value) <= stop * h.scale) {
                    done[static_cast<std::size_t>(i)] = true;
                    continue;
                }
                converged = false;
                Complex repulsion = 0.0;
                for (int j = 0; j < m; ++j) {
                    if (j != i) repulsion += 1.0 / (x - roots[static_cast<std::size_t>(j)]);
                }
                const Complex ratio = h.value / h.derivative;
                const Complex step = ratio / (1.0 - ratio * repulsion);
                if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
                x -= step;
                if (std::abs(step) <= kEps * std::abs(x)) done[static_cast<std::size_t>(i)] = true;
            }
        }
        if (!converged) {
            converged = std::all_of(done.begin(), done.end(), [](bool b) { return b; });
        }
        if (!converged) {
            roots = companion_roots(a);
            result.used_companion_fallback = true;
        }

        const auto clusters = cluster_roots(a, roots, options);
        std::vector<int> size(roots.size(), 0);
        for (std::size_t i = 0; i < roots.size(); ++i) ++size[static_cast<std::size_t>(clusters.label[i])];
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const int count = size[static_cast<std::size_t>(clusters.label[i])];
            roots[i] = count == 1 ? newton_polish(a, roots[i]) : clusters.center[i];
            result.multiplicity.push_back(count);
        }
    }

    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double res = relative_residual(a, roots[i]);
        if (!(res <= options.residual_tol)) {
            throw Error(ErrorCode::RootFindingFailed,
                        "root residual " + std::to_string(res) + " above tolerance after " +
                            std::to_string(result.iterations) + " iterations");
        }
    }
    if (m == 1) result.multiplicity.push_back(1);

    result.roots = std::move(roots);
    for (std::size_t i = 0; i < zeros; ++i) {
        result.roots.push_back(0.0);
        result.multiplicity.push_back(static_cast<int>(zeros));
    }
    return result;
}

}  // namespace stellar::poly
