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

#include "stellar/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace stellar::oracle {

namespace {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

void require_qubits(int n, int lo, int hi, const char *what) {
    if (n < lo || n > hi) {
        throw Error(ErrorCode::RangeError, std::string(what) + ": N = " + std::to_string(n) + " outside [" +
                                               std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

Eigen::Index space_dim(int n) { return Eigen::Index{1} << n; }

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Matrix commutator(const Matrix &a, const Matrix &b) { return a * b - b * a; }

Matrix matrix_power(const Matrix &m, int p) {
    Matrix r = Matrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < p; ++i) r = r * m;
    return r;
}

Vector qubit(const Star &s) {
    Vector v(2);
    v << s.alpha(), s.beta();
    return v;
}

Vector kron(const Vector &a, const Vector &b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

CheckResult check(std::string name, double residual, double tol) {
    return CheckResult{std::move(name), residual <= tol, residual};
}

constexpr double kAlgebraTol = 1e-10;

}  // namespace

bool all_pass(const Report &report) {
    return std::all_of(report.begin(), report.end(), [](const CheckResult &c) { return c.pass; });
}

FullState build_dicke(int n, int k) {
    require_qubits(n, 1, kMaxQubits, "build_dicke");
    if (k < 0 || k > n) {
        throw Error(ErrorCode::RangeError, "build_dicke: k = " + std::to_string(k) + " outside [0, N]");
    }
    const double amp = 1.0 / std::sqrt(binomial(n, k));
    FullState out{n, Vector::Zero(space_dim(n))};
    for (Eigen::Index x = 0; x < out.vector.size(); ++x) {
        if (std::popcount(static_cast<unsigned long long>(x)) == k) out.vector(x) = amp;
    }
    return out;
}

Eigen::MatrixXcd dicke_basis(int n) {
    Matrix v(space_dim(n), n + 1);
    for (int k = 0; k <= n; ++k) v.col(k) = build_dicke(n, k).vector;
    return v;
}

CollectiveOperators build_collective(int n) {
    require_qubits(n, 1, kMaxQubits, "build_collective");
    const Eigen::Index dim = space_dim(n);
    CollectiveOperators ops{n, Matrix::Zero(dim, dim), Matrix::Zero(dim, dim), Matrix::Zero(dim, dim)};
    for (Eigen::Index x = 0; x < dim; ++x) {
        for (int site = 0; site < n; ++site) {
            // Qubit i (1-based from the left) lives in bit N - i.
            const Eigen::Index bit = Eigen::Index{1} << (n - 1 - site);
            if ((x & bit) == 0) {
                ops.q_plus(x | bit, x) += 1.0;  // q+ = |1><0|
            } else {
                ops.k_op(x, x) += 1.0;  // K = |1><1|
            }
        }
    }
    ops.q_minus = ops.q_plus.adjoint();
    return ops;
}

FullState product_state(const StarSet &stars) {
    require_qubits(stars.size(), 1, kMaxQubits, "product_state");
    Vector v = qubit(stars[0]);
    for (int i = 1; i < stars.size(); ++i) v = kron(v, qubit(stars[i]));
    return FullState{stars.size(), v};
}

SymmetrizedProduct symmetrized_product(const StarSet &stars) {
    const int n = stars.size();
    require_qubits(n, 1, kMaxQubits, "symmetrized_product");

    std::vector<Vector> factors;
    for (const auto &s : stars.stars) factors.push_back(qubit(s));

    // Depth-first over orderings; partial[t] holds the tensor product of the
    // first t chosen factors, so shared prefixes are built once.
    std::vector<Vector> partial(static_cast<std::size_t>(n) + 1);
    partial[0] = Vector::Ones(1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    Vector sum = Vector::Zero(space_dim(n));

    auto recurse = [&](auto &&self, int depth) -> void {
        if (depth == n) {
            sum += partial[static_cast<std::size_t>(n)];
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = true;
            partial[static_cast<std::size_t>(depth) + 1] =
                kron(partial[static_cast<std::size_t>(depth)], factors[static_cast<std::size_t>(j)]);
            self(self, depth + 1);
            used[static_cast<std::size_t>(j)] = false;
        }
    };
    recurse(recurse, 0);

    const double prenorm_sq = sum.squaredNorm();
    if (prenorm_sq == 0.0) {
        throw Error(ErrorCode::RangeError, "symmetrized product vanished");
    }
    return SymmetrizedProduct{FullState{n, sum / std::sqrt(prenorm_sq)}, prenorm_sq};
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd &m) {
    const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
    if (!std::isfinite(norm1)) {
        throw Error(ErrorCode::ExpmNoConvergence, "non-finite matrix");
    }
    int squarings = 0;
    if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    const Matrix a = m / std::ldexp(1.0, squarings);

    Matrix result = Matrix::Identity(m.rows(), m.cols());
    Matrix term = result;
    bool converged = false;
    for (int k = 1; k <= 60; ++k) {
        term = (term * a) / static_cast<double>(k);
        result += term;
        if (max_abs(term) <= 1e-18 * max_abs(result)) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw Error(ErrorCode::ExpmNoConvergence, "Taylor core did not converge in 60 terms");
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    if (!result.allFinite()) {
        throw Error(ErrorCode::ExpmNoConvergence, "overflow while squaring");
    }
    return result;
}

Eigen::VectorXcd expm_action(const Eigen::MatrixXcd &m, const Eigen::VectorXcd &v) {
    const double norm1 = m.size() == 0 ? 0.0 : m.cwiseAbs().colwise().sum().maxCoeff();
    if (!std::isfinite(norm1)) {
        throw Error(ErrorCode::ExpmNoConvergence, "non-finite matrix");
    }
    const int steps = std::max(1, static_cast<int>(std::ceil(norm1 / 0.5)));
    const Matrix a = m / static_cast<double>(steps);
    Vector result = v;
    for (int s = 0; s < steps; ++s) {
        Vector term = result;
        bool converged = false;
        for (int k = 1; k <= 60; ++k) {
            term = (a * term) / static_cast<double>(k);
            result += term;
            if (max_abs(term) <= 1e-18 * max_abs(result)) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw Error(ErrorCode::ExpmNoConvergence, "Taylor series did not converge in 60 terms");
        }
    }
    return result;
}

FullState displaced_ground(int n, Complex xi) {
    require_qubits(n, 1, kMaxOperatorQubits, "displaced_ground");
    const CollectiveOperators ops = build_collective(n);
    const Matrix generator = xi * ops.q_plus - std::conj(xi) * ops.q_minus;
    // |N;0> = |00...0> is basis vector 0.
    Vector v = expm_action(generator, Vector::Unit(space_dim(n), 0));
    // The generator is anti-Hermitian, so anything but a unit vector means the
    // exponential went wrong.
    if (std::abs(v.norm() - 1.0) > 1e-10) {
        throw Error(ErrorCode::ExpmNoConvergence, "exponential of an anti-Hermitian generator is not unitary");
    }
    return FullState{n, v};
}

Star displacement_star(Complex xi) {
    const double r = std::abs(xi);
    const Complex phase = r == 0.0 ? Complex(1.0) : xi / r;
    return Star::homogeneous(std::cos(r), phase * std::sin(r));
}

FullState embed(const SymmetricState &state) {
    const int n = state.n_qubits();
    require_qubits(n, 1, kMaxQubits, "embed");
    FullState out{n, Vector::Zero(space_dim(n))};
    for (int k = 0; k <= n; ++k) out.vector += state[k] * build_dicke(n, k).vector;
    return out;
}

std::vector<Complex> project(const FullState &state) {
    std::vector<Complex> c;
    for (int k = 0; k <= state.n_qubits; ++k) {
        c.push_back(build_dicke(state.n_qubits, k).vector.dot(state.vector));  // dot conjugates the left side
    }
    return c;
}

double fidelity(const FullState &a, const FullState &b) {
    if (a.vector.size() != b.vector.size()) {
        throw Error(ErrorCode::DimensionMismatch, "tensor-space states of different size");
    }
    return std::abs(a.vector.dot(b.vector));
}

Report check_algebra(int n) {
    require_qubits(n, 1, kMaxOperatorQubits, "check_algebra");
    const CollectiveOperators ops = build_collective(n);
    const Matrix &qp = ops.q_plus;
    const Matrix &qm = ops.q_minus;
    const Matrix &k = ops.k_op;
    const Eigen::Index dim = space_dim(n);
    const Matrix id = Matrix::Identity(dim, dim);
    const Matrix v = dicke_basis(n);
    auto on_sym = [&](const Matrix &m) { return Matrix(v.adjoint() * m * v); };
    const double nn = static_cast<double>(n);

    Report r;
    const Matrix comm = commutator(qm, qp);
    r.push_back(check("a.commutator_full", max_abs(comm - (nn * id - 2.0 * k)), kAlgebraTol));
    r.push_back(check("a.commutator_symmetric", max_abs(on_sym(comm - (nn * id - 2.0 * k))), kAlgebraTol));

    r.push_back(check("b.number_raising", max_abs(commutator(k, qp) - qp), kAlgebraTol));
    r.push_back(check("b.number_lowering", max_abs(commutator(k, qm) + qm), kAlgebraTol));

    r.push_back(check("c.nilpotent_raising", max_abs(matrix_power(qp, n + 1)), kAlgebraTol));
    r.push_back(check("c.nilpotent_lowering", max_abs(matrix_power(qm, n + 1)), kAlgebraTol));
    {
        // (q+)^N = N! q1+ ... qN+ sends |0...0> to N! |1...1> and nothing else survives.
        double fact = 1.0;
        for (int i = 2; i <= n; ++i) fact *= i;
        Matrix expected = Matrix::Zero(dim, dim);
        expected(dim - 1, 0) = fact;
        r.push_back(check("c.top_power_raising", max_abs(matrix_power(qp, n) - expected) / fact, kAlgebraTol));
    }

    const Matrix pm = commutator(qp, qm);
    r.push_back(check("d.trilinear_lowering", max_abs(on_sym(commutator(qm, pm) - 2.0 * qm)), kAlgebraTol));
    r.push_back(check("d.trilinear_raising", max_abs(on_sym(commutator(qp, pm) + 2.0 * qp)), kAlgebraTol));

    const double kappa = -1.0 / nn;
    const Matrix ap = qp / std::sqrt(nn);
    const Matrix am = qm / std::sqrt(nn);
    r.push_back(check("e.kappa_commutator", max_abs(on_sym(commutator(am, ap) - (id + 2.0 * kappa * k))),
                      kAlgebraTol));
    r.push_back(check("e.kappa_number", std::max(max_abs(commutator(k, ap) - ap), max_abs(commutator(k, am) + am)),
                      kAlgebraTol));
    r.push_back(check("e.kappa_adjoint", std::max(max_abs(am.adjoint() - ap), max_abs(k.adjoint() - k)),
                      kAlgebraTol));

    // su(2) dictionary J+ = q-, J- = q+, Jz = N/2 - K against the angular momentum
    // actions with j = N/2, m = N/2 - k.
    const Matrix jp = qm;
    const Matrix jm = qp;
    const Matrix jz = 0.5 * nn * id - k;
    double ladder = 0.0;
    for (int kk = 0; kk <= n; ++kk) {
        const double j = 0.5 * nn;
        const double m = j - kk;
        const Vector ket = v.col(kk);
        Vector up_expected = Vector::Zero(dim);
        if (kk > 0) up_expected = std::sqrt((j - m) * (j + m + 1.0)) * v.col(kk - 1);
        Vector down_expected = Vector::Zero(dim);
        if (kk < n) down_expected = std::sqrt((j + m) * (j - m + 1.0)) * v.col(kk + 1);
        ladder = std::max(ladder, max_abs(Vector(jp * ket - up_expected)));
        ladder = std::max(ladder, max_abs(Vector(jm * ket - down_expected)));
        ladder = std::max(ladder, max_abs(Vector(jz * ket - m * ket)));
    }
    r.push_back(check("f.su2_actions", ladder, kAlgebraTol));
    r.push_back(check("f.su2_commutators",
                      std::max({max_abs(on_sym(commutator(jp, jm) - 2.0 * jz)),
                                max_abs(on_sym(commutator(jz, jp) - jp)), max_abs(on_sym(commutator(jz, jm) + jm))}),
                      kAlgebraTol));
    // Reported for the record: the deformation parameter of A_kappa realized by N qubits.
    r.push_back(CheckResult{"e.kappa_value", std::abs(kappa * nn + 1.0) <= 1e-15, kappa});
    return r;
}

Report check_ladder(int n) {
    require_qubits(n, 1, kMaxOperatorQubits, "check_ladder");
    const CollectiveOperators ops = build_collective(n);
    const Matrix v = dicke_basis(n);
    const Eigen::Index dim = space_dim(n);
    // F(N, l) = l (N - l + 1), evaluated at l = k + s +- 1/2 with s = 1/2.
    auto f = [n](double l) { return l * (n - l + 1.0); };
    const double s = 0.5;

    double raise = 0.0;
    double lower = 0.0;
    double number = 0.0;
    double repeated = 0.0;
    for (int k = 0; k <= n; ++k) {
        const Vector ket = v.col(k);
        Vector up = Vector::Zero(dim);
        if (k < n) up = std::sqrt(f(k + s + 0.5)) * v.col(k + 1);
        Vector down = Vector::Zero(dim);
        if (k > 0) down = std::sqrt(f(k + s - 0.5)) * v.col(k - 1);
        raise = std::max(raise, max_abs(Vector(ops.q_plus * ket - up)));
        lower = std::max(lower, max_abs(Vector(ops.q_minus * ket - down)));
        number = std::max(number, max_abs(Vector(ops.k_op * ket - static_cast<double>(k) * ket)));

        // (q+)^k |N;0> = sqrt(k! N! / (N-k)!) |N;k>
        Vector raised = v.col(0);
        for (int i = 0; i < k; ++i) raised = ops.q_plus * raised;
        double factor = 1.0;  // k! N! / (N-k)! = k! * N (N-1) ... (N-k+1)
        for (int i = 1; i <= k; ++i) factor *= static_cast<double>(i) * (n - k + i);
        repeated = std::max(repeated, max_abs(Vector(raised - std::sqrt(factor) * ket)) / std::sqrt(factor));
    }
    Report r;
    r.push_back(check("ladder.raising", raise, kAlgebraTol));
    r.push_back(check("ladder.lowering", lower, kAlgebraTol));
    r.push_back(check("ladder.number", number, kAlgebraTol));
    r.push_back(check("ladder.repeated_raising", repeated, kAlgebraTol));
    r.push_back(check("dicke.orthonormal", max_abs(Matrix(v.adjoint() * v - Matrix::Identity(n + 1, n + 1))), 1e-12));
    return r;
}

RecursionReport check_dicke_recursion(int n) {
    require_qubits(n, 2, kMaxQubits, "check_dicke_recursion");
    RecursionReport report;
    report.n_qubits = n;
    const Vector zero = Vector::Unit(2, 0);
    const Vector one = Vector::Unit(2, 1);
    for (int k = 0; k <= n; ++k) {
        RecursionTerm t;
        t.k = k;
        t.coeff_zero = std::sqrt(static_cast<double>(n - k) / n);
        t.coeff_one = std::sqrt(static_cast<double>(k) / n);
        Vector rhs = Vector::Zero(space_dim(n));
        if (k < n) rhs += t.coeff_zero * kron(build_dicke(n - 1, k).vector, zero);
        if (k > 0) rhs += t.coeff_one * kron(build_dicke(n - 1, k - 1).vector, one);
        t.residual = max_abs(Vector(build_dicke(n, k).vector - rhs));
        report.max_residual = std::max(report.max_residual, t.residual);
        report.terms.push_back(t);
    }
    report.pass = report.max_residual <= 1e-12;
    return report;
}

Eigen::MatrixXcd fubini_study_metric(const StarSet &stars) {
    const int n = stars.size();
    std::vector<Complex> z;
    for (const auto &s : stars.stars) z.push_back(s.z());

    Vector phi(n + 1);
    const auto s_all = elementary_symmetric_all(z);
    for (int k = 0; k <= n; ++k) phi(k) = s_all[static_cast<std::size_t>(k)] / std::sqrt(binomial(n, k));

    // d Phi_k / d z_i = s_{k-1}(z without z_i) / sqrt(C(N,k)).
    Matrix d_phi = Matrix::Zero(n + 1, n);
    for (int i = 0; i < n; ++i) {
        std::vector<Complex> rest;
        for (int j = 0; j < n; ++j) {
            if (j != i) rest.push_back(z[static_cast<std::size_t>(j)]);
        }
        const auto s_rest = elementary_symmetric_all(rest);
        for (int k = 1; k <= n; ++k) d_phi(k, i) = s_rest[static_cast<std::size_t>(k) - 1] / std::sqrt(binomial(n, k));
    }

    const double norm2 = phi.squaredNorm();
    Matrix g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex dd = d_phi.col(j).dot(d_phi.col(i));
            const Complex pd = phi.dot(d_phi.col(i));
            const Complex dp = d_phi.col(j).dot(phi);
            g(i, j) = dd / norm2 - pd * dp / (norm2 * norm2);
        }
    }
    return g;
}

}  // namespace stellar::oracle
