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

// Brute-force ground truth in the literal 2^N tensor space. Nothing here calls
// into the star dictionary or the permanent code; it is written for
// obviousness, with dense matrices and explicit permutation sums.
//
// Basis ordering: |n_1 n_2 ... n_N> has index sum_i n_i 2^(N-i), so the first
// qubit is the most significant bit and |x> (x) |b> has index 2 idx(x) + b.

#ifndef STELLAR_ORACLE_H
#define STELLAR_ORACLE_H

#include <string>
#include <vector>

#include "stellar/core.h"

namespace stellar::oracle {

inline constexpr int kMaxQubits = 10;
inline constexpr int kMaxOperatorQubits = 8;

struct FullState {
    int n_qubits = 0;
    Eigen::VectorXcd vector;
};

struct CollectiveOperators {
    int n_qubits = 0;
    Eigen::MatrixXcd q_plus;
    Eigen::MatrixXcd q_minus;
    Eigen::MatrixXcd k_op;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_residual = 0.0;
};

using Report = std::vector<CheckResult>;

bool all_pass(const Report &report);

/// |N;k>: every weight-k bit string with amplitude sqrt(k!(N-k)!/N!).
FullState build_dicke(int n, int k);

/// Columns are |N;0>, ..., |N;N>.
Eigen::MatrixXcd dicke_basis(int n);

CollectiveOperators build_collective(int n);

/// Unsymmetrized |z_1> (x) ... (x) |z_N>.
FullState product_state(const StarSet &stars);

struct SymmetrizedProduct {
    FullState state;     // normalized
    double prenorm_sq;   // squared norm of the raw sum over S_N
};

/// Literal sum over all N! orderings of |z_1> (x) ... (x) |z_N>. N <= 10.
SymmetrizedProduct symmetrized_product(const StarSet &stars);

/// exp(xi q+ - conj(xi) q-) |N;0> with the exponential taken of the dense matrix.
FullState displaced_ground(int n, Complex xi);

/// The qubit cos|xi| |0> + (xi/|xi|) sin|xi| |1>, i.e. z = (xi/|xi|) tan|xi|;
/// displaced_ground(n, xi) is its N-fold tensor power.
Star displacement_star(Complex xi);

/// Dense exp(m) by scaling and squaring around a Taylor core. Throws ExpmNoConvergence.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd &m);

/// exp(m) v without forming exp(m): the Taylor series applied to v over
/// enough substeps that each has 1-norm at most 1/2. Throws ExpmNoConvergence.
Eigen::VectorXcd expm_action(const Eigen::MatrixXcd &m, const Eigen::VectorXcd &v);

/// sum_k c_k |N;k>.
FullState embed(const SymmetricState &state);

/// Dicke coordinates <N;k|v>, k = 0..N (not renormalized).
std::vector<Complex> project(const FullState &state);

/// |<a|b>| in the tensor space.
double fidelity(const FullState &a, const FullState &b);

/// Commutator, nilpotency, trilinear, A_kappa and su(2) identities, N <= 8.
Report check_algebra(int n);

/// Ladder actions, the F(N, l) factorization, repeated raising and Dicke orthonormality.
Report check_ladder(int n);

struct RecursionTerm {
    int k = 0;
    double coeff_zero = 0.0;  // sqrt((N-k)/N), weight of |N-1;k> (x) |0>
    double coeff_one = 0.0;   // sqrt(k/N), weight of |N-1;k-1> (x) |1>
    double residual = 0.0;
};

struct RecursionReport {
    int n_qubits = 0;
    std::vector<RecursionTerm> terms;
    double max_residual = 0.0;
    bool pass = false;
};

/// |N;k> = sqrt((N-k)/N)|N-1;k>|0> + sqrt(k/N)|N-1;k-1>|1> for every k. 2 <= N <= 10.
RecursionReport check_dicke_recursion(int n);

/// Wirtinger metric of K = ln P_d + sum ln(1 + |z_i|^2) in closed form. Up to a
/// constant, K = ln |Phi(z)|^2 with Phi holomorphic, Phi_k = s_k(z) / sqrt(C(N,k)),
/// so g[i][j] = <d_j Phi|d_i Phi>/|Phi|^2 - <Phi|d_i Phi><d_j Phi|Phi>/|Phi|^4.
/// Throws StarAtInfinity.
Eigen::MatrixXcd fubini_study_metric(const StarSet &stars);

}  // namespace stellar::oracle

#endif
