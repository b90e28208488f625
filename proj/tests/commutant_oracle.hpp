// Copyright 2026 The qhomeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Independent reference computations for commutant and twirl checks.

#include <cstdint>
#include <vector>

#include "qhomeo/clifford.hpp"
#include "qhomeo/densesim.hpp"

namespace oracle {

using qhomeo::CMatrix;

/// Gaussian binomial [a choose b]_2.
inline std::uint64_t gaussian_binomial(unsigned a, unsigned b) {
    if (b > a) {
        return 0;
    }
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (unsigned i = 0; i < b; ++i) {
        num *= (std::uint64_t{1} << (a - i)) - 1;
        den *= (std::uint64_t{1} << (i + 1)) - 1;
    }
    return num / den;
}

/// Subspaces of the (k-1)-dimensional even-weight code, each with all
/// 2^{m(m-1)/2} phase matrices.
inline std::uint64_t monomial_count(unsigned k) {
    std::uint64_t total = 0;
    for (unsigned m = 0; m + 1 <= k; ++m) {
        total += gaussian_binomial(k - 1, m) << (m * (m - 1) / 2);
    }
    return total;
}

/// U^{(x) k} (x) I_ancilla.
inline CMatrix copies(const CMatrix &u, std::size_t k, std::size_t ancilla_dim) {
    CMatrix out = qhomeo::tensor_power(u, k);
    if (ancilla_dim > 1) {
        out = qhomeo::kron(out, CMatrix::Identity(static_cast<Eigen::Index>(ancilla_dim),
                                                  static_cast<Eigen::Index>(ancilla_dim)));
    }
    return out;
}

/// Matrices of every element of the n-qubit Clifford group (n <= 2) up to
/// global phase, split as symplectic representatives (all signs +) and the
/// Pauli frames: each group element is U_S P for exactly one pair.
struct CliffordGroupMatrices {
    std::vector<CMatrix> symplectic_reps;
    std::vector<CMatrix> paulis;
};

inline CliffordGroupMatrices clifford_group_matrices(std::size_t n) {
    CliffordGroupMatrices g;
    for (const auto &c : qhomeo::enumerate_cliffords(n)) {
        if (c.signs().is_zero()) {
            g.symplectic_reps.push_back(qhomeo::clifford_to_matrix(c));
        }
    }
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * n)); ++idx) {
        g.paulis.push_back(qhomeo::pauli_matrix(qhomeo::pauli_from_index(n, idx)));
    }
    return g;
}

/// Average of C^{(x) k} O C^{dag (x) k} over the whole Clifford group.
inline CMatrix brute_clifford_twirl(const CMatrix &o, std::size_t k, const CliffordGroupMatrices &g,
                                    std::size_t ancilla_dim = 1) {
    CMatrix frame = CMatrix::Zero(o.rows(), o.cols());
    for (const auto &p : g.paulis) {
        const CMatrix pk = copies(p, k, ancilla_dim);
        frame += pk * o * pk.adjoint();
    }
    frame /= static_cast<double>(g.paulis.size());
    CMatrix out = CMatrix::Zero(o.rows(), o.cols());
    for (const auto &u : g.symplectic_reps) {
        const CMatrix uk = copies(u, k, ancilla_dim);
        out.noalias() += uk * frame * uk.adjoint();
    }
    return out / static_cast<double>(g.symplectic_reps.size());
}

inline CMatrix random_operator(std::size_t dim, qhomeo::Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(i, j) = qhomeo::Complex(g(rng), g(rng));
        }
    }
    return m;
}

} // namespace oracle
