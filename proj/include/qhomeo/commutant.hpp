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

#include <cstddef>
#include <string>
#include <vector>

#include "qhomeo/densesim.hpp"
#include "qhomeo/f2.hpp"

namespace qhomeo {

/// Omega(V, M) on k copies. Columns of V are the rows of `span`, an RREF
/// basis of an even-weight subspace of F_2^k; `phases` holds M (symmetric,
/// zero diagonal).
struct PauliMonomial {
    std::size_t k = 0;
    std::vector<f2::BinVec> span;
    f2::BinMat phases;

    [[nodiscard]] std::size_t order() const { return span.size(); }
    [[nodiscard]] f2::BinMat v_matrix() const;
    /// "V=[0110,1001] M=[01,10]"-style label, stable across runs.
    [[nodiscard]] std::string label() const;
    bool operator==(const PauliMonomial &o) const;
};

inline constexpr std::size_t kMaxMonomialCopies = 6;

/// prod_{i=0}^{k-2} (2^i + 1).
std::size_t commutant_dimension(std::size_t k);

/// One representative per basis element of the Clifford commutant, ordered by
/// (m, V, M). Throws if the count disagrees with commutant_dimension.
std::vector<PauliMonomial> enumerate_monomials(std::size_t k);

/// Single-qubit factor omega on (C^2)^{(x) k}, copy r at qubit r.
CMatrix monomial_site_matrix(const PauliMonomial &mono);

/// Omega = omega^{(x) n}, reordered so copy r occupies qubits [r n, (r+1) n).
CMatrix monomial_matrix(const PauliMonomial &mono, std::size_t n);
/// Same reordering for an arbitrary site operator on k qubits.
CMatrix site_power(const CMatrix &site, std::size_t k, std::size_t n);

/// k - log_2 tr(a^dag b) for single-site operators of k qubits; throws
/// ConsistencyError if the trace is not a power of two within 1e-6.
int site_alpha(const CMatrix &a, const CMatrix &b, std::size_t k);
/// alpha(Omega, Omega'); independent of n since tr(Omega^dag Omega') = (tr omega^dag omega')^n.
int alpha(const PauliMonomial &a, const PauliMonomial &b);

/// m_p with ||Omega||_1 = d^{k - m_p}.
int trace_norm_exponent(const PauliMonomial &mono);

// --- permutations -------------------------------------------------------

using Permutation = std::vector<std::size_t>;

/// All permutations of [k] in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t k);
std::size_t cycle_count(const Permutation &p);
Permutation compose_perm(const Permutation &a, const Permutation &b); // a after b
Permutation inverse_perm(const Permutation &p);

/// T_pi on (C^d)^{(x) k}: copy i of the input lands in copy pi(i).
CMatrix permutation_operator(const Permutation &pi, std::size_t d);

// --- Gram and Weingarten ------------------------------------------------

struct WeingartenTable {
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<PauliMonomial> monomials;
    std::vector<std::vector<int>> alpha;
    /// G = d^{-alpha}.
    RMatrix gram;
    /// G^{-1}, or its pseudoinverse when `pseudo` is set.
    RMatrix weingarten;
    bool pseudo = false;
    double min_singular_value = 0.0;
};

inline constexpr double kPseudoTolerance = 1e-10;

/// Symmetric (pseudo)inverse by eigendecomposition; eigenvalues below
/// kPseudoTolerance times the largest are dropped and flagged.
RMatrix symmetric_pinv(const RMatrix &g, bool &pseudo, double &min_sv);

/// Gram part only (weingarten left empty).
WeingartenTable gram_matrix(std::size_t k, std::size_t n);
WeingartenTable weingarten_table(std::size_t k, std::size_t n);
/// Table for n qubits reusing the monomials and alpha values of `base`.
WeingartenTable rescale_table(const WeingartenTable &base, std::size_t n);

/// (1/d^k) sum_{Omega, Omega'} W Omega' tr(Omega^dag O) applied to the first k
/// copies of O; O may carry a trailing ancilla of dimension `ancilla_dim`.
CMatrix clifford_twirl(const CMatrix &o, const WeingartenTable &table,
                       std::size_t ancilla_dim = 1);
CMatrix clifford_twirl(const CMatrix &o, std::size_t k, std::size_t n);

/// Lambda_{pi, sigma} = tr(T_pi^dag T_sigma) = d^{#cycles(pi sigma^-1)}.
RMatrix haar_gram(std::size_t k, std::size_t d);

/// sum_{pi,sigma} (Lambda^+)_{pi sigma} T_sigma tr(T_pi^dag O).
CMatrix haar_twirl(const CMatrix &o, std::size_t k, std::size_t d,
                   std::size_t ancilla_dim = 1);
/// (1/d^k) sum_pi tr(T_pi^dag O) T_pi.
CMatrix approx_haar_twirl(const CMatrix &o, std::size_t k, std::size_t d,
                          std::size_t ancilla_dim = 1);

/// (A (x) I) with the identity on the ancilla, and the partial trace
/// tr_sys((A^dag (x) I) O) over a system of dimension a.rows().
CMatrix partial_overlap(const CMatrix &a, const CMatrix &o, std::size_t ancilla_dim);

// --- Vandermonde bound --------------------------------------------------

struct VandermondeReport {
    std::size_t k = 0;
    /// Row sums of |M^{-1}| (rounded from exact rationals) and the bounds
    /// 30 * 2^{k i - i(i-1)/2}, rows i = 1..k.
    std::vector<double> row_sums;
    std::vector<double> bounds;
    double max_ratio = 0.0;
    bool all_satisfied = false;
};

inline constexpr std::size_t kMaxVandermonde = 16;

/// M_{ij} = 2^{-ij} for i, j = 1..k, inverted exactly over the rationals.
VandermondeReport vandermonde_bound_check(std::size_t k);

} // namespace qhomeo
