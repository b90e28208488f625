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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qhomeo/pauli.hpp"

namespace qhomeo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Every stochastic routine takes one of these explicitly.
using Rng = std::mt19937_64;

/// Independent stream `index` derived from `seed` (splitmix64 mixing).
Rng substream(std::uint64_t seed, std::uint64_t index);

namespace limits {
inline constexpr std::size_t kMaxStateQubits = 12;
/// Explicit k-copy operators (twirl inputs, monomials on n qubits).
inline constexpr std::size_t kMaxOperatorDim = 256;
/// Choi states of k-fold channels, d^{2k}.
inline constexpr std::size_t kMaxChoiDim = 4096;
} // namespace limits

/// Normalized pure state on n qubits. Dense index bit (n - 1 - q) holds qubit
/// q, so qubit 0 is the leftmost tensor factor.
class StateVector {
  public:
    /// |0...0>.
    explicit StateVector(std::size_t n);
    /// Takes ownership of amplitudes; throws unless the length is 2^n and the
    /// norm is 1 within 1e-10.
    StateVector(std::size_t n, CVector amplitudes);

    static StateVector basis(std::size_t n, std::uint64_t index);
    /// Normalizes before validating.
    static StateVector normalized(std::size_t n, CVector amplitudes);

    [[nodiscard]] std::size_t num_qubits() const { return n_; }
    [[nodiscard]] std::size_t dim() const {
        return static_cast<std::size_t>(amps_.size());
    }
    [[nodiscard]] const CVector &amplitudes() const { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }

    /// |this> (x) |tail>.
    [[nodiscard]] StateVector tensor(const StateVector &tail) const;
    /// U |this>; U must be dim x dim.
    [[nodiscard]] StateVector evolve(const CMatrix &u) const;
    [[nodiscard]] CMatrix density() const { return amps_ * amps_.adjoint(); }

  private:
    std::size_t n_;
    CVector amps_;
};

/// Probability that qubits [first, n) all read 0 in the computational basis.
double prob_trailing_zeros(const StateVector &psi, std::size_t first);

StateVector haar_state(std::size_t n, Rng &rng);
/// Haar unitary of dimension `dim` <= kMaxOperatorDim (QR of a Ginibre matrix with the phases of
/// R's diagonal moved into Q).
CMatrix haar_unitary(std::size_t dim, Rng &rng);

bool is_unitary(const CMatrix &u, double tol = 1e-12);
bool is_hermitian(const CMatrix &a, double tol = 1e-12);
CMatrix kron(const CMatrix &a, const CMatrix &b);
/// A^{(x) k}.
CMatrix tensor_power(const CMatrix &a, std::size_t k);

/// Sum of singular values of a Hermitian matrix.
double trace_norm_hermitian(const CMatrix &a);
/// ||a - b||_1 / 2 for Hermitian a, b.
double trace_distance(const CMatrix &a, const CMatrix &b);

// --- Paulis -------------------------------------------------------------

/// Dense mask (bit n-1-q for qubit q) of a length-n bit vector.
std::uint64_t dense_mask(const f2::BinVec &bits);

/// Table index of a phaseless Pauli: x bits in the low n bits, z bits in the
/// next n bits, qubit q at bit q of each block.
std::uint64_t pauli_index(const PauliString &p);
PauliString pauli_from_index(std::size_t n, std::uint64_t index);

CMatrix pauli_matrix(const PauliString &p);
CVector apply_pauli(const PauliString &p, const CVector &v);

/// <psi|P|psi>, real part (exact for Hermitian P).
double expectation(const StateVector &psi, const PauliString &p);

/// All 4^n values tr(P psi) indexed by pauli_index.
std::vector<double> pauli_expectations(const StateVector &psi);

/// p_psi(P) = tr^2(P psi) / d over the 4^n phaseless Paulis.
std::vector<double> pauli_distribution(const StateVector &psi);

/// (f * g)(P) = sum_Q f(Q) g(Q P), via a fast Walsh-Hadamard transform over
/// the symplectic index space.
std::vector<double> xor_convolve(const std::vector<double> &f,
                                 const std::vector<double> &g);

/// q_psi(P) = |<P|psi (x) psi>|^2 in the Bell basis |P> = (I (x) P)|I>, by
/// simulating the Bell-measurement circuit (CNOT then H on each register pair)
/// on psi (x) psi.
std::vector<double> bell_distribution_measured(const StateVector &psi);

/// Same distribution from the overlap formula sum_i psi_i (P psi)_i.
std::vector<double> bell_distribution_overlap(const StateVector &psi);

enum class BellPath {
    /// Two simulated Bell-basis measurements, outcomes multiplied.
    Measurement,
    /// Direct draw from the (p * p) table.
    Table,
};

/// Draws phaseless Paulis from the Bell difference distribution of one state.
/// Tables are built once at construction.
class BellDifferenceSampler {
  public:
    BellDifferenceSampler(const StateVector &psi, BellPath path);

    PauliString sample(Rng &rng);
    std::uint64_t sample_index(Rng &rng);

    [[nodiscard]] std::size_t num_qubits() const { return n_; }
    [[nodiscard]] BellPath path() const { return path_; }

  private:
    std::size_t n_;
    BellPath path_;
    std::discrete_distribution<std::uint64_t> dist_;
};

PauliString bell_difference_sample(const StateVector &psi, Rng &rng,
                                   BellPath path = BellPath::Measurement);

// --- Adaptive queries ---------------------------------------------------

/// One unitary draw on n qubits.
using UnitarySampler = std::function<CMatrix(Rng &)>;

/// Monte Carlo estimate of E_U Psi_U(V) with
/// |Psi_U(V)> = (U (x) I) V_k ... (U (x) I) V_1 |0>^{n + n'}.
/// Every V_i acts on n + n' qubits; U on the first n.
CMatrix adaptive_output_state(std::size_t n, std::size_t n_ancilla,
                              const UnitarySampler &sampler,
                              const std::vector<CMatrix> &queries,
                              std::size_t samples, Rng &rng);

/// Pure output Psi_U(V) for one fixed U.
CVector adaptive_output_vector(std::size_t n, std::size_t n_ancilla,
                               const CMatrix &u, const std::vector<CMatrix> &queries);

} // namespace qhomeo
