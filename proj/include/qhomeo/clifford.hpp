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
#include <optional>
#include <vector>

#include "qhomeo/densesim.hpp"
#include "qhomeo/f2.hpp"
#include "qhomeo/pauli.hpp"

namespace qhomeo {

/// Clifford unitary modulo global phase, stored as its action on the Pauli
/// generators: column j of the 2n x 2n symplectic matrix is the image of X_j,
/// column n + j the image of Z_j, and signs[j] marks a negative image.
class CliffordOp {
  public:
    CliffordOp() = default;
    /// Throws ValidationError unless S^T J S = J.
    CliffordOp(f2::BinMat symplectic, f2::BinVec signs);

    static CliffordOp identity(std::size_t n);
    /// Images must be Hermitian, pairwise satisfy the canonical commutation
    /// relations, and act on n qubits.
    static CliffordOp from_images(const std::vector<PauliString> &x_images,
                                  const std::vector<PauliString> &z_images);

    static CliffordOp hadamard(std::size_t n, std::size_t q);
    /// S = diag(1, i).
    static CliffordOp phase_gate(std::size_t n, std::size_t q);
    static CliffordOp cnot(std::size_t n, std::size_t control, std::size_t target);
    /// Conjugation by a Pauli operator.
    static CliffordOp pauli(const PauliString &p);

    [[nodiscard]] std::size_t num_qubits() const { return n_; }
    [[nodiscard]] const f2::BinMat &symplectic() const { return symplectic_; }
    [[nodiscard]] const f2::BinVec &signs() const { return signs_; }
    [[nodiscard]] const PauliString &x_image(std::size_t j) const { return images_[j]; }
    [[nodiscard]] const PauliString &z_image(std::size_t j) const {
        return images_[n_ + j];
    }

    /// C P C^dag with exact phase.
    [[nodiscard]] PauliString conjugate(const PauliString &p) const;
    [[nodiscard]] CliffordOp inverse() const;

    friend bool operator==(const CliffordOp &a, const CliffordOp &b) {
        return a.symplectic_ == b.symplectic_ && a.signs_ == b.signs_;
    }

  private:
    void build_images();

    std::size_t n_ = 0;
    f2::BinMat symplectic_;
    f2::BinVec signs_;
    std::vector<PauliString> images_;
};

PauliString clifford_conjugate(const CliffordOp &c, const PauliString &p);

/// The Clifford acting as `first` followed by `second`.
CliffordOp compose(const CliffordOp &second, const CliffordOp &first);

/// Exactly uniform over C_n / U(1): a uniformly random symplectic basis
/// (images of X_j, Z_j picked pair by pair inside the symplectic complement of
/// the earlier pairs) with independent uniform signs.
CliffordOp random_clifford(std::size_t n, Rng &rng);

/// Every element of C_n / U(1) for n <= 2 (24 and 11520 elements).
std::vector<CliffordOp> enumerate_cliffords(std::size_t n);

/// Dense unitary, fixed up to global phase by making the largest entry of the
/// first column real and positive.
CMatrix clifford_to_matrix(const CliffordOp &c,
                           std::size_t max_qubits = limits::kMaxStateQubits);

/// Abelian group of Paulis stabilizing a state up to sign. Elements carry the
/// sign of their eigenvalue, so P psi = psi for every stored P.
struct StabilizerGroup {
    std::size_t num_qubits = 0;
    /// Independent generators in reduced echelon order of their bit vectors.
    std::vector<PauliString> generators;
    std::vector<PauliString> elements;

    [[nodiscard]] std::size_t size() const { return elements.size(); }
    /// n - log2 |G|.
    [[nodiscard]] std::size_t compression() const {
        return num_qubits - generators.size();
    }
};

/// Scans all 4^n Paulis for |<psi|P|psi>| = 1 within 1e-9. If `expected_t`
/// is given, a group smaller than 2^{n - t} is a ValidationError.
StabilizerGroup stabilizer_group_of(const StateVector &psi,
                                    std::optional<std::size_t> expected_t = std::nullopt);

/// Clifford C with C g_i C^dag = Z_{first_target + i} for commuting,
/// independent, signed Hermitian Paulis g_i.
CliffordOp clifford_mapping_to_z(const std::vector<PauliString> &generators,
                                 std::size_t first_target);

} // namespace qhomeo
