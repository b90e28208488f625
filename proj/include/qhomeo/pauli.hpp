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

#include <cstdint>
#include <string>
#include <string_view>

#include "qhomeo/f2.hpp"

namespace qhomeo {

/// n-qubit Pauli operator i^phase * X^x Z^z, with the X factor to the left of
/// the Z factor on every qubit. Under this convention Y = i X Z, so the
/// Hermitian Pauli with bits (x, z) carries phase |x & z| (mod 4) and its
/// negation carries |x & z| + 2.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::size_t n) : x_(n), z_(n) {}
    PauliString(f2::BinVec x, f2::BinVec z, unsigned phase = 0);

    /// Hermitian Pauli with the given bits and sign bit (true = negative).
    static PauliString hermitian(f2::BinVec x, f2::BinVec z, bool negative = false);
    /// Parses labels like "XIZ", "-YY", "+iX", "-iZ". Qubit 0 is the first
    /// letter; the optional prefix is the coefficient of the Hermitian label.
    static PauliString from_string(std::string_view label);
    /// Hermitian Pauli from a length-2n symplectic vector (x-block then z-block).
    static PauliString from_symplectic(const f2::BinVec &v, bool negative = false);
    static PauliString single(std::size_t n, std::size_t qubit, char which);

    [[nodiscard]] std::size_t num_qubits() const { return x_.size(); }
    [[nodiscard]] const f2::BinVec &x() const { return x_; }
    [[nodiscard]] const f2::BinVec &z() const { return z_; }
    [[nodiscard]] unsigned phase() const { return phase_; }
    [[nodiscard]] f2::BinVec symplectic() const { return x_.concat(z_); }

    /// Count of Y sites, |x & z|.
    [[nodiscard]] std::size_t y_count() const { return (x_ & z_).weight(); }
    /// Phase relative to the Hermitian label: 0 -> +, 1 -> +i, 2 -> -, 3 -> -i.
    [[nodiscard]] unsigned hermitian_phase() const;
    [[nodiscard]] bool is_hermitian() const { return hermitian_phase() % 2 == 0; }
    [[nodiscard]] bool is_identity() const { return x_.is_zero() && z_.is_zero(); }
    [[nodiscard]] std::size_t weight() const;

    /// Same operator with the phase dropped to the Hermitian (+) label.
    [[nodiscard]] PauliString phaseless() const;
    [[nodiscard]] PauliString negated() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    f2::BinVec x_;
    f2::BinVec z_;
    unsigned phase_ = 0;
};

/// Operator product P Q with exact phase.
PauliString pauli_mul(const PauliString &p, const PauliString &q);

/// Commutator sign chi(P, Q) = tr(P Q P^dag Q^dag) / d: +1 if P and Q commute,
/// -1 if they anticommute.
int chi(const PauliString &p, const PauliString &q);

bool commutes(const PauliString &p, const PauliString &q);

} // namespace qhomeo
