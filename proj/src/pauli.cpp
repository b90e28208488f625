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
#include "qhomeo/pauli.hpp"

#include "qhomeo/errors.hpp"

namespace qhomeo {

PauliString::PauliString(f2::BinVec x, f2::BinVec z, unsigned phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3u) {
    if (x_.size() != z_.size()) {
        throw ValidationError("PauliString: x and z lengths differ");
    }
}

PauliString PauliString::hermitian(f2::BinVec x, f2::BinVec z, bool negative) {
    PauliString p(std::move(x), std::move(z), 0);
    p.phase_ = static_cast<unsigned>(p.y_count() + (negative ? 2 : 0)) & 3u;
    return p;
}

PauliString PauliString::from_string(std::string_view label) {
    unsigned coeff = 0;
    if (!label.empty() && (label.front() == '+' || label.front() == '-')) {
        coeff = label.front() == '-' ? 2 : 0;
        label.remove_prefix(1);
        if (!label.empty() && label.front() == 'i') {
            coeff += 1;
            label.remove_prefix(1);
        }
    }
    const std::size_t n = label.size();
    f2::BinVec x(n);
    f2::BinVec z(n);
    for (std::size_t q = 0; q < n; ++q) {
        switch (label[q]) {
        case 'I':
            break;
        case 'X':
            x.set(q, true);
            break;
        case 'Z':
            z.set(q, true);
            break;
        case 'Y':
            x.set(q, true);
            z.set(q, true);
            break;
        default:
            throw ValidationError("PauliString::from_string: bad letter in '" +
                                  std::string(label) + "'");
        }
    }
    PauliString p = hermitian(std::move(x), std::move(z));
    p.phase_ = (p.phase_ + coeff) & 3u;
    return p;
}

PauliString PauliString::from_symplectic(const f2::BinVec &v, bool negative) {
    if (v.size() % 2 != 0) {
        throw ValidationError("PauliString::from_symplectic: odd length");
    }
    const std::size_t n = v.size() / 2;
    return hermitian(v.slice(0, n), v.slice(n, n), negative);
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, char which) {
    std::string label(n, 'I');
    label.at(qubit) = which;
    return from_string(label);
}

unsigned PauliString::hermitian_phase() const {
    return static_cast<unsigned>(phase_ + 4 - (y_count() & 3u)) & 3u;
}

std::size_t PauliString::weight() const { return (x_ ^ z_ ^ (x_ & z_)).weight(); }

PauliString PauliString::phaseless() const { return hermitian(x_, z_, false); }

PauliString PauliString::negated() const {
    PauliString p = *this;
    p.phase_ = (p.phase_ + 2) & 3u;
    return p;
}

std::string PauliString::to_string() const {
    static constexpr const char *prefix[4] = {"+", "+i", "-", "-i"};
    std::string s = prefix[hermitian_phase()];
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        const bool bx = x_.get(q);
        const bool bz = z_.get(q);
        s += bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
    }
    return s;
}

PauliString pauli_mul(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw ValidationError("pauli_mul: qubit count mismatch");
    }
    // X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}
    const unsigned swap_sign = p.z().dot(q.x()) ? 2u : 0u;
    return PauliString(p.x() ^ q.x(), p.z() ^ q.z(),
                       p.phase() + q.phase() + swap_sign);
}

bool commutes(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw ValidationError("commutes: qubit count mismatch");
    }
    return p.x().dot(q.z()) == p.z().dot(q.x());
}

int chi(const PauliString &p, const PauliString &q) {
    return commutes(p, q) ? 1 : -1;
}

} // namespace qhomeo
