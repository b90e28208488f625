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
#include "qhomeo/clifford.hpp"

#include <algorithm>
#include <cmath>

#include "qhomeo/errors.hpp"

namespace qhomeo {

CliffordOp::CliffordOp(f2::BinMat symplectic, f2::BinVec signs)
    : n_(symplectic.rows() / 2), symplectic_(std::move(symplectic)),
      signs_(std::move(signs)) {
    if (!f2::is_symplectic(symplectic_)) {
        throw ValidationError("CliffordOp: matrix does not preserve the symplectic form");
    }
    if (signs_.size() != 2 * n_) {
        throw ValidationError("CliffordOp: sign vector must have length 2n");
    }
    build_images();
}

void CliffordOp::build_images() {
    images_.clear();
    images_.reserve(2 * n_);
    for (std::size_t j = 0; j < 2 * n_; ++j) {
        images_.push_back(PauliString::from_symplectic(symplectic_.col(j), signs_.get(j)));
    }
}

CliffordOp CliffordOp::identity(std::size_t n) {
    return CliffordOp(f2::BinMat::identity(2 * n), f2::BinVec(2 * n));
}

CliffordOp CliffordOp::from_images(const std::vector<PauliString> &x_images,
                                   const std::vector<PauliString> &z_images) {
    const std::size_t n = x_images.size();
    if (z_images.size() != n) {
        throw ValidationError("CliffordOp::from_images: need n X images and n Z images");
    }
    std::vector<f2::BinVec> columns;
    f2::BinVec signs(2 * n);
    std::size_t j = 0;
    for (const auto *list : {&x_images, &z_images}) {
        for (const auto &p : *list) {
            if (p.num_qubits() != n || !p.is_hermitian()) {
                throw ValidationError("CliffordOp::from_images: images must be Hermitian n-qubit Paulis");
            }
            columns.push_back(p.symplectic());
            signs.set(j++, p.hermitian_phase() == 2);
        }
    }
    return CliffordOp(f2::BinMat::from_columns(columns, 2 * n), signs);
}

namespace {

std::vector<PauliString> generator_list(std::size_t n, char which) {
    std::vector<PauliString> out;
    for (std::size_t q = 0; q < n; ++q) {
        out.push_back(PauliString::single(n, q, which));
    }
    return out;
}

} // namespace

CliffordOp CliffordOp::hadamard(std::size_t n, std::size_t q) {
    auto xs = generator_list(n, 'X');
    auto zs = generator_list(n, 'Z');
    std::swap(xs.at(q), zs.at(q));
    return from_images(xs, zs);
}

CliffordOp CliffordOp::phase_gate(std::size_t n, std::size_t q) {
    auto xs = generator_list(n, 'X');
    auto zs = generator_list(n, 'Z');
    xs.at(q) = PauliString::single(n, q, 'Y');
    return from_images(xs, zs);
}

CliffordOp CliffordOp::cnot(std::size_t n, std::size_t control, std::size_t target) {
    if (control == target || control >= n || target >= n) {
        throw ValidationError("CliffordOp::cnot: bad qubit indices");
    }
    auto xs = generator_list(n, 'X');
    auto zs = generator_list(n, 'Z');
    xs[control] = pauli_mul(xs[control], PauliString::single(n, target, 'X'));
    zs[target] = pauli_mul(PauliString::single(n, control, 'Z'), zs[target]);
    return from_images(xs, zs);
}

CliffordOp CliffordOp::pauli(const PauliString &p) {
    const std::size_t n = p.num_qubits();
    auto xs = generator_list(n, 'X');
    auto zs = generator_list(n, 'Z');
    for (auto *list : {&xs, &zs}) {
        for (auto &g : *list) {
            if (!commutes(p, g)) {
                g = g.negated();
            }
        }
    }
    return from_images(xs, zs);
}

PauliString CliffordOp::conjugate(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw ValidationError("CliffordOp::conjugate: qubit count mismatch");
    }
    // i^a X^x Z^z  ->  i^a prod_j C X_j C^dag ^{x_j} prod_j C Z_j C^dag ^{z_j}
    PauliString out(n_);
    out = PauliString(out.x(), out.z(), p.phase());
    for (std::size_t j = 0; j < n_; ++j) {
        if (p.x().get(j)) {
            out = pauli_mul(out, images_[j]);
        }
    }
    for (std::size_t j = 0; j < n_; ++j) {
        if (p.z().get(j)) {
            out = pauli_mul(out, images_[n_ + j]);
        }
    }
    return out;
}

CliffordOp CliffordOp::inverse() const {
    const f2::BinMat j = f2::symplectic_form(n_);
    const CliffordOp unsigned_inverse(j * symplectic_.transpose() * j, f2::BinVec(2 * n_));
    // unsigned_inverse . this is a Pauli frame F; the inverse is F . unsigned_inverse.
    const CliffordOp frame = compose(unsigned_inverse, *this);
    return compose(CliffordOp(f2::BinMat::identity(2 * n_), frame.signs()), unsigned_inverse);
}

PauliString clifford_conjugate(const CliffordOp &c, const PauliString &p) {
    return c.conjugate(p);
}

CliffordOp compose(const CliffordOp &second, const CliffordOp &first) {
    const std::size_t n = first.num_qubits();
    if (second.num_qubits() != n) {
        throw ValidationError("compose: qubit count mismatch");
    }
    std::vector<PauliString> xs;
    std::vector<PauliString> zs;
    for (std::size_t j = 0; j < n; ++j) {
        xs.push_back(second.conjugate(first.x_image(j)));
        zs.push_back(second.conjugate(first.z_image(j)));
    }
    return CliffordOp::from_images(xs, zs);
}

namespace {

f2::BinVec random_bits(std::size_t len, Rng &rng) {
    f2::BinVec v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v.set(i, (rng() >> 11) & 1u);
    }
    return v;
}

/// Projection onto the symplectic complement of the chosen pairs.
f2::BinVec project_out(f2::BinVec u, const std::vector<f2::BinVec> &xs,
                       const std::vector<f2::BinVec> &zs) {
    const f2::BinVec original = u;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (f2::symplectic_product(original, zs[i])) {
            u ^= xs[i];
        }
        if (f2::symplectic_product(original, xs[i])) {
            u ^= zs[i];
        }
    }
    return u;
}

} // namespace

CliffordOp random_clifford(std::size_t n, Rng &rng) {
    if (n == 0) {
        throw ValidationError("random_clifford: need n >= 1");
    }
    std::vector<f2::BinVec> xs;
    std::vector<f2::BinVec> zs;
    for (std::size_t j = 0; j < n; ++j) {
        f2::BinVec v;
        do {
            v = project_out(random_bits(2 * n, rng), xs, zs);
        } while (v.is_zero());
        f2::BinVec w;
        do {
            w = project_out(random_bits(2 * n, rng), xs, zs);
        } while (!f2::symplectic_product(v, w));
        xs.push_back(std::move(v));
        zs.push_back(std::move(w));
    }
    std::vector<f2::BinVec> columns(xs);
    columns.insert(columns.end(), zs.begin(), zs.end());
    return CliffordOp(f2::BinMat::from_columns(columns, 2 * n), random_bits(2 * n, rng));
}

std::vector<CliffordOp> enumerate_cliffords(std::size_t n) {
    if (n == 0 || n > 2) {
        throw ValidationError("enumerate_cliffords: only n = 1 or 2 is supported");
    }
    const std::size_t dim = 2 * n;
    const std::uint64_t entries = dim * dim;
    std::vector<f2::BinMat> symplectics;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << entries); ++code) {
        f2::BinMat s(dim, dim);
        for (std::size_t e = 0; e < entries; ++e) {
            if ((code >> e) & 1u) {
                s.set(e / dim, e % dim, true);
            }
        }
        if (f2::is_symplectic(s)) {
            symplectics.push_back(std::move(s));
        }
    }
    std::vector<CliffordOp> out;
    out.reserve(symplectics.size() << dim);
    for (const auto &s : symplectics) {
        for (std::uint64_t sign = 0; sign < (std::uint64_t{1} << dim); ++sign) {
            out.emplace_back(s, f2::BinVec::from_mask(sign, dim));
        }
    }
    return out;
}

CMatrix clifford_to_matrix(const CliffordOp &c, std::size_t max_qubits) {
    const std::size_t n = c.num_qubits();
    if (n > max_qubits || n > limits::kMaxStateQubits) {
        throw ValidationError("clifford_to_matrix: " + std::to_string(n) +
                              " qubits exceeds the dense limit");
    }
    const auto d = Eigen::Index{1} << n;
    // U|0> is the joint +1 eigenvector of the Z images; project a fixed
    // generic vector onto it.
    Rng fixed(0x5eed5eedULL);
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector phi(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const double re = normal(fixed);
        const double im = normal(fixed);
        phi[i] = Complex(re, im);
    }
    for (std::size_t j = 0; j < n; ++j) {
        phi = 0.5 * (phi + apply_pauli(c.z_image(j), phi));
    }
    const double norm = phi.norm();
    if (norm < 1e-8) {
        throw ConsistencyError("clifford_to_matrix: stabilizer projection vanished");
    }
    phi /= norm;
    Eigen::Index arg = 0;
    phi.cwiseAbs().maxCoeff(&arg);
    phi *= std::conj(phi[arg]) / std::abs(phi[arg]);

    // U|b> = prod_{q : b_q = 1} (U X_q U^dag) U|0>
    CMatrix u(d, d);
    for (Eigen::Index col = 0; col < d; ++col) {
        CVector v = phi;
        for (std::size_t q = 0; q < n; ++q) {
            if ((static_cast<std::uint64_t>(col) >> (n - 1 - q)) & 1u) {
                v = apply_pauli(c.x_image(q), v);
            }
        }
        u.col(col) = v;
    }
    return u;
}

StabilizerGroup stabilizer_group_of(const StateVector &psi,
                                    std::optional<std::size_t> expected_t) {
    const std::size_t n = psi.num_qubits();
    if (n > 8) {
        throw ValidationError("stabilizer_group_of: 4^n scan limited to n <= 8");
    }
    constexpr double kTol = 1e-9;
    const auto values = pauli_expectations(psi);
    StabilizerGroup group;
    group.num_qubits = n;
    std::vector<f2::BinVec> vectors;
    for (std::uint64_t idx = 0; idx < values.size(); ++idx) {
        if (std::abs(std::abs(values[idx]) - 1.0) <= kTol) {
            PauliString p = pauli_from_index(n, idx);
            if (values[idx] < 0.0) {
                p = p.negated();
            }
            vectors.push_back(p.symplectic());
            group.elements.push_back(std::move(p));
        }
    }
    const auto basis = f2::rref_basis(vectors);
    if (group.elements.size() != (std::size_t{1} << basis.size())) {
        throw ConsistencyError("stabilizer_group_of: " +
                               std::to_string(group.elements.size()) +
                               " near-stabilizers do not form a group");
    }
    for (const auto &b : basis) {
        for (const auto &p : group.elements) {
            if (p.symplectic() == b) {
                group.generators.push_back(p);
                break;
            }
        }
    }
    for (std::size_t i = 0; i < group.generators.size(); ++i) {
        for (std::size_t j = i + 1; j < group.generators.size(); ++j) {
            if (!commutes(group.generators[i], group.generators[j])) {
                throw ConsistencyError("stabilizer_group_of: generators do not commute");
            }
        }
    }
    if (expected_t && group.generators.size() + *expected_t < n) {
        throw ValidationError("stabilizer_group_of: state is not " +
                              std::to_string(*expected_t) + "-compressible");
    }
    return group;
}

CliffordOp clifford_mapping_to_z(const std::vector<PauliString> &generators,
                                 std::size_t first_target) {
    if (generators.empty()) {
        throw ValidationError("clifford_mapping_to_z: no generators");
    }
    const std::size_t n = generators.front().num_qubits();
    const std::size_t m = generators.size();
    if (first_target + m > n) {
        throw ValidationError("clifford_mapping_to_z: targets exceed qubit count");
    }
    std::vector<f2::BinVec> gs;
    for (const auto &g : generators) {
        if (g.num_qubits() != n || !g.is_hermitian()) {
            throw ValidationError("clifford_mapping_to_z: generators must be Hermitian n-qubit Paulis");
        }
        gs.push_back(g.symplectic());
    }
    if (f2::rank(gs) != m) {
        throw ValidationError("clifford_mapping_to_z: generators are dependent");
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (f2::symplectic_product(gs[i], gs[j])) {
                throw ValidationError("clifford_mapping_to_z: generators do not commute");
            }
        }
    }

    // Partners h_i with <h_i, g_j> = delta_ij and <h_i, h_j> = 0.
    std::vector<f2::BinVec> constraint_rows;
    for (const auto &g : gs) {
        constraint_rows.push_back(f2::swap_halves(g));
    }
    const auto columns = f2::BinMat::from_rows(constraint_rows, 2 * n).transpose().row_list();
    std::vector<f2::BinVec> hs;
    for (std::size_t i = 0; i < m; ++i) {
        f2::BinVec h;
        if (!f2::solve_combination(columns, f2::BinVec::unit(m, i), h)) {
            throw ConsistencyError("clifford_mapping_to_z: no symplectic partner");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (f2::symplectic_product(h, hs[j])) {
                h ^= gs[j];
            }
        }
        hs.push_back(std::move(h));
    }

    // Symplectic basis of the complement of span{g, h}.
    std::vector<f2::BinVec> used(gs);
    used.insert(used.end(), hs.begin(), hs.end());
    std::vector<f2::BinVec> rest = f2::symplectic_complement(used, 2 * n);
    std::vector<f2::BinVec> free_x;
    std::vector<f2::BinVec> free_z;
    while (!rest.empty()) {
        const f2::BinVec a = rest.front();
        auto partner = std::find_if(rest.begin() + 1, rest.end(), [&](const f2::BinVec &b) {
            return f2::symplectic_product(a, b);
        });
        if (partner == rest.end()) {
            throw ConsistencyError("clifford_mapping_to_z: degenerate complement");
        }
        const f2::BinVec b = *partner;
        free_x.push_back(a);
        free_z.push_back(b);
        std::vector<f2::BinVec> next;
        for (const auto &u : rest) {
            f2::BinVec v = u;
            if (f2::symplectic_product(u, b)) {
                v ^= a;
            }
            if (f2::symplectic_product(u, a)) {
                v ^= b;
            }
            if (!v.is_zero()) {
                next.push_back(std::move(v));
            }
        }
        rest = f2::rref_basis(std::move(next));
    }
    if (free_x.size() + m != n) {
        throw ConsistencyError("clifford_mapping_to_z: basis completion failed");
    }

    // D maps X_q, Z_q onto the completed basis; C = D^{-1}.
    std::vector<PauliString> xs(n);
    std::vector<PauliString> zs(n);
    std::size_t free_slot = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (q >= first_target && q < first_target + m) {
            const std::size_t i = q - first_target;
            xs[q] = PauliString::from_symplectic(hs[i]);
            zs[q] = PauliString::from_symplectic(gs[i], generators[i].hermitian_phase() == 2);
        } else {
            xs[q] = PauliString::from_symplectic(free_x[free_slot]);
            zs[q] = PauliString::from_symplectic(free_z[free_slot]);
            ++free_slot;
        }
    }
    return CliffordOp::from_images(xs, zs).inverse();
}

} // namespace qhomeo
